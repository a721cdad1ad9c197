#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/linalg.hpp"
#include "lrb/rational.hpp"
#include "lrb/support.hpp"

namespace lrb {

// ---------------------------------------------------------------------------
// Elements of the semigroup algebra kS over exact rationals
// ---------------------------------------------------------------------------

/// A finitely supported rational linear combination of semigroup elements.
/// Zero coefficients are never stored.
class AlgebraElement {
 public:
  using TermMap = std::map<ElementId, Rational>;

  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }

  static AlgebraElement basis(ElementId s) {
    AlgebraElement v;
    v.c_[s] = 1;
    return v;
  }

  bool is_zero() const { return c_.empty(); }
  const TermMap& terms() const { return c_; }

  Rational coefficient(ElementId s) const {
    const auto it = c_.find(s);
    return it == c_.end() ? Rational(0) : it->second;
  }

  void add_term(ElementId s, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [s, c] : o.c_) add_term(s, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [s, c] : o.c_) add_term(s, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& r) {
    if (r == 0) {
      c_.clear();
      return *this;
    }
    for (auto& [s, c] : c_) c *= r;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(const Rational& r, AlgebraElement v) {
    v *= r;
    return v;
  }

  bool operator==(const AlgebraElement&) const = default;

 private:
  TermMap c_;
};

/// Bilinear extension of the semigroup product.
inline AlgebraElement multiply(const LeftRegularBand& S, const AlgebraElement& u,
                               const AlgebraElement& v) {
  AlgebraElement out;
  for (const auto& [s, cs] : u.terms())
    for (const auto& [t, ct] : v.terms()) out.add_term(S.at(s, t), cs * ct);
  return out;
}

inline std::string to_string(const AlgebraElement& v, const LeftRegularBand& S) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : v.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += S.label(s);
  }
  return out;
}

/// Dense integer coordinates of v with the common denominator cleared.
/// Rank computations are scale-invariant, so the denominator is dropped.
inline IntVec to_integer_row(const AlgebraElement& v, int dim) {
  Integer lcm = 1;
  for (const auto& [s, c] : v.terms())
    lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntVec row(dim, 0);
  for (const auto& [s, c] : v.terms())
    row[s] = numerator(c) * (lcm / denominator(c));
  return row;
}

inline AlgebraElement from_integer_row(const IntVec& row) {
  AlgebraElement v;
  for (std::size_t s = 0; s < row.size(); ++s)
    if (row[s] != 0) v.add_term(static_cast<ElementId>(s), Rational(row[s]));
  return v;
}

// ---------------------------------------------------------------------------
// Characters and the support map on algebra elements
// ---------------------------------------------------------------------------

/// chi_X(y) = 1 if supp(y) <= X, else 0, extended linearly.
inline Rational character(const SupportLattice& L, const SupportMap& supp, int X,
                          const AlgebraElement& u) {
  Rational out = 0;
  for (const auto& [s, c] : u.terms())
    if (L.leq[supp[s]][X]) out += c;
  return out;
}

/// Linear extension of supp: kS -> kL, expressed in the basis of lattice_as_lrb.
inline AlgebraElement supp_image(const SupportMap& supp, const AlgebraElement& u) {
  AlgebraElement out;
  for (const auto& [s, c] : u.terms()) out.add_term(supp[s], c);
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents
// ---------------------------------------------------------------------------

/// The orthogonal idempotents E_X = sum over Y >= X of mu(X,Y) Y in kL.
/// Their defining identities are re-checked on construction.
inline std::vector<AlgebraElement> lattice_idempotents(const SupportLattice& L) {
  const Mobius mu(L);
  std::vector<AlgebraElement> E(L.size);
  for (int X = 0; X < L.size; ++X)
    for (int Y = 0; Y < L.size; ++Y)
      if (L.leq[X][Y]) E[X].add_term(Y, Rational(mu(X, Y)));

  const LeftRegularBand kL = lattice_as_lrb(L);
  AlgebraElement total;
  for (int X = 0; X < L.size; ++X) {
    total += E[X];
    for (int Y = 0; Y < L.size; ++Y) {
      const AlgebraElement p = multiply(kL, E[X], E[Y]);
      if (X == Y ? !(p == E[X]) : !p.is_zero())
        throw std::logic_error("lattice idempotents fail orthogonality at (" +
                               L.labels[X] + ", " + L.labels[Y] + ")");
    }
  }
  if (!(total == AlgebraElement::basis(L.bottom)))
    throw std::logic_error("lattice idempotents do not sum to the identity");
  return E;
}

/// Representatives feeding the idempotent recursion: one element of kS per
/// lattice class, supported on that class, coefficients summing to 1.
inline std::vector<AlgebraElement> smallest_representatives(const SupportLattice& L) {
  std::vector<AlgebraElement> reps(L.size);
  for (int X = 0; X < L.size; ++X)
    reps[X] = AlgebraElement::basis(L.members[X][0]);
  return reps;
}

inline std::vector<AlgebraElement> uniform_representatives(const SupportLattice& L) {
  std::vector<AlgebraElement> reps(L.size);
  for (int X = 0; X < L.size; ++X) {
    const Rational w(1, static_cast<int>(L.members[X].size()));
    for (ElementId s : L.members[X]) reps[X].add_term(s, w);
  }
  return reps;
}

/// Representatives adapted to a base element y: for X >= supp(y) the default
/// representative x is replaced by y*x, which has the same support and lies
/// above y. Used by the subalgebra checks.
inline std::vector<AlgebraElement> shifted_representatives(
    const LeftRegularBand& S, const SupportLattice& L, const SupportMap& supp,
    ElementId y) {
  std::vector<AlgebraElement> reps = smallest_representatives(L);
  const int Y = supp[y];
  for (int X = 0; X < L.size; ++X)
    if (L.leq[Y][X])
      reps[X] = AlgebraElement::basis(S.at(y, L.members[X][0]));
  return reps;
}

struct IdempotentSystem {
  std::vector<AlgebraElement> representative;  // one per lattice index
  std::vector<AlgebraElement> idempotent;      // e_X, one per lattice index
};

/// Builds the family e_X = x - sum over Y > X of x e_Y, descending from the
/// top of the lattice. Requires an identity.
inline IdempotentSystem semigroup_idempotents(const LeftRegularBand& S,
                                              const SupportLattice& L,
                                              const SupportMap& supp,
                                              std::vector<AlgebraElement> reps) {
  if (!S.identity())
    throw std::invalid_argument("semigroup_idempotents requires an identity");
  if (static_cast<int>(reps.size()) != L.size)
    throw std::invalid_argument("one representative per lattice class required");
  for (int X = 0; X < L.size; ++X) {
    Rational total = 0;
    for (const auto& [s, c] : reps[X].terms()) {
      if (supp[s] != X)
        throw std::invalid_argument("representative for " + L.labels[X] +
                                    " uses an element of different support");
      total += c;
    }
    if (total != 1)
      throw std::invalid_argument("representative coefficients for " +
                                  L.labels[X] + " do not sum to 1");
  }

  std::vector<AlgebraElement> e(L.size);
  for (int X = L.size - 1; X >= 0; --X) {
    e[X] = reps[X];
    for (int Y = X + 1; Y < L.size; ++Y)
      if (L.less(X, Y)) e[X] -= multiply(S, reps[X], e[Y]);
  }
  return IdempotentSystem{std::move(reps), std::move(e)};
}

inline IdempotentSystem semigroup_idempotents(const LeftRegularBand& S,
                                              const SupportLattice& L,
                                              const SupportMap& supp) {
  return semigroup_idempotents(S, L, supp, smallest_representatives(L));
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

struct Report {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  std::string summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& f : failures) {
      if (!out.empty()) out += "\n";
      out += f;
    }
    return out;
  }
};

/// The five exact checks making {e_X} a complete system of primitive
/// orthogonal idempotents:
///   (i)   sum of e_X = 1
///   (ii)  e_X^2 = e_X
///   (iii) e_X e_Y = 0 for X != Y
///   (iv)  the linearized support map sends e_X to E_X in kL
///   (v)   w e_X = 0 whenever supp(w) is not below X
inline Report verify_cspoi(const LeftRegularBand& S, const SupportLattice& L,
                           const SupportMap& supp, const IdempotentSystem& sys) {
  Report report;
  if (!S.identity()) {
    report.failures.push_back("band has no identity");
    return report;
  }

  AlgebraElement total;
  for (const auto& e : sys.idempotent) total += e;
  if (!(total == AlgebraElement::basis(*S.identity())))
    report.failures.push_back("(i) idempotents sum to " + to_string(total, S) +
                              ", not 1");

  for (int X = 0; X < L.size; ++X)
    if (!(multiply(S, sys.idempotent[X], sys.idempotent[X]) == sys.idempotent[X]))
      report.failures.push_back("(ii) e[" + L.labels[X] + "] is not idempotent");

  for (int X = 0; X < L.size; ++X)
    for (int Y = 0; Y < L.size; ++Y)
      if (X != Y &&
          !multiply(S, sys.idempotent[X], sys.idempotent[Y]).is_zero())
        report.failures.push_back("(iii) e[" + L.labels[X] + "] * e[" +
                                  L.labels[Y] + "] != 0");

  const std::vector<AlgebraElement> E = lattice_idempotents(L);
  for (int X = 0; X < L.size; ++X)
    if (!(supp_image(supp, sys.idempotent[X]) == E[X]))
      report.failures.push_back("(iv) supp(e[" + L.labels[X] + "]) != E[" +
                                L.labels[X] + "]");

  for (ElementId w = 0; w < S.size(); ++w)
    for (int X = 0; X < L.size; ++X)
      if (!L.leq[supp[w]][X] &&
          !multiply(S, AlgebraElement::basis(w), sys.idempotent[X]).is_zero())
        report.failures.push_back("(v) " + S.label(w) + " * e[" + L.labels[X] +
                                  "] != 0 although supp(w) is not below " +
                                  L.labels[X]);

  return report;
}

/// The family { x e_supp(x) : x in S }, a basis of kS consisting of
/// (non-orthogonal) primitive idempotents.
inline std::vector<AlgebraElement> idempotent_basis(const LeftRegularBand& S,
                                                    const SupportMap& supp,
                                                    const IdempotentSystem& sys) {
  std::vector<AlgebraElement> out;
  out.reserve(S.size());
  for (ElementId x = 0; x < S.size(); ++x)
    out.push_back(multiply(S, AlgebraElement::basis(x), sys.idempotent[supp[x]]));
  return out;
}

/// Checks dim span{ s e_X : s in S } = #S_X, and that x -> x e_X intertwines
/// the dot action y.x = yx (supp(y) <= supp(x)) or 0 with left multiplication.
inline Report projective_checks(const LeftRegularBand& S, const SupportLattice& L,
                                const SupportMap& supp,
                                const IdempotentSystem& sys, int X) {
  Report report;
  const int n = S.size();
  const AlgebraElement& eX = sys.idempotent[X];

  RowSpace span(n);
  for (ElementId s = 0; s < n; ++s)
    span.insert(to_integer_row(multiply(S, AlgebraElement::basis(s), eX), n));
  const int expected = static_cast<int>(L.members[X].size());
  if (span.rank() != expected)
    report.failures.push_back("dim span{s e[" + L.labels[X] + "]} = " +
                              std::to_string(span.rank()) + ", expected " +
                              std::to_string(expected));

  for (ElementId y = 0; y < n; ++y) {
    const bool acts = L.leq[supp[y]][X];
    for (ElementId x : L.members[X]) {
      const AlgebraElement lhs =
          acts ? multiply(S, AlgebraElement::basis(S.at(y, x)), eX)
               : AlgebraElement::zero();
      const AlgebraElement rhs =
          multiply(S, AlgebraElement::basis(y),
                   multiply(S, AlgebraElement::basis(x), eX));
      if (!(lhs == rhs)) {
        report.failures.push_back("dot action is not intertwined at (y, x) = (" +
                                  S.label(y) + ", " + S.label(x) + ")");
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// The radical J = ker(supp) and its powers
// ---------------------------------------------------------------------------

/// Differences within each support class: { s - s0 } with s0 the smallest
/// member. Linearly independent by construction; dim J = #S - #L.
inline std::vector<AlgebraElement> radical_basis(const SupportLattice& L) {
  std::vector<AlgebraElement> out;
  for (int X = 0; X < L.size; ++X)
    for (std::size_t i = 1; i < L.members[X].size(); ++i)
      out.push_back(AlgebraElement::basis(L.members[X][i]) -
                    AlgebraElement::basis(L.members[X][0]));
  return out;
}

/// A basis of J^2, obtained by reducing all pairwise products of the J basis.
inline std::vector<AlgebraElement> radical_square_basis(const LeftRegularBand& S,
                                                        const SupportLattice& L) {
  const std::vector<AlgebraElement> J = radical_basis(L);
  RowSpace space(S.size());
  for (const auto& a : J)
    for (const auto& b : J)
      space.insert(to_integer_row(multiply(S, a, b), S.size()));
  std::vector<AlgebraElement> out;
  out.reserve(space.rows().size());
  for (const IntVec& row : space.rows()) out.push_back(from_integer_row(row));
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents of the subalgebras k(yS) and kS_{<=Y}
// ---------------------------------------------------------------------------

/// For y with support Y and a system built from y-adapted representatives:
///   - dim((sum of e_X over X >= Y) kS) = #(yS),
///   - truncating each e_X with X <= Y to the elements of support <= Y gives
///     a complete system of primitive orthogonal idempotents of kS_{<=Y}.
/// A system whose representatives are not adapted to y is reported as a
/// policy mismatch rather than checked.
inline Report subalgebra_checks(const LeftRegularBand& S, const SupportLattice& L,
                                const SupportMap& supp,
                                const IdempotentSystem& sys, ElementId y) {
  Report report;
  const int n = S.size();
  const int Y = supp[y];

  for (int X = 0; X < L.size; ++X) {
    if (!L.leq[Y][X]) continue;
    for (const auto& [u, c] : sys.representative[X].terms())
      if (S.at(y, u) != u) {
        report.failures.push_back(
            "representative policy mismatch: representative for " +
            L.labels[X] + " is not fixed by " + S.label(y));
        return report;
      }
  }

  AlgebraElement f;
  for (int X = 0; X < L.size; ++X)
    if (L.leq[Y][X]) f += sys.idempotent[X];
  RowSpace span(n);
  for (ElementId s = 0; s < n; ++s)
    span.insert(to_integer_row(multiply(S, f, AlgebraElement::basis(s)), n));
  int yS_count = 0;
  for (ElementId w = 0; w < n; ++w)
    if (S.at(y, w) == w) ++yS_count;
  if (span.rank() != yS_count)
    report.failures.push_back("dim(sum e_X * kS) = " + std::to_string(span.rank()) +
                              ", expected #(yS) = " + std::to_string(yS_count));

  // Truncation to kS_{<=Y}.
  std::vector<ElementId> below;
  for (ElementId s = 0; s < n; ++s)
    if (L.leq[supp[s]][Y]) below.push_back(s);
  const SubBand sub = sub_lrb(S, below);
  std::vector<int> into_sub(n, -1);
  for (std::size_t i = 0; i < sub.embedding.size(); ++i)
    into_sub[sub.embedding[i]] = static_cast<int>(i);
  const Support subsupport = compute_support(sub.band);

  auto truncate = [&](const AlgebraElement& v) {
    AlgebraElement out;
    for (const auto& [s, c] : v.terms())
      if (L.leq[supp[s]][Y]) out.add_term(into_sub[s], c);
    return out;
  };

  IdempotentSystem truncated;
  truncated.representative.resize(subsupport.lattice.size);
  truncated.idempotent.resize(subsupport.lattice.size);
  for (int X = 0; X < L.size; ++X) {
    if (!L.leq[X][Y]) continue;
    const int sx = subsupport.supp[into_sub[L.members[X][0]]];
    truncated.representative[sx] = truncate(sys.representative[X]);
    truncated.idempotent[sx] = truncate(sys.idempotent[X]);
  }

  const Report inner = verify_cspoi(sub.band, subsupport.lattice,
                                    subsupport.supp, truncated);
  for (const auto& failure : inner.failures)
    report.failures.push_back("truncated system on S_{<=" + L.labels[Y] +
                              "}: " + failure);
  return report;
}

// ---------------------------------------------------------------------------
// Dense integer kernels shared by the rank oracles
// ---------------------------------------------------------------------------

/// Cached dense action of the idempotents: rows e_Y * s and s * e_X for all
/// basis elements s. Denominators are cleared once; all downstream rank
/// computations are scale-invariant.
class IdempotentAction {
 public:
  IdempotentAction(const LeftRegularBand& S, const IdempotentSystem& sys)
      : S_(&S), n_(S.size()) {
    e_.reserve(sys.idempotent.size());
    for (const auto& e : sys.idempotent) e_.push_back(to_integer_row(e, n_));
    left_.resize(e_.size());
    right_.resize(e_.size());
  }

  int dim() const { return n_; }
  int classes() const { return static_cast<int>(e_.size()); }

  /// Rows e_Y * s for every basis element s.
  const std::vector<IntVec>& left(int Y) {
    if (left_[Y].empty()) {
      left_[Y].assign(n_, IntVec(n_, 0));
      for (ElementId s = 0; s < n_; ++s)
        for (ElementId t = 0; t < n_; ++t)
          if (e_[Y][t] != 0) left_[Y][s][S_->at(t, s)] += e_[Y][t];
    }
    return left_[Y];
  }

  /// Rows s * e_X for every basis element s.
  const std::vector<IntVec>& right(int X) {
    if (right_[X].empty()) {
      right_[X].assign(n_, IntVec(n_, 0));
      for (ElementId s = 0; s < n_; ++s)
        for (ElementId t = 0; t < n_; ++t)
          if (e_[X][t] != 0) right_[X][s][S_->at(s, t)] += e_[X][t];
    }
    return right_[X];
  }

  /// e_Y * s * e_X for a basis element s.
  IntVec sandwich_basis(int Y, ElementId s, int X) {
    return fold_right(left(Y)[s], X);
  }

  /// e_Y * (u - u0) * e_X.
  IntVec sandwich_difference(int Y, ElementId u, ElementId u0, int X) {
    const std::vector<IntVec>& l = left(Y);
    IntVec v(n_, 0);
    for (int j = 0; j < n_; ++j) v[j] = l[u][j] - l[u0][j];
    return fold_right(v, X);
  }

  /// e_Y * v * e_X for a dense integer v.
  IntVec sandwich(int Y, const IntVec& v, int X) {
    const std::vector<IntVec>& l = left(Y);
    IntVec u(n_, 0);
    for (ElementId s = 0; s < n_; ++s)
      if (v[s] != 0)
        for (int j = 0; j < n_; ++j) u[j] += v[s] * l[s][j];
    return fold_right(u, X);
  }

 private:
  IntVec fold_right(const IntVec& v, int X) {
    const std::vector<IntVec>& r = right(X);
    IntVec out(n_, 0);
    for (ElementId s = 0; s < n_; ++s)
      if (v[s] != 0)
        for (int j = 0; j < n_; ++j) out[j] += v[s] * r[s][j];
    return out;
  }

  const LeftRegularBand* S_;
  int n_;
  std::vector<IntVec> e_;
  std::vector<std::vector<IntVec>> left_;   // per Y, lazily filled
  std::vector<std::vector<IntVec>> right_;  // per X, lazily filled
};

}  // namespace lrb
