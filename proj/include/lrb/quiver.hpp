#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/band.hpp"
#include "lrb/support.hpp"
#include "lrb/union_find.hpp"

namespace lrb {

/// Arrow multiplicities of the quiver of kS over the lattice vertex set.
/// arrows[X][Y] counts arrows X -> Y; they descend strictly in the lattice.
struct Quiver {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> arrows;

  int vertex_count() const { return static_cast<int>(labels.size()); }

  int arrow_total() const {
    int total = 0;
    for (const auto& row : arrows)
      for (int a : row) total += a;
    return total;
  }
};

/// a_XY computed from an explicit base point y of support Y: elements of S_X
/// are merged whenever a strict witness y < w with supp(w) < X satisfies
/// wx = yx = wx', and each x is merged with yx so that classes are counted
/// on yS_X. Returns the class count minus one.
inline int arrow_count_from(const LeftRegularBand& S, const SupportLattice& L,
                            const SupportMap& supp, int X, int Y, ElementId y) {
  if (supp[y] != Y) throw std::invalid_argument("base point has wrong support");
  if (!L.leq[Y][X]) return 0;

  const std::vector<ElementId>& sx = L.members[X];
  std::vector<int> slot(S.size(), -1);
  for (std::size_t i = 0; i < sx.size(); ++i) slot[sx[i]] = static_cast<int>(i);

  UnionFind classes(static_cast<int>(sx.size()));
  for (ElementId x : sx) classes.unite(slot[x], slot[S.at(y, x)]);

  for (ElementId w = 0; w < S.size(); ++w) {
    if (w == y || S.at(y, w) != w) continue;   // need y < w strictly
    const int W = supp[w];
    if (W == X || !L.leq[W][X]) continue;      // need supp(w) < X strictly
    int previous = -1;
    for (ElementId x : sx)
      if (S.at(w, x) == S.at(y, x)) {
        if (previous >= 0) classes.unite(previous, slot[x]);
        previous = slot[x];
      }
  }
  return classes.classes() - 1;
}

/// a_XY with the base point fixed to the smallest element of support Y.
inline int arrow_count(const LeftRegularBand& S, const SupportLattice& L,
                       const SupportMap& supp, int X, int Y) {
  if (!L.leq[Y][X]) return 0;
  return arrow_count_from(S, L, supp, X, Y, L.members[Y][0]);
}

inline Quiver build_quiver(const LeftRegularBand& S, const SupportLattice& L,
                           const SupportMap& supp) {
  Quiver q;
  q.labels = L.labels;
  q.arrows.assign(L.size, std::vector<int>(L.size, 0));
  for (int X = 0; X < L.size; ++X)
    for (int Y = 0; Y < L.size; ++Y)
      q.arrows[X][Y] = arrow_count(S, L, supp, X, Y);
  return q;
}

inline Quiver build_quiver(const LeftRegularBand& S) {
  const Support support = compute_support(S);
  return build_quiver(S, support.lattice, support.supp);
}

/// Second route to a_XY: build the sub-band yS_{<=X} and count the arrows
/// from its top to its bottom.
inline int arrow_count_inductive(const LeftRegularBand& S,
                                 const SupportLattice& L, const SupportMap& supp,
                                 int X, int Y) {
  if (!L.leq[Y][X]) return 0;
  const ElementId y = L.members[Y][0];
  std::vector<ElementId> seed;
  for (ElementId s = 0; s < S.size(); ++s)
    if (L.leq[supp[s]][X]) seed.push_back(S.at(y, s));
  const SubBand sub = sub_lrb(S, std::move(seed));
  const Support ss = compute_support(sub.band);
  return arrow_count(sub.band, ss.lattice, ss.supp, ss.lattice.top,
                     ss.lattice.bottom);
}

/// Third route: dim of e_Y (J / J^2) e_X by exact rank, computed as
/// rank{e_Y j e_X : j in basis(J)} modulo the subspace e_Y J^2 e_X.
/// J and J^2 are computed once per band and shared across all pairs.
class ExtOracle {
 public:
  ExtOracle(const LeftRegularBand& S, const SupportLattice& L,
            const SupportMap& supp, const IdempotentSystem& sys)
      : L_(&L), action_(S, sys) {
    for (int W = 0; W < L.size; ++W)
      for (std::size_t i = 1; i < L.members[W].size(); ++i) {
        jdiffs_.emplace_back(L.members[W][i], L.members[W][0]);
        jclass_.push_back(W);
      }
    for (const AlgebraElement& q : radical_square_basis(S, L))
      j2_.push_back(to_integer_row(q, S.size()));
  }

  /// Number of arrows X -> Y.
  int dimension(int X, int Y) {
    const int n = action_.dim();
    RowSpace lower(n);
    for (const IntVec& q : j2_) lower.insert(action_.sandwich(Y, q, X));
    const int base = lower.rank();
    RowSpace full = lower;
    for (std::size_t i = 0; i < jdiffs_.size(); ++i) {
      if (!L_->leq[jclass_[i]][X]) continue;  // e_X kills these terms
      full.insert(action_.sandwich_difference(Y, jdiffs_[i].first,
                                              jdiffs_[i].second, X));
    }
    return full.rank() - base;
  }

 private:
  const SupportLattice* L_;
  IdempotentAction action_;
  std::vector<std::pair<ElementId, ElementId>> jdiffs_;
  std::vector<int> jclass_;
  std::vector<IntVec> j2_;
};

/// One-shot convenience wrapper around ExtOracle.
inline int ext_dimension(const LeftRegularBand& S, const SupportLattice& L,
                         const SupportMap& supp, const IdempotentSystem& sys,
                         int X, int Y) {
  return ExtOracle(S, L, supp, sys).dimension(X, Y);
}

/// Directed path counts between all vertex pairs, including the empty path
/// on the diagonal. The quiver is acyclic, so the table is finite.
inline std::vector<std::vector<unsigned long long>> path_count_table(
    const Quiver& q) {
  const int m = q.vertex_count();
  std::vector<std::vector<unsigned long long>> paths(
      m, std::vector<unsigned long long>(m, 0));
  for (int X = 0; X < m; ++X) {
    paths[X][X] = 1;
    for (int Y = 0; Y < m; ++Y) {
      if (Y == X) continue;
      unsigned long long total = 0;
      for (int Z = 0; Z < X; ++Z)
        if (q.arrows[X][Z] != 0)
          total += static_cast<unsigned long long>(q.arrows[X][Z]) * paths[Z][Y];
      paths[X][Y] += total;
    }
  }
  return paths;
}

inline unsigned long long count_paths(const Quiver& q, int X, int Y) {
  return path_count_table(q)[X][Y];
}

/// Deterministic DOT output; multiplicity m becomes m parallel edges.
inline std::string to_dot(const Quiver& q) {
  std::string out = "digraph quiver {\n";
  for (const std::string& label : q.labels) out += "  \"" + label + "\";\n";
  for (int X = 0; X < q.vertex_count(); ++X)
    for (int Y = 0; Y < q.vertex_count(); ++Y)
      for (int k = 0; k < q.arrows[X][Y]; ++k)
        out += "  \"" + q.labels[X] + "\" -> \"" + q.labels[Y] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace lrb
