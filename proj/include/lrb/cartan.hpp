#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/band.hpp"
#include "lrb/quiver.hpp"
#include "lrb/support.hpp"

namespace lrb {

/// Integer Cartan matrix over L x L; m[Y][X] = dim e_Y kS e_X.
struct CartanMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> m;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& row : m)
      for (std::int64_t v : row) t += v;
    return t;
  }
};

/// #(w S_X), realized as the number of elements of support X fixed by left
/// multiplication by w. Independent of the choice of w within its class.
inline int over_set_count(const LeftRegularBand& S, const SupportLattice& L,
                          const SupportMap& supp, ElementId w, int X) {
  (void)supp;
  int count = 0;
  for (ElementId u : L.members[X])
    if (S.at(w, u) == u) ++count;
  return count;
}

/// Cartan invariants by Mobius inversion:
/// m(Y,X) = sum over W in [Y,X] of mu(Y,W) * #(wS_X), and 0 for Y not <= X.
inline CartanMatrix cartan_matrix(const LeftRegularBand& S,
                                  const SupportLattice& L,
                                  const SupportMap& supp) {
  const Mobius mu(L);
  CartanMatrix c;
  c.labels = L.labels;
  c.m.assign(L.size, std::vector<std::int64_t>(L.size, 0));
  for (int Y = 0; Y < L.size; ++Y)
    for (int X = 0; X < L.size; ++X) {
      if (!L.leq[Y][X]) continue;
      std::int64_t value = 0;
      for (int W : interval(L, Y, X))
        value += mu(Y, W) * over_set_count(S, L, supp, L.members[W][0], X);
      c.m[Y][X] = value;
    }
  return c;
}

inline CartanMatrix cartan_matrix(const LeftRegularBand& S) {
  const Support support = compute_support(S);
  return cartan_matrix(S, support.lattice, support.supp);
}

/// Independent route to the Cartan invariants: the exact rank of the family
/// { e_Y s e_X : s in S } in the semigroup basis.
class CartanOracle {
 public:
  CartanOracle(const LeftRegularBand& S, const IdempotentSystem& sys)
      : action_(S, sys) {}

  int dimension(int Y, int X) {
    const int n = action_.dim();
    RowSpace span(n);
    for (ElementId s = 0; s < n; ++s)
      span.insert(action_.sandwich_basis(Y, s, X));
    return span.rank();
  }

 private:
  IdempotentAction action_;
};

inline int cartan_oracle(const LeftRegularBand& S, const IdempotentSystem& sys,
                         int Y, int X) {
  return CartanOracle(S, sys).dimension(Y, X);
}

/// The closed-form Cartan entry of a free band for a support difference of
/// size i: i! * sum_{j<=i} (-1)^j / j!, evaluated exactly.
inline std::int64_t free_closed_form(int i) {
  if (i < 0) throw std::invalid_argument("free_closed_form needs i >= 0");
  Rational sum = 0;
  Integer factorial = 1;
  for (int j = 0; j <= i; ++j) {
    if (j > 0) factorial *= j;
    sum += Rational(j % 2 == 0 ? 1 : -1, factorial);
  }
  Integer fi = 1;
  for (int j = 2; j <= i; ++j) fi *= j;
  const Rational value = Rational(fi) * sum;
  if (denominator(value) != 1)
    throw std::logic_error("free_closed_form did not evaluate to an integer");
  return numerator(value).convert_to<std::int64_t>();
}

/// Total path count of the quiver, total of the Cartan matrix and #S.
/// For a free band all three agree; in general only the first two are
/// comparable and the caller decides what to assert.
struct PathDimensionReport {
  unsigned long long path_total = 0;
  std::int64_t cartan_total = 0;
  int semigroup_size = 0;

  bool all_equal() const {
    return static_cast<std::int64_t>(path_total) == cartan_total &&
           cartan_total == semigroup_size;
  }
};

inline PathDimensionReport path_dimension_check(const LeftRegularBand& S) {
  const Support support = compute_support(S);
  const Quiver q = build_quiver(S, support.lattice, support.supp);
  const auto paths = path_count_table(q);
  PathDimensionReport report;
  for (int X = 0; X < q.vertex_count(); ++X)
    for (int Y = 0; Y < q.vertex_count(); ++Y) report.path_total += paths[X][Y];
  report.cartan_total = cartan_matrix(S, support.lattice, support.supp).total();
  report.semigroup_size = S.size();
  return report;
}

}  // namespace lrb
