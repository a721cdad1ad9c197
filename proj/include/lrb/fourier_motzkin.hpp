#pragma once

#include <set>
#include <utility>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/rational.hpp"

namespace lrb {

namespace detail {

/// Basis of { v : <r, v> = 0 for every r } as integer columns, computed by
/// echelon reduction and exact back-substitution.
inline std::vector<IntVec> null_space(int dim, const std::vector<IntVec>& rows) {
  RowSpace space(dim);
  for (const IntVec& r : rows) space.insert(r);

  std::vector<int> pivot_cols;
  std::vector<bool> is_pivot(dim, false);
  for (const IntVec& r : space.rows()) {
    int p = 0;
    while (r[p] == 0) ++p;
    pivot_cols.push_back(p);
    is_pivot[p] = true;
  }

  std::vector<IntVec> basis;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(dim, Rational(0));
    x[f] = 1;
    for (int i = static_cast<int>(space.rows().size()) - 1; i >= 0; --i) {
      const IntVec& r = space.rows()[i];
      const int p = pivot_cols[i];
      Rational acc = 0;
      for (int j = p + 1; j < dim; ++j)
        if (r[j] != 0) acc += Rational(r[j]) * x[j];
      x[p] = -acc / Rational(r[p]);
    }
    Integer lcm = 1;
    for (const Rational& c : x) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    IntVec v(dim);
    for (int j = 0; j < dim; ++j)
      v[j] = numerator(x[j]) * (lcm / denominator(x[j]));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Decides exactly over Q whether the homogeneous system
///   <e, v> = 0   for every e in `equalities`
///   <g, v> > 0   for every g in `strict`
/// has a solution v in Q^dim, by projecting onto the null space of the
/// equalities and then eliminating variables Fourier-Motzkin style.
inline bool strict_system_feasible(int dim, const std::vector<IntVec>& equalities,
                                   const std::vector<IntVec>& strict) {
  if (strict.empty()) return true;  // v = 0 works

  const std::vector<IntVec> nullbasis = detail::null_space(dim, equalities);
  const int free_dim = static_cast<int>(nullbasis.size());

  std::set<IntVec> rows;
  for (const IntVec& g : strict) {
    IntVec projected(free_dim, 0);
    bool nonzero = false;
    for (int f = 0; f < free_dim; ++f) {
      Integer dot = 0;
      for (int j = 0; j < dim; ++j) dot += g[j] * nullbasis[f][j];
      projected[f] = dot;
      nonzero = nonzero || dot != 0;
    }
    if (!nonzero) return false;  // forced 0 > 0
    detail::divide_by_content(projected);
    rows.insert(std::move(projected));
  }

  for (int var = 0; var < free_dim; ++var) {
    std::vector<IntVec> pos, neg;
    std::set<IntVec> next;
    for (const IntVec& r : rows) {
      if (r[var] > 0)
        pos.push_back(r);
      else if (r[var] < 0)
        neg.push_back(r);
      else
        next.insert(r);
    }
    for (const IntVec& p : pos)
      for (const IntVec& q : neg) {
        IntVec combo(free_dim, 0);
        bool nonzero = false;
        for (int j = 0; j < free_dim; ++j) {
          combo[j] = (-q[var]) * p[j] + p[var] * q[j];
          nonzero = nonzero || combo[j] != 0;
        }
        if (!nonzero) return false;
        detail::divide_by_content(combo);
        next.insert(std::move(combo));
      }
    rows = std::move(next);
  }
  return rows.empty();
}

}  // namespace lrb
