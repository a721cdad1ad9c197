#pragma once

#include <vector>

#include "lrb/rational.hpp"

namespace lrb {

using IntVec = std::vector<Integer>;

namespace detail {

inline Integer vec_content(const IntVec& v) {
  Integer g = 0;
  for (const Integer& x : v) {
    if (x != 0) g = gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

/// Divides by the positive gcd of the entries, preserving signs.
inline void divide_by_content(IntVec& v) {
  const Integer g = vec_content(v);
  if (g > 1)
    for (Integer& x : v) x /= g;
}

/// Divides by the gcd of the entries and makes the leading entry positive.
inline void make_primitive(IntVec& v) {
  Integer g = vec_content(v);
  if (g == 0) return;
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x < 0) g = -g;
    break;
  }
  if (g != 1)
    for (Integer& x : v) x /= g;
}

}  // namespace detail

/// Incremental row-echelon basis over Q, kept as primitive integer rows so
/// the elimination steps are fraction-free.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<IntVec>& rows() const { return rows_; }

  /// Reduces `row` against the basis; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(IntVec row) {
    reduce(row);
    int p = pivot_of(row);
    if (p < 0) return false;
    detail::make_primitive(row);
    std::size_t at = 0;
    while (at < rows_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

  /// True iff `row` lies in the current span.
  bool contains(IntVec row) const {
    reduce(row);
    return pivot_of(row) < 0;
  }

 private:
  static int pivot_of(const IntVec& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) return static_cast<int>(i);
    return -1;
  }

  void reduce(IntVec& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int p = pivots_[k];
      if (row[p] == 0) continue;
      const IntVec& base = rows_[k];
      const Integer a = base[p];
      const Integer b = row[p];
      for (int j = 0; j < dim_; ++j) row[j] = a * row[j] - b * base[j];
      detail::make_primitive(row);
    }
  }

  int dim_;
  std::vector<IntVec> rows_;   // primitive, ordered by pivot column
  std::vector<int> pivots_;
};

/// Rank of a family of integer rows.
inline int rank_of(const std::vector<IntVec>& rows, int dim) {
  RowSpace space(dim);
  for (const IntVec& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace lrb
