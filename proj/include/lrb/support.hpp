#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrb/band.hpp"

namespace lrb {

/// The quotient of a band by mutual comparability in the support preorder.
/// Elements are indexed along a fixed linear extension: ascending height in
/// the lattice, ties broken by the smallest member ElementId. The bottom is
/// always index 0 and the top is always the last index.
struct SupportLattice {
  int size = 0;
  std::vector<std::vector<bool>> leq;   // leq[a][b]: a <= b
  std::vector<std::vector<int>> join;
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<ElementId>> members;  // S_X, sorted, per class
  std::vector<int> height;

  bool less(int a, int b) const { return a != b && leq[a][b]; }
};

/// Per semigroup element, the index of its support class.
using SupportMap = std::vector<int>;

struct Support {
  SupportLattice lattice;
  SupportMap supp;
};

/// Quotients the support preorder of S into its support lattice and support
/// map. Requires an identity. The construction verifies exhaustively that
/// joins are least upper bounds, that supp(xy) = supp(x) v supp(y), and that
/// xy = x iff supp(y) <= supp(x); a violation means the input was not a left
/// regular band and is reported as a structural error naming a witness.
inline Support compute_support(const LeftRegularBand& S) {
  if (!S.identity())
    throw std::invalid_argument("compute_support requires an identity");
  const int n = S.size();

  const auto pre = support_preorder(S);

  std::vector<int> cls(n, -1);
  std::vector<std::vector<ElementId>> members;
  for (ElementId x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.push_back({});
    for (ElementId y = x; y < n; ++y)
      if (cls[y] < 0 && pre[x][y] && pre[y][x]) {
        cls[y] = c;
        members[c].push_back(y);
      }
  }
  const int m = static_cast<int>(members.size());

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) leq[a][b] = pre[members[a][0]][members[b][0]];

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        throw std::logic_error("support classes are not antisymmetric");

  // Height = longest chain from the bottom; gives the linear extension.
  std::vector<int> below(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq[b][a]) ++below[a];
  std::vector<int> topo(m);
  for (int i = 0; i < m; ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(),
            [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> height(m, 0);
  for (int i : topo)
    for (int j = 0; j < m; ++j)
      if (i != j && leq[j][i]) height[i] = std::max(height[i], height[j] + 1);

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return members[a][0] < members[b][0];
  });
  std::vector<int> rename(m);
  for (int i = 0; i < m; ++i) rename[order[i]] = i;

  SupportLattice L;
  L.size = m;
  L.leq.assign(m, std::vector<bool>(m, false));
  L.members.resize(m);
  L.height.resize(m);
  L.labels.resize(m);
  for (int a = 0; a < m; ++a) {
    L.members[rename[a]] = members[a];
    L.height[rename[a]] = height[a];
    for (int b = 0; b < m; ++b) L.leq[rename[a]][rename[b]] = leq[a][b];
  }
  SupportMap supp(n);
  for (ElementId x = 0; x < n; ++x) supp[x] = rename[cls[x]];
  for (int a = 0; a < m; ++a) L.labels[a] = S.label(L.members[a][0]);

  L.join.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int j = supp[S.at(L.members[a][0], L.members[b][0])];
      if (!L.leq[a][j] || !L.leq[b][j])
        throw std::logic_error("join of (" + L.labels[a] + ", " + L.labels[b] +
                               ") is not an upper bound");
      for (int c = 0; c < m; ++c)
        if (L.leq[a][c] && L.leq[b][c] && !L.leq[j][c])
          throw std::logic_error("no least upper bound for (" + L.labels[a] +
                                 ", " + L.labels[b] + ")");
      L.join[a][b] = j;
    }

  L.bottom = supp[*S.identity()];
  L.top = 0;
  for (int a = 0; a < m; ++a) L.top = L.join[L.top][a];
  if (L.bottom != 0 || L.top != m - 1)
    throw std::logic_error("lattice linear extension out of order");

  // supp is a semigroup morphism onto (L, v) and reflects the natural order.
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const ElementId xy = S.at(x, y);
      if (supp[xy] != L.join[supp[x]][supp[y]])
        throw std::logic_error("supp(xy) != supp(x) v supp(y) at (" +
                               S.label(x) + ", " + S.label(y) + ")");
      if ((xy == x) != L.leq[supp[y]][supp[x]])
        throw std::logic_error("xy = x iff supp(y) <= supp(x) fails at (" +
                               S.label(x) + ", " + S.label(y) + ")");
    }

  return Support{std::move(L), std::move(supp)};
}

/// Mobius function of the lattice, memoized per interval:
/// mu(X, X) = 1 and mu(X, Y) = -sum of mu(X, Z) over X <= Z < Y.
class Mobius {
 public:
  explicit Mobius(const SupportLattice& L)
      : L_(&L), memo_(static_cast<std::size_t>(L.size) * L.size, kUnset) {}

  std::int64_t operator()(int X, int Y) const {
    if (!L_->leq[X][Y]) return 0;
    std::int64_t& slot = memo_[static_cast<std::size_t>(X) * L_->size + Y];
    if (slot != kUnset) return slot;
    std::int64_t value = 1;
    if (X != Y) {
      value = 0;
      for (int Z = 0; Z < L_->size; ++Z)
        if (L_->leq[X][Z] && L_->leq[Z][Y] && Z != Y) value -= (*this)(X, Z);
    }
    slot = value;
    return value;
  }

 private:
  static constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  const SupportLattice* L_;
  mutable std::vector<std::int64_t> memo_;  // write-once per key
};

inline std::int64_t mobius(const SupportLattice& L, int X, int Y) {
  return Mobius(L)(X, Y);
}

/// All W with Y <= W <= X, in linear-extension order. Empty when Y is not
/// below X.
inline std::vector<int> interval(const SupportLattice& L, int Y, int X) {
  std::vector<int> out;
  if (!L.leq[Y][X]) return out;
  for (int W = 0; W < L.size; ++W)
    if (L.leq[Y][W] && L.leq[W][X]) out.push_back(W);
  return out;
}

/// Cover relations as pairs (X, Y) with Y covered by X, sorted by (X, Y).
inline std::vector<std::pair<int, int>> hasse_covers(const SupportLattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int X = 0; X < L.size; ++X)
    for (int Y = 0; Y < L.size; ++Y) {
      if (!L.less(Y, X)) continue;
      bool cover = true;
      for (int Z = 0; Z < L.size && cover; ++Z)
        if (L.less(Y, Z) && L.less(Z, X)) cover = false;
      if (cover) out.emplace_back(X, Y);
    }
  return out;
}

/// The lattice viewed as a left regular band with product v; its semigroup
/// algebra is the target of the linearized support map.
inline LeftRegularBand lattice_as_lrb(const SupportLattice& L) {
  const int m = L.size;
  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] = L.join[a][b];
  return LeftRegularBand(m, std::move(table), L.bottom, L.labels);
}

/// Hasse diagram as a deterministic DOT digraph, edges drawn downward.
inline std::string lattice_to_dot(const SupportLattice& L) {
  std::string out = "digraph hasse {\n";
  for (int i = 0; i < L.size; ++i) out += "  \"" + L.labels[i] + "\";\n";
  for (const auto& [X, Y] : hasse_covers(L))
    out += "  \"" + L.labels[X] + "\" -> \"" + L.labels[Y] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace lrb
