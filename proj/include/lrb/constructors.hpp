#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/fourier_motzkin.hpp"
#include "lrb/rational.hpp"

namespace lrb {

// ---------------------------------------------------------------------------
// Free left regular band
// ---------------------------------------------------------------------------

namespace detail {

inline std::string word_product(const std::string& u, const std::string& v) {
  std::string out = u;
  for (char c : v)
    if (out.find(c) == std::string::npos) out.push_back(c);
  return out;
}

}  // namespace detail

/// The free left regular band with identity on n letters: all words without
/// repeated letters, product = concatenate then delete letters seen earlier.
/// Elements are ordered by word length, lexicographically within a length,
/// so the empty word (the identity) is element 0.
inline LeftRegularBand free_lrb(int n, bool unsafe_size = false) {
  if (n < 1) throw std::invalid_argument("free_lrb requires n >= 1");
  if (n > 6 && !unsafe_size)
    throw SizeLimitError("free_lrb guard: n <= 6 (" + std::to_string(n) +
                         " requested)");

  std::vector<std::string> words{""};
  std::size_t level_begin = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (char c = 'a'; c < 'a' + n; ++c)
        if (words[i].find(c) == std::string::npos) words.push_back(words[i] + c);
    level_begin = level_end;
  }

  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < words.size(); ++i)
    index[words[i]] = static_cast<ElementId>(i);

  const int m = static_cast<int>(words.size());
  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = words[i].empty() ? "1" : words[i];
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          index.at(detail::word_product(words[i], words[j]));
  }
  return LeftRegularBand(m, std::move(table), 0, std::move(labels));
}

// ---------------------------------------------------------------------------
// Sign vectors and face semigroups
// ---------------------------------------------------------------------------

/// One character per hyperplane, each of '0', '+' or '-'.
using SignVector = std::string;

/// Componentwise product: keep x's sign unless it is zero, then take y's.
inline SignVector sign_product(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("sign vectors have different lengths");
  SignVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == '0') out[i] = y[i];
  return out;
}

namespace detail {

constexpr char kSignDigits[3] = {'0', '+', '-'};

inline int sign_digit(char c) {
  switch (c) {
    case '0': return 0;
    case '+': return 1;
    case '-': return 2;
    default: throw std::invalid_argument("sign character must be 0, + or -");
  }
}

inline int sign_index(const SignVector& s) {
  int idx = 0;
  for (char c : s) idx = idx * 3 + sign_digit(c);
  return idx;
}

}  // namespace detail

/// Faces of the coordinate-hyperplane arrangement in R^n: every one of the
/// 3^n sign vectors is a face. Built combinatorially, no geometry involved.
inline LeftRegularBand boolean_arrangement(int n, bool unsafe_size = false) {
  if (n < 1) throw std::invalid_argument("boolean_arrangement requires n >= 1");
  if (n > 8 && !unsafe_size)
    throw SizeLimitError("boolean_arrangement guard: n <= 8 (" +
                         std::to_string(n) + " requested)");

  int m = 1;
  for (int i = 0; i < n; ++i) m *= 3;
  std::vector<SignVector> faces(m);
  for (int idx = 0; idx < m; ++idx) {
    SignVector s(n, '0');
    int rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      s[k] = detail::kSignDigits[rest % 3];
      rest /= 3;
    }
    faces[idx] = s;
  }

  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          detail::sign_index(sign_product(faces[i], faces[j]));
  return LeftRegularBand(m, std::move(table), 0, std::move(faces));
}

// ---------------------------------------------------------------------------
// Braid arrangement (combinatorial model: ordered set partitions)
// ---------------------------------------------------------------------------

namespace detail {

using BlockSeq = std::vector<std::uint8_t>;  // ordered blocks as bitmasks

inline void gen_ordered_partitions(std::uint8_t rest, BlockSeq& blocks,
                                   std::vector<BlockSeq>& out) {
  if (rest == 0) {
    out.push_back(blocks);
    return;
  }
  std::vector<std::uint8_t> subs;
  for (std::uint8_t s = rest; s != 0; s = static_cast<std::uint8_t>((s - 1) & rest))
    subs.push_back(s);
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    blocks.push_back(*it);
    gen_ordered_partitions(static_cast<std::uint8_t>(rest & ~*it), blocks, out);
    blocks.pop_back();
  }
}

inline std::string block_label(const BlockSeq& blocks, int n) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (int i = 0; i < n; ++i)
      if (blocks[b] & (1u << i)) out += static_cast<char>('1' + i);
  }
  return out;
}

inline BlockSeq block_product(const BlockSeq& x, const BlockSeq& y) {
  BlockSeq out;
  for (std::uint8_t a : x)
    for (std::uint8_t b : y) {
      const std::uint8_t c = a & b;
      if (c) out.push_back(c);
    }
  return out;
}

}  // namespace detail

/// Faces of the braid arrangement {x_i = x_j} in R^n, encoded as ordered set
/// partitions of {1..n} with the refinement product. The one-block partition
/// is the identity; chambers are the permutations.
inline LeftRegularBand braid_arrangement(int n, bool unsafe_size = false) {
  if (n < 2) throw std::invalid_argument("braid_arrangement requires n >= 2");
  if (n > 5 && !unsafe_size)
    throw SizeLimitError("braid_arrangement guard: n <= 5 (" +
                         std::to_string(n) + " requested)");

  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);
  std::vector<detail::BlockSeq> parts;
  detail::BlockSeq scratch;
  detail::gen_ordered_partitions(full, scratch, parts);

  std::vector<std::string> labels(parts.size());
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    labels[i] = detail::block_label(parts[i], n);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (parts[a].size() != parts[b].size()) return parts[a].size() < parts[b].size();
    return labels[a] < labels[b];
  });

  const int m = static_cast<int>(parts.size());
  std::vector<detail::BlockSeq> elems(m);
  std::vector<std::string> elem_labels(m);
  std::map<detail::BlockSeq, ElementId> index;
  for (int i = 0; i < m; ++i) {
    elems[i] = parts[order[i]];
    elem_labels[i] = labels[order[i]];
    index[elems[i]] = i;
  }

  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          index.at(detail::block_product(elems[i], elems[j]));
  return LeftRegularBand(m, std::move(table), 0, std::move(elem_labels));
}

// ---------------------------------------------------------------------------
// Geometric face enumeration for arbitrary central arrangements
// ---------------------------------------------------------------------------

/// A central arrangement given by one rational normal vector per hyperplane.
struct RationalMatrix {
  int dim = 0;
  std::vector<std::vector<Rational>> normals;
};

namespace detail {

inline IntVec primitive_normal(const std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const Rational& c : row) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntVec v(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    v[j] = numerator(row[j]) * (lcm / denominator(row[j]));
  Integer g = vec_content(v);
  if (g > 1)
    for (Integer& x : v) x /= g;
  return v;
}

}  // namespace detail

/// Enumerates the faces of the central arrangement with the given normals:
/// a sign vector is kept iff its open cell is nonempty, decided exactly by
/// Fourier-Motzkin elimination on the mixed strict/equality system. Faces are
/// emitted in lexicographic sign-vector order (0 < + < -), so the all-zero
/// identity face is element 0.
inline LeftRegularBand arrangement_faces(const RationalMatrix& A,
                                         bool unsafe_size = false) {
  const int d = A.dim;
  const int h = static_cast<int>(A.normals.size());
  if (d < 1) throw std::invalid_argument("arrangement dimension must be positive");
  if (h < 1) throw std::invalid_argument("arrangement needs at least one hyperplane");
  if (h > 10 && !unsafe_size)
    throw SizeLimitError("arrangement_faces guard: at most 10 hyperplanes (" +
                         std::to_string(h) + " given)");

  std::vector<IntVec> normals;
  for (const auto& row : A.normals) {
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("normal vector has wrong dimension");
    IntVec v = detail::primitive_normal(row);
    bool zero = true;
    for (const Integer& x : v) zero = zero && x == 0;
    if (zero) throw std::invalid_argument("zero normal vector");
    for (const IntVec& w : normals) {
      IntVec neg = w;
      for (Integer& x : neg) x = -x;
      if (v == w || v == neg)
        throw std::invalid_argument("duplicate hyperplane in arrangement");
    }
    normals.push_back(std::move(v));
  }

  int total = 1;
  for (int i = 0; i < h; ++i) total *= 3;

  std::vector<SignVector> faces;
  for (int idx = 0; idx < total; ++idx) {
    SignVector s(h, '0');
    int rest = idx;
    for (int k = h - 1; k >= 0; --k) {
      s[k] = detail::kSignDigits[rest % 3];
      rest /= 3;
    }
    std::vector<IntVec> equalities, strict;
    for (int i = 0; i < h; ++i) {
      if (s[i] == '0') {
        equalities.push_back(normals[i]);
      } else {
        IntVec g = normals[i];
        if (s[i] == '-')
          for (Integer& x : g) x = -x;
        strict.push_back(std::move(g));
      }
    }
    if (strict_system_feasible(d, equalities, strict)) faces.push_back(s);
  }

  std::map<SignVector, ElementId> index;
  for (std::size_t i = 0; i < faces.size(); ++i)
    index[faces[i]] = static_cast<ElementId>(i);

  const int m = static_cast<int>(faces.size());
  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto it = index.find(sign_product(faces[i], faces[j]));
      if (it == index.end())
        throw std::logic_error("face set not closed under the sign product");
      table[static_cast<std::size_t>(i) * m + j] = it->second;
    }
  std::vector<std::string> labels(faces.begin(), faces.end());
  return LeftRegularBand(m, std::move(table), 0, std::move(labels));
}

}  // namespace lrb
