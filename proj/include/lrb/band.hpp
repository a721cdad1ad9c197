#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrb {

using ElementId = std::int32_t;

/// Thrown when a constructor would exceed its desk-scale guard.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite semigroup given by a total multiplication table. Instances are
/// immutable after construction and safe to share across threads.
///
/// Element 0 is the identity in every band produced by the built-in
/// constructors; an identity-free band carries an empty `identity()`.
class LeftRegularBand {
 public:
  LeftRegularBand(int size, std::vector<ElementId> table,
                  std::optional<ElementId> identity,
                  std::vector<std::string> labels)
      : size_(size),
        table_(std::move(table)),
        identity_(identity),
        labels_(std::move(labels)) {
    if (size_ <= 0) throw std::invalid_argument("band size must be positive");
    if (table_.size() != static_cast<std::size_t>(size_) * size_)
      throw std::invalid_argument("multiplication table has wrong shape");
    if (labels_.empty()) {
      labels_.reserve(size_);
      for (int i = 0; i < size_; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != static_cast<std::size_t>(size_))
      throw std::invalid_argument("one label per element required");
    if (identity_ && (*identity_ < 0 || *identity_ >= size_))
      throw std::invalid_argument("identity index out of range");
  }

  int size() const { return size_; }

  std::optional<ElementId> identity() const { return identity_; }

  /// Semigroup product, bounds-checked.
  ElementId product(ElementId a, ElementId b) const {
    if (a < 0 || a >= size_ || b < 0 || b >= size_)
      throw std::out_of_range("element index out of range");
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }

  /// Unchecked product for exhaustive inner loops.
  ElementId at(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }

  const std::string& label(ElementId a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ElementId>& table() const { return table_; }

  bool operator==(const LeftRegularBand& o) const {
    return size_ == o.size_ && table_ == o.table_ && identity_ == o.identity_ &&
           labels_ == o.labels_;
  }

 private:
  int size_;
  std::vector<ElementId> table_;  // row-major, size_ x size_
  std::optional<ElementId> identity_;
  std::vector<std::string> labels_;
};

/// Free function mirror of LeftRegularBand::product.
inline ElementId product(const LeftRegularBand& S, ElementId a, ElementId b) {
  return S.product(a, b);
}

struct ValidationIssue {
  std::string axiom;  // "range", "associativity", "idempotency",
                      // "left-regularity", "identity"
  std::vector<ElementId> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }

  std::string summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& i : issues) {
      if (!out.empty()) out += "\n";
      out += i.message;
    }
    return out;
  }
};

/// Exhaustively checks associativity, x^2 = x, xyx = xy and the identity law.
/// One witness is reported per violated axiom.
inline ValidationReport validate_lrb(const LeftRegularBand& S) {
  ValidationReport report;
  const int n = S.size();

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const ElementId p = S.at(a, b);
      if (p < 0 || p >= n) {
        report.issues.push_back(
            {"range",
             {a, b},
             "table entry (" + std::to_string(a) + "," + std::to_string(b) +
                 ") = " + std::to_string(p) + " is out of range"});
        return report;  // nothing else is meaningful
      }
    }

  bool assoc_done = false;
  for (ElementId a = 0; a < n && !assoc_done; ++a)
    for (ElementId b = 0; b < n && !assoc_done; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (S.at(S.at(a, b), c) != S.at(a, S.at(b, c))) {
          report.issues.push_back(
              {"associativity",
               {a, b, c},
               "associativity fails at (" + S.label(a) + ", " + S.label(b) +
                   ", " + S.label(c) + ")"});
          assoc_done = true;
          break;
        }

  for (ElementId a = 0; a < n; ++a)
    if (S.at(a, a) != a) {
      report.issues.push_back({"idempotency",
                               {a},
                               "x*x != x at x = " + S.label(a)});
      break;
    }

  bool lr_done = false;
  for (ElementId a = 0; a < n && !lr_done; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (S.at(S.at(a, b), a) != S.at(a, b)) {
        report.issues.push_back(
            {"left-regularity",
             {a, b},
             "x*y*x != x*y at (x, y) = (" + S.label(a) + ", " + S.label(b) +
                 ")"});
        lr_done = true;
        break;
      }

  if (S.identity()) {
    const ElementId e = *S.identity();
    for (ElementId a = 0; a < n; ++a)
      if (S.at(e, a) != a || S.at(a, e) != a) {
        report.issues.push_back(
            {"identity",
             {a},
             "declared identity " + S.label(e) + " does not fix " +
                 S.label(a)});
        break;
      }
  }

  return report;
}

/// The partial order y <= x iff yx = x. Antisymmetry and transitivity are
/// checked; they can only fail on a table that is not a left regular band.
inline std::vector<std::vector<bool>> natural_order(const LeftRegularBand& S) {
  const int n = S.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElementId y = 0; y < n; ++y)
    for (ElementId x = 0; x < n; ++x) leq[y][x] = (S.at(y, x) == x);

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        throw std::logic_error("natural order is not antisymmetric at (" +
                               S.label(a) + ", " + S.label(b) + ")");
      if (leq[a][b])
        for (ElementId c = 0; c < n; ++c)
          if (leq[b][c] && !leq[a][c])
            throw std::logic_error("natural order is not transitive at (" +
                                   S.label(a) + ", " + S.label(b) + ", " +
                                   S.label(c) + ")");
    }
  return leq;
}

/// The support preorder y <= x iff xy = x. Reflexive and transitive but in
/// general not antisymmetric; quotienting it yields the support lattice.
inline std::vector<std::vector<bool>> support_preorder(
    const LeftRegularBand& S) {
  const int n = S.size();
  std::vector<std::vector<bool>> pre(n, std::vector<bool>(n, false));
  for (ElementId y = 0; y < n; ++y)
    for (ElementId x = 0; x < n; ++x) pre[y][x] = (S.at(x, y) == x);
  return pre;
}

/// A sub-band together with the map from its element ids back into the
/// parent band.
struct SubBand {
  LeftRegularBand band;
  std::vector<ElementId> embedding;  // sub index -> parent index
};

/// Closes `seed` under the product, relabels the closure (identity first if
/// one exists inside, then first-seen order from the sorted seed) and returns
/// the sub-band plus the embedding back into S.
inline SubBand sub_lrb(const LeftRegularBand& S, std::vector<ElementId> seed) {
  if (seed.empty()) throw std::invalid_argument("sub_lrb needs a nonempty seed");
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (seed.front() < 0 || seed.back() >= S.size())
    throw std::out_of_range("seed element out of range");

  std::vector<ElementId> elems = seed;
  std::vector<int> pos(S.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  auto add = [&](ElementId e) {
    if (pos[e] < 0) {
      pos[e] = static_cast<int>(elems.size());
      elems.push_back(e);
    }
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(S.at(elems[i], elems[j]));
      add(S.at(elems[j], elems[i]));
    }

  // Two-sided identity inside the closure, if any.
  std::optional<ElementId> ident;
  for (ElementId e : elems) {
    bool is_identity = true;
    for (ElementId x : elems)
      if (S.at(e, x) != x || S.at(x, e) != x) {
        is_identity = false;
        break;
      }
    if (is_identity) {
      ident = e;
      break;
    }
  }
  if (ident && elems.front() != *ident) {
    elems.erase(std::find(elems.begin(), elems.end(), *ident));
    elems.insert(elems.begin(), *ident);
  }

  const int m = static_cast<int>(elems.size());
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = S.label(elems[i]);
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = pos[S.at(elems[i], elems[j])];
  }
  return SubBand{
      LeftRegularBand(m, std::move(table),
                      ident ? std::optional<ElementId>(0) : std::nullopt,
                      std::move(labels)),
      std::move(elems)};
}

}  // namespace lrb
