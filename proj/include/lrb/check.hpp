#pragma once

#include <string>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/band.hpp"
#include "lrb/cartan.hpp"
#include "lrb/quiver.hpp"
#include "lrb/support.hpp"

namespace lrb {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The full cross-oracle suite for one band: axioms, the idempotent system,
/// triple agreement of the quiver computations, Cartan matrix vs. rank
/// oracle, the defining count identity of the Cartan invariants, and the
/// projective module dimensions.
inline std::vector<CheckResult> run_full_check(const LeftRegularBand& S) {
  std::vector<CheckResult> results;
  const auto add = [&](std::string name, bool passed, std::string detail) {
    results.push_back({std::move(name), passed, std::move(detail)});
  };

  const ValidationReport validation = validate_lrb(S);
  add("validate-lrb", validation.ok(), validation.summary());
  if (!validation.ok()) return results;
  if (!S.identity()) {
    add("identity", false, "band has no identity");
    return results;
  }

  Support support;
  try {
    support = compute_support(S);
  } catch (const std::logic_error& e) {
    add("support-lattice", false, e.what());
    return results;
  }
  const SupportLattice& L = support.lattice;
  const SupportMap& supp = support.supp;

  const IdempotentSystem sys = semigroup_idempotents(S, L, supp);
  const Report cspoi = verify_cspoi(S, L, supp, sys);
  add("verify-cspoi", cspoi.ok(), cspoi.summary());

  {
    ExtOracle ext(S, L, supp, sys);
    bool ok = true;
    std::string detail;
    for (int X = 0; X < L.size && ok; ++X)
      for (int Y = 0; Y < L.size && ok; ++Y) {
        const int direct = arrow_count(S, L, supp, X, Y);
        const int inductive = arrow_count_inductive(S, L, supp, X, Y);
        const int homological = ext.dimension(X, Y);
        if (direct != inductive || direct != homological) {
          ok = false;
          detail = "a[" + L.labels[X] + "][" + L.labels[Y] + "]: direct=" +
                   std::to_string(direct) + " inductive=" +
                   std::to_string(inductive) + " ext=" +
                   std::to_string(homological);
        }
      }
    add("quiver-triple-agreement", ok, ok ? "ok" : detail);
  }

  const CartanMatrix cm = cartan_matrix(S, L, supp);
  {
    CartanOracle oracle(S, sys);
    bool ok = true;
    std::string detail;
    for (int Y = 0; Y < L.size && ok; ++Y)
      for (int X = 0; X < L.size && ok; ++X) {
        const int ranked = oracle.dimension(Y, X);
        if (cm.m[Y][X] != ranked) {
          ok = false;
          detail = "m(" + L.labels[Y] + "," + L.labels[X] + ") = " +
                   std::to_string(cm.m[Y][X]) + " but rank oracle gives " +
                   std::to_string(ranked);
        }
      }
    add("cartan-oracle-agreement", ok, ok ? "ok" : detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int W = 0; W < L.size && ok; ++W)
      for (int X = 0; X < L.size && ok; ++X) {
        std::int64_t total = 0;
        for (int Y : interval(L, W, X)) total += cm.m[Y][X];
        for (ElementId w : L.members[W]) {
          const int count = over_set_count(S, L, supp, w, X);
          if (total != count) {
            ok = false;
            detail = "sum of m(Y," + L.labels[X] + ") over [" + L.labels[W] +
                     "," + L.labels[X] + "] = " + std::to_string(total) +
                     " but #(wS_X) = " + std::to_string(count) + " at w = " +
                     S.label(w);
            break;
          }
        }
      }
    add("count-consistency", ok, ok ? "ok" : detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int X = 0; X < L.size && ok; ++X) {
      RowSpace span(S.size());
      for (ElementId s = 0; s < S.size(); ++s)
        span.insert(to_integer_row(
            multiply(S, AlgebraElement::basis(s), sys.idempotent[X]), S.size()));
      if (span.rank() != static_cast<int>(L.members[X].size())) {
        ok = false;
        detail = "dim span{s e[" + L.labels[X] + "]} = " +
                 std::to_string(span.rank()) + ", expected " +
                 std::to_string(L.members[X].size());
      }
    }
    add("projective-dimensions", ok, ok ? "ok" : detail);
  }

  return results;
}

}  // namespace lrb
