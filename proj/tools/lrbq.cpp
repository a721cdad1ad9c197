// lrbq: exact support lattices, primitive idempotents, quivers and Cartan
// matrices of finite left regular bands with identity.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input (unreadable file,
// schema violation, size guard).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrb/algebra.hpp"
#include "lrb/band.hpp"
#include "lrb/cartan.hpp"
#include "lrb/check.hpp"
#include "lrb/constructors.hpp"
#include "lrb/io.hpp"
#include "lrb/quiver.hpp"
#include "lrb/support.hpp"

namespace {

struct SourceOptions {
  int free_n = 0;
  int braid_n = 0;
  int boolean_n = 0;
  std::string arrangement_path;
  std::string table_path;
  bool unsafe_size = false;
};

lrb::LeftRegularBand make_source(const SourceOptions& src) {
  if (src.free_n > 0) return lrb::free_lrb(src.free_n, src.unsafe_size);
  if (src.braid_n > 0) return lrb::braid_arrangement(src.braid_n, src.unsafe_size);
  if (src.boolean_n > 0)
    return lrb::boolean_arrangement(src.boolean_n, src.unsafe_size);
  if (!src.arrangement_path.empty())
    return lrb::arrangement_faces(lrb::load_arrangement(src.arrangement_path),
                                  src.unsafe_size);
  return lrb::parse_table_file(src.table_path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw lrb::ParseError("cannot write '" + out_path + "'");
  out << text;
}

std::string render_validation(const lrb::ValidationReport& report) {
  if (report.ok()) return "ok\n";
  std::string out;
  for (const auto& issue : report.issues)
    out += issue.axiom + ": " + issue.message + "\n";
  return out;
}

std::string csv_matrix(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::int64_t>>& m) {
  std::string out;
  for (const auto& label : labels) out += "," + label;
  out += "\n";
  for (std::size_t y = 0; y < m.size(); ++y) {
    out += labels[y];
    for (std::int64_t v : m[y]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quiver and Cartan invariants of finite left regular bands"};
  app.require_subcommand(1);

  SourceOptions src;
  auto* sources = app.add_option_group("source", "what to compute on");
  sources->add_option("--free", src.free_n,
                      "free left regular band on N letters (guard: N <= 6)");
  sources->add_option("--braid", src.braid_n,
                      "braid arrangement faces, N coordinates (guard: N <= 5)");
  sources->add_option("--boolean", src.boolean_n,
                      "coordinate arrangement faces in R^N (guard: N <= 8)");
  sources->add_option("--arrangement", src.arrangement_path,
                      "central arrangement JSON file (guard: 10 hyperplanes)");
  sources->add_option("--table", src.table_path, "multiplication table JSON file");
  sources->require_option(1);
  app.add_flag("--unsafe-size", src.unsafe_size,
               "override the desk-scale size guards");
  std::string out_path;
  app.add_option("--out", out_path, "write output to PATH instead of stdout");

  auto* cmd_validate =
      app.add_subcommand("validate", "check the band axioms and report violations");
  auto* cmd_lattice =
      app.add_subcommand("lattice", "support lattice (Hasse DOT or leq JSON)");
  std::string lattice_format = "dot";
  cmd_lattice->add_option("--format", lattice_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  auto* cmd_idem = app.add_subcommand(
      "idempotents", "complete system of primitive orthogonal idempotents");
  bool idem_json = false;
  cmd_idem->add_flag("--json", idem_json, "emit JSON instead of text");
  std::string idem_policy = "smallest";
  cmd_idem->add_option("--policy", idem_policy, "representative policy")
      ->check(CLI::IsMember({"smallest", "uniform"}));
  auto* cmd_quiver = app.add_subcommand("quiver", "quiver of the semigroup algebra");
  bool quiver_dot = false, quiver_matrix = false, quiver_check = false;
  cmd_quiver->add_flag("--dot", quiver_dot, "DOT digraph (default)");
  cmd_quiver->add_flag("--matrix", quiver_matrix, "JSON arrow-multiplicity matrix");
  cmd_quiver->add_flag("--check", quiver_check,
                       "cross-check all three arrow computations per pair");
  auto* cmd_cartan = app.add_subcommand("cartan", "Cartan invariant matrix");
  std::string cartan_format = "csv";
  cmd_cartan->add_option("--format", cartan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bool cartan_check = false;
  cmd_cartan->add_flag("--check", cartan_check,
                       "compare against the rank oracle per pair");
  auto* cmd_check =
      app.add_subcommand("check", "run the full cross-oracle invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const lrb::LeftRegularBand S = make_source(src);

    if (cmd_validate->parsed()) {
      const lrb::ValidationReport report = lrb::validate_lrb(S);
      emit(render_validation(report), out_path);
      return report.ok() ? 0 : 1;
    }

    // Every other command needs a genuine left regular band with identity.
    {
      const lrb::ValidationReport report = lrb::validate_lrb(S);
      if (!report.ok()) {
        std::cerr << "input is not a left regular band:\n"
                  << render_validation(report);
        return 1;
      }
      if (!S.identity()) {
        std::cerr << "input has no identity\n";
        return 1;
      }
    }

    const lrb::Support support = lrb::compute_support(S);
    const lrb::SupportLattice& L = support.lattice;

    if (cmd_lattice->parsed()) {
      if (lattice_format == "dot") {
        emit(lrb::lattice_to_dot(L), out_path);
      } else {
        nlohmann::ordered_json j;
        j["labels"] = L.labels;
        std::vector<std::vector<int>> leq(L.size, std::vector<int>(L.size, 0));
        for (int a = 0; a < L.size; ++a)
          for (int b = 0; b < L.size; ++b) leq[a][b] = L.leq[a][b] ? 1 : 0;
        j["leq"] = leq;
        emit(j.dump(2) + "\n", out_path);
      }
      return 0;
    }

    if (cmd_idem->parsed()) {
      const auto reps = idem_policy == "uniform"
                            ? lrb::uniform_representatives(L)
                            : lrb::smallest_representatives(L);
      const lrb::IdempotentSystem sys =
          lrb::semigroup_idempotents(S, L, support.supp, reps);
      const lrb::Report report = lrb::verify_cspoi(S, L, support.supp, sys);
      if (idem_json) {
        nlohmann::ordered_json j;
        for (int X = 0; X < L.size; ++X) {
          nlohmann::ordered_json entries = nlohmann::ordered_json::array();
          for (const auto& [s, c] : sys.idempotent[X].terms())
            entries.push_back({S.label(s), lrb::to_string(c)});
          j[L.labels[X]] = entries;
        }
        emit(j.dump(2) + "\n", out_path);
        if (!report.ok()) std::cerr << report.summary() << "\n";
      } else {
        std::string out;
        for (int X = 0; X < L.size; ++X)
          out += "e[" + L.labels[X] + "] = " +
                 lrb::to_string(sys.idempotent[X], S) + "\n";
        out += "verify: " + (report.ok() ? std::string("ok")
                                         : report.summary()) + "\n";
        emit(out, out_path);
      }
      return report.ok() ? 0 : 1;
    }

    if (cmd_quiver->parsed()) {
      const lrb::Quiver q = lrb::build_quiver(S, L, support.supp);
      if (quiver_check) {
        const lrb::IdempotentSystem sys =
            lrb::semigroup_idempotents(S, L, support.supp);
        lrb::ExtOracle ext(S, L, support.supp, sys);
        std::string out;
        bool ok = true;
        for (int X = 0; X < L.size; ++X)
          for (int Y = 0; Y < L.size; ++Y) {
            const int direct = q.arrows[X][Y];
            const int inductive =
                lrb::arrow_count_inductive(S, L, support.supp, X, Y);
            const int homological = ext.dimension(X, Y);
            const bool agree = direct == inductive && direct == homological;
            ok = ok && agree;
            out += L.labels[X] + " -> " + L.labels[Y] + ": direct=" +
                   std::to_string(direct) + " inductive=" +
                   std::to_string(inductive) + " ext=" +
                   std::to_string(homological) + (agree ? " ok" : " MISMATCH") +
                   "\n";
          }
        out += ok ? "quiver check: ok\n" : "quiver check: FAILED\n";
        emit(out, out_path);
        return ok ? 0 : 1;
      }
      if (quiver_matrix) {
        nlohmann::ordered_json j;
        j["labels"] = q.labels;
        j["arrows"] = q.arrows;
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit(lrb::to_dot(q), out_path);
      }
      return 0;
    }

    if (cmd_cartan->parsed()) {
      const lrb::CartanMatrix cm = lrb::cartan_matrix(S, L, support.supp);
      if (cartan_check) {
        const lrb::IdempotentSystem sys =
            lrb::semigroup_idempotents(S, L, support.supp);
        lrb::CartanOracle oracle(S, sys);
        std::string out;
        bool ok = true;
        for (int Y = 0; Y < L.size; ++Y)
          for (int X = 0; X < L.size; ++X) {
            const int ranked = oracle.dimension(Y, X);
            const bool agree = cm.m[Y][X] == ranked;
            ok = ok && agree;
            out += "m(" + L.labels[Y] + "," + L.labels[X] + ") = " +
                   std::to_string(cm.m[Y][X]) + " oracle=" +
                   std::to_string(ranked) + (agree ? " ok" : " MISMATCH") + "\n";
          }
        out += ok ? "cartan check: ok\n" : "cartan check: FAILED\n";
        emit(out, out_path);
        return ok ? 0 : 1;
      }
      if (cartan_format == "csv") {
        emit(csv_matrix(cm.labels, cm.m), out_path);
      } else {
        nlohmann::ordered_json j;
        j["labels"] = cm.labels;
        j["matrix"] = cm.m;
        emit(j.dump(2) + "\n", out_path);
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      const auto results = lrb::run_full_check(S);
      std::string out;
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed;
        out += r.name + ": " + (r.passed ? "ok" : "FAIL (" + r.detail + ")") + "\n";
      }
      out += ok ? "check: ok\n" : "check: FAILED\n";
      emit(out, out_path);
      return ok ? 0 : 1;
    }
  } catch (const lrb::SizeLimitError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const lrb::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
