#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrb/band.hpp"
#include "lrb/constructors.hpp"
#include "lrb/rational.hpp"

namespace lrb {

/// Unreadable file or schema violation.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A table that parses but is not a left regular band with identity.
struct ValidationError : std::runtime_error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r)
      : std::runtime_error(r.summary()), report(std::move(r)) {}
};

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multiplication tables:
//   {"size": n, "identity": 0, "labels": [...], "mult": [[...], ...]}
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json table_to_json(const LeftRegularBand& S) {
  nlohmann::ordered_json j;
  j["size"] = S.size();
  if (S.identity())
    j["identity"] = *S.identity();
  else
    j["identity"] = nullptr;
  j["labels"] = S.labels();
  std::vector<std::vector<ElementId>> rows(S.size());
  for (ElementId a = 0; a < S.size(); ++a) {
    rows[a].resize(S.size());
    for (ElementId b = 0; b < S.size(); ++b) rows[a][b] = S.at(a, b);
  }
  j["mult"] = rows;
  return j;
}

/// Schema-level parse; axioms are not checked here.
inline LeftRegularBand parse_table(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("table file must hold a JSON object");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw ParseError("table needs an integer \"size\"");
  const int n = j["size"].get<int>();
  if (n <= 0) throw ParseError("\"size\" must be positive");

  if (!j.contains("identity") || !j["identity"].is_number_integer())
    throw ParseError("table has no identity");
  if (j["identity"].get<int>() != 0)
    throw ParseError("the identity must be element 0");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
      throw ParseError("\"labels\" must list one string per element");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  if (!j.contains("mult") || !j["mult"].is_array() ||
      static_cast<int>(j["mult"].size()) != n)
    throw ParseError("\"mult\" must be an n x n array");
  std::vector<ElementId> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j["mult"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("\"mult\" must be an n x n array");
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw ParseError("\"mult\" entries must be integers");
      const int v = entry.get<int>();
      if (v < 0 || v >= n)
        throw ParseError("\"mult\" entry " + std::to_string(v) +
                         " is out of range");
      table.push_back(v);
    }
  }
  return LeftRegularBand(n, std::move(table), 0, std::move(labels));
}

inline LeftRegularBand parse_table_file(const std::string& path) {
  return parse_table(detail::read_json_file(path));
}

/// Parse and validate; rejects any table that is not a left regular band
/// with identity, naming a witness.
inline LeftRegularBand load_table(const std::string& path) {
  LeftRegularBand S = parse_table_file(path);
  ValidationReport report = validate_lrb(S);
  if (!report.ok()) throw ValidationError(std::move(report));
  return S;
}

inline void save_table(const LeftRegularBand& S, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << table_to_json(S).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Arrangements: {"dim": d, "normals": [["1","0"],["0","1"],["1","1"]]},
// rational entries as integers or strings "p/q".
// ---------------------------------------------------------------------------

inline RationalMatrix parse_arrangement(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("arrangement file must hold a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("arrangement needs an integer \"dim\"");
  RationalMatrix A;
  A.dim = j["dim"].get<int>();
  if (A.dim <= 0) throw ParseError("\"dim\" must be positive");
  if (!j.contains("normals") || !j["normals"].is_array() || j["normals"].empty())
    throw ParseError("arrangement needs a nonempty \"normals\" array");
  for (const auto& row : j["normals"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != A.dim)
      throw ParseError("every normal must list dim coordinates");
    std::vector<Rational> normal;
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        normal.emplace_back(entry.get<long long>());
      } else if (entry.is_string()) {
        try {
          normal.push_back(parse_rational(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      } else {
        throw ParseError("normal coordinates must be integers or \"p/q\" strings");
      }
    }
    A.normals.push_back(std::move(normal));
  }
  return A;
}

inline RationalMatrix load_arrangement(const std::string& path) {
  return parse_arrangement(detail::read_json_file(path));
}

}  // namespace lrb
