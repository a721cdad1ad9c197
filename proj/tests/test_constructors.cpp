#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "lrb/band.hpp"
#include "lrb/constructors.hpp"
#include "lrb/io.hpp"
#include "lrb/support.hpp"

namespace {

// Independent size oracle: repetition-free words on n letters counted as
// sum over k of n!/(n-k)!.
long long free_band_size(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) {
    long long falling = 1;
    for (int i = 0; i < k; ++i) falling *= n - i;
    total += falling;
  }
  return total;
}

// Ordered set partitions counted by the first-block recurrence.
long long ordered_partition_count(int n) {
  std::vector<long long> osp(n + 1, 0);
  std::vector<std::vector<long long>> binom(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  osp[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) osp[m] += binom[m][k] * osp[m - k];
  return osp[n];
}

lrb::RationalMatrix lines(std::initializer_list<std::pair<int, int>> normals) {
  lrb::RationalMatrix A;
  A.dim = 2;
  for (const auto& [x, y] : normals)
    A.normals.push_back({lrb::Rational(x), lrb::Rational(y)});
  return A;
}

std::filesystem::path temp_json(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("free_lrb sizes match the word-count oracle") {
  CHECK(lrb::free_lrb(1).size() == 2);
  CHECK(lrb::free_lrb(3).size() == 16);
  CHECK(lrb::free_lrb(4).size() == 65);
  for (int n = 1; n <= 4; ++n)
    CHECK(lrb::free_lrb(n).size() == free_band_size(n));
  CHECK_THROWS_AS(lrb::free_lrb(7), lrb::SizeLimitError);
  CHECK_THROWS_AS(lrb::free_lrb(0), std::invalid_argument);
}

TEST_CASE("every constructor output passes validate_lrb") {
  for (int n = 1; n <= 4; ++n) CHECK(lrb::validate_lrb(lrb::free_lrb(n)).ok());
  for (int n = 1; n <= 3; ++n)
    CHECK(lrb::validate_lrb(lrb::boolean_arrangement(n)).ok());
  for (int n = 2; n <= 4; ++n)
    CHECK(lrb::validate_lrb(lrb::braid_arrangement(n)).ok());
  CHECK(lrb::validate_lrb(
            lrb::arrangement_faces(lines({{1, 0}, {0, 1}, {1, 1}})))
            .ok());
}

TEST_CASE("sign_product") {
  CHECK(lrb::sign_product("000", "+-0") == "+-0");  // identity face
  CHECK(lrb::sign_product("+0", "--") == "+-");
  CHECK(lrb::sign_product("+-0", "+-0") == "+-0");  // idempotent
  CHECK_THROWS_AS(lrb::sign_product("+", "++"), std::invalid_argument);

  // LRB axioms hold componentwise for all sign vectors of length <= 3
  const auto B3 = lrb::boolean_arrangement(3);
  for (int i = 0; i < B3.size(); ++i)
    for (int j = 0; j < B3.size(); ++j) {
      const auto x = B3.label(i), y = B3.label(j);
      REQUIRE(lrb::sign_product(x, x) == x);
      REQUIRE(lrb::sign_product(lrb::sign_product(x, y), x) ==
              lrb::sign_product(x, y));
    }
}

TEST_CASE("boolean_arrangement counts and lattice") {
  CHECK(lrb::boolean_arrangement(1).size() == 3);
  CHECK(lrb::boolean_arrangement(2).size() == 9);
  CHECK(lrb::boolean_arrangement(3).size() == 27);

  // support lattice is the Boolean lattice ordered by zero-set containment
  const auto B2 = lrb::boolean_arrangement(2);
  const auto support = lrb::compute_support(B2);
  REQUIRE(support.lattice.size == 4);
  auto zeros = [&](int cls) {
    std::string label = B2.label(support.lattice.members[cls][0]);
    int count = 0;
    for (char c : label) count += c == '0';
    return count;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (support.lattice.leq[a][b]) REQUIRE(zeros(a) >= zeros(b));
  CHECK(lrb::hasse_covers(support.lattice).size() == 4);  // the square
}

TEST_CASE("braid_arrangement counts") {
  CHECK(lrb::braid_arrangement(2).size() == 3);
  CHECK(lrb::braid_arrangement(3).size() == 13);
  CHECK(lrb::braid_arrangement(4).size() == 75);
  for (int n = 2; n <= 4; ++n)
    CHECK(lrb::braid_arrangement(n).size() == ordered_partition_count(n));

  // chambers of n = 3 are the 3! linear orders
  const auto B = lrb::braid_arrangement(3);
  int chambers = 0;
  for (int i = 0; i < B.size(); ++i)
    chambers += std::count(B.label(i).begin(), B.label(i).end(), '|') == 2;
  CHECK(chambers == 6);
  CHECK(B.label(0) == "123");  // one-block identity first
}

TEST_CASE("arrangement_faces on small line arrangements") {
  CHECK(lrb::arrangement_faces(lines({{1, 0}})).size() == 3);
  CHECK(lrb::arrangement_faces(lines({{1, 0}, {0, 1}, {1, 1}})).size() == 13);

  // m generic lines through the origin: 2m chambers, 4m + 1 faces in total
  const std::vector<lrb::RationalMatrix> generic{
      lines({{1, 0}}), lines({{1, 0}, {0, 1}}), lines({{1, 0}, {0, 1}, {1, 1}})};
  for (std::size_t m = 1; m <= generic.size(); ++m) {
    const auto F = lrb::arrangement_faces(generic[m - 1]);
    CHECK(F.size() == static_cast<int>(4 * m + 1));
    int chambers = 0;
    for (int i = 0; i < F.size(); ++i)
      chambers += F.label(i).find('0') == std::string::npos;
    CHECK(chambers == static_cast<int>(2 * m));
  }
}

TEST_CASE("arrangement_faces input validation") {
  lrb::RationalMatrix zero_row;
  zero_row.dim = 2;
  zero_row.normals = {{lrb::Rational(0), lrb::Rational(0)}};
  CHECK_THROWS_AS(lrb::arrangement_faces(zero_row), std::invalid_argument);

  // scaled and negated copies describe the same hyperplane
  lrb::RationalMatrix dup;
  dup.dim = 2;
  dup.normals = {{lrb::Rational(1), lrb::Rational(2)},
                 {lrb::Rational(-2), lrb::Rational(-4)}};
  CHECK_THROWS_AS(lrb::arrangement_faces(dup), std::invalid_argument);
}

TEST_CASE("braid normals give the same semigroup as the combinatorial model") {
  const auto combinatorial = lrb::braid_arrangement(3);
  lrb::RationalMatrix A;
  A.dim = 3;
  A.normals = {{lrb::Rational(1), lrb::Rational(-1), lrb::Rational(0)},
               {lrb::Rational(1), lrb::Rational(0), lrb::Rational(-1)},
               {lrb::Rational(0), lrb::Rational(1), lrb::Rational(-1)}};
  const auto geometric = lrb::arrangement_faces(A);
  REQUIRE(geometric.size() == combinatorial.size());

  // Map an ordered set partition to the sign vector of any of its points
  // (earlier blocks take larger coordinates). Hyperplanes are listed as the
  // pairs (1,2), (1,3), (2,3).
  auto to_signs = [](const std::string& label) {
    std::map<char, int> block;
    int index = 0;
    for (char c : label) {
      if (c == '|') ++index;
      else block[c] = index;
    }
    auto cmp = [&](char i, char j) {
      if (block[i] == block[j]) return '0';
      return block[i] < block[j] ? '+' : '-';
    };
    return std::string{cmp('1', '2'), cmp('1', '3'), cmp('2', '3')};
  };
  std::vector<lrb::ElementId> phi(combinatorial.size());
  for (lrb::ElementId i = 0; i < combinatorial.size(); ++i) {
    const std::string signs = to_signs(combinatorial.label(i));
    lrb::ElementId target = -1;
    for (lrb::ElementId j = 0; j < geometric.size(); ++j)
      if (geometric.label(j) == signs) target = j;
    REQUIRE(target >= 0);
    phi[i] = target;
  }
  for (lrb::ElementId i = 0; i < combinatorial.size(); ++i)
    for (lrb::ElementId j = 0; j < combinatorial.size(); ++j)
      REQUIRE(phi[combinatorial.at(i, j)] == geometric.at(phi[i], phi[j]));
}

TEST_CASE("table round-trip through JSON") {
  const auto F3 = lrb::free_lrb(3);
  const auto path = std::filesystem::temp_directory_path() / "lrb_roundtrip.json";
  lrb::save_table(F3, path.string());
  const auto back = lrb::load_table(path.string());
  CHECK(back == F3);
  std::filesystem::remove(path);
}

TEST_CASE("load_table rejects bad input") {
  SECTION("left-regularity violation is named") {
    const auto path = temp_json(
        "lrb_bad2.json",
        R"({"size": 3, "identity": 0, "labels": ["1","a","b"],
            "mult": [[0,1,2],[1,1,2],[2,1,2]]})");
    try {
      lrb::load_table(path.string());
      FAIL("expected rejection");
    } catch (const lrb::ValidationError& e) {
      CHECK(std::string(e.what()).find("x*y*x != x*y") != std::string::npos);
      CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
    std::filesystem::remove(path);
  }
  SECTION("missing identity") {
    const auto path = temp_json(
        "lrb_noident.json",
        R"({"size": 1, "identity": null, "mult": [[0]]})");
    CHECK_THROWS_AS(lrb::load_table(path.string()), lrb::ParseError);
    std::filesystem::remove(path);
  }
  SECTION("malformed table shape") {
    const auto path = temp_json(
        "lrb_shape.json", R"({"size": 2, "identity": 0, "mult": [[0,1]]})");
    CHECK_THROWS_AS(lrb::load_table(path.string()), lrb::ParseError);
    std::filesystem::remove(path);
  }
  SECTION("unreadable file") {
    CHECK_THROWS_AS(lrb::load_table("/nonexistent/lrb.json"), lrb::ParseError);
  }
}
