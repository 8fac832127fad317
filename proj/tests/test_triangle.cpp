#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steinhaus/error.hpp"
#include "steinhaus/triangle.hpp"

using namespace steinhaus;

namespace {

ResidueTuple T(const char* s, int m = 2) { return ResidueTuple::parse(s, m); }

ResidueTuple random_tuple(std::mt19937_64& rng, std::size_t n, int m) {
  std::vector<Residue> v(n);
  for (auto& e : v) e = static_cast<Residue>(rng() % static_cast<unsigned>(m));
  return ResidueTuple(v, m);
}

}  // namespace

TEST_CASE("residue tuple parsing and packing") {
  CHECK(T("0010100").size() == 7);
  CHECK(T("0,12,3", 13).to_string() == "0,12,3");
  CHECK(T("012153", 7).to_string() == "012153");
  CHECK(ResidueTuple::from_bits(0b110, 3) == T("011"));
  CHECK(T("011").to_bits() == 0b110);
  CHECK(T("01").repeat(3) == T("010101"));
  CHECK(T("0011").reversed() == T("1100"));
  CHECK(T("0011") < T("0100"));
  CHECK_THROWS_AS(T("2"), Error);
  CHECK_THROWS_AS(ResidueTuple({0}, 1), Error);
  CHECK_THROWS_AS(T("0x1"), Error);
}

TEST_CASE("Steinhaus triangle of 0010100 has 14 zeroes and 14 ones") {
  const Triangle t = build_steinhaus(T("0010100"));
  CHECK(t.size() == 7);
  CHECK(t.cell_count() == 28);
  const auto mult = multiplicity(t);
  CHECK(mult[0] == 14);
  CHECK(mult[1] == 14);
  CHECK(balance(t).balanced);
  CHECK(balance(t).spread == 0);

  const auto rows = oracle::steinhaus_rows({0, 0, 1, 0, 1, 0, 0}, 2);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k) CHECK(t.at(r, k) == rows[r][k]);
}

TEST_CASE("Pascal triangle of (0000101, 0100001)") {
  const Triangle t = build_pascal(T("0000101"), T("0100001"));
  const std::vector<std::vector<Residue>> expected{
      {0}, {0, 1}, {0, 1, 0}, {0, 1, 1, 0}, {1, 1, 0, 1, 0}, {0, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 1}};
  CHECK(t.rows() == expected);
  CHECK(multiplicity(t)[0] == 14);
  CHECK(multiplicity(t)[1] == 14);
  CHECK(pascal_left_side(t) == T("0000101"));
  CHECK(pascal_right_side(t) == T("0100001"));
}

TEST_CASE("constant-one sides give the Sierpinski triangle") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto ones = ResidueTuple(std::vector<Residue>(n, 1));
    const Triangle t = build_pascal(ones, ones);
    std::size_t expected_ones = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k <= i; ++k) {
        CHECK(t.at(i, k) == static_cast<Residue>(oracle::binomial(i, k) % 2));
        expected_ones += oracle::binomial(i, k) % 2;
      }
    CHECK(multiplicity(t)[1] == expected_ones);
  }
}

TEST_CASE("mod-m examples are balanced") {
  const Triangle pascal = build_pascal(T("012153", 7), T("065624", 7));
  for (Residue x = 0; x < 7; ++x) CHECK(multiplicity(pascal)[x] == 3);
  CHECK(is_balanced(pascal));

  const Triangle steinhaus = build_steinhaus(T("2330445", 7));
  for (Residue x = 0; x < 7; ++x) CHECK(multiplicity(steinhaus)[x] == 4);
  CHECK(is_balanced(steinhaus));
}

TEST_CASE("degenerate inputs") {
  const Triangle empty = build_steinhaus(ResidueTuple{});
  CHECK(empty.size() == 0);
  CHECK(multiplicity(empty).total() == 0);
  CHECK(is_balanced(empty));
  CHECK(is_balanced(build_pascal(ResidueTuple{}, ResidueTuple{})));

  const Triangle single = build_steinhaus(T("1"));
  CHECK(multiplicity(single)[1] == 1);
  CHECK(balance(single).spread == 1);
  CHECK(is_balanced(single));

  const Triangle zeros = build_steinhaus(ResidueTuple::zeros(5));
  CHECK(multiplicity(zeros)[0] == 15);
  CHECK(balance(zeros).spread == 15);
  CHECK_FALSE(is_balanced(zeros));

  const Triangle pair = build_steinhaus(T("11"));
  CHECK(multiplicity(pair)[0] == 1);
  CHECK(multiplicity(pair)[1] == 2);
}

TEST_CASE("Pascal sides must agree") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { build_pascal(T("01"), T("010")); }) == ErrorCode::MismatchedSides);
  CHECK(code_of([] { build_pascal(T("01"), T("11")); }) == ErrorCode::MismatchedSides);
  CHECK(code_of([] { build_pascal(T("01", 3), T("01")); }) == ErrorCode::MismatchedSides);
}

TEST_CASE("local rule holds on random triangles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const std::size_t n = 1 + rng() % 25;
    const auto seed = random_tuple(rng, n, m);
    const Triangle s = build_steinhaus(seed);
    CHECK(satisfies_local_rule(s));
    CHECK(multiplicity(s).total() == triangular(n));
    CHECK(steinhaus_seed(s) == seed);

    auto left = random_tuple(rng, n, m);
    const auto right_draw = random_tuple(rng, n, m);
    auto right_entries = std::vector<Residue>(right_draw.entries().begin(), right_draw.entries().end());
    right_entries[0] = left[0];
    const Triangle p = build_pascal(left, ResidueTuple(right_entries, m));
    CHECK(satisfies_local_rule(p));
    CHECK(multiplicity(p).total() == triangular(n));
  }
  Triangle broken(Orientation::Steinhaus, 2, {{0, 1}, {0}});
  CHECK_FALSE(satisfies_local_rule(broken));
}

TEST_CASE("balance parity follows the triangle size") {
  // A balanced binary triangle has spread 0 exactly when C(n+1,2) is even.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Triangle t = build_steinhaus(random_tuple(rng, n, 2));
    const Balance b = balance(t);
    if (b.balanced) CHECK(b.spread == triangular(n) % 2);
  }
}

TEST_CASE("multiplicity table arithmetic") {
  MultiplicityTable a(3, {1, 2, 3});
  MultiplicityTable b(3, {4, 0, 1});
  CHECK((a + b) == MultiplicityTable(3, {5, 2, 4}));
  CHECK((2 * a) == MultiplicityTable(3, {2, 4, 6}));
  CHECK(a.spread() == 2);
  CHECK(a.total() == 6);
}

TEST_CASE("Pascal triangles embed in Steinhaus triangles of size 2n-1") {
  const Triangle pascal = build_pascal(T("0000101"), T("0100001"));
  const Triangle outer = embed_pascal_in_steinhaus(pascal);
  CHECK(outer.orientation() == Orientation::Steinhaus);
  CHECK(outer.size() == 13);
  CHECK(satisfies_local_rule(outer));
  CHECK(extract_center(outer) == pascal);

  // Exhaustive round trip, and uniqueness against a brute-force seed search
  // for the small sizes.
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n - 1)); ++bits) {
      const auto left = ResidueTuple::from_bits(bits & ((std::uint64_t{1} << n) - 1), n);
      std::vector<Residue> right(n);
      right[0] = left[0];
      for (std::size_t k = 1; k < n; ++k) right[k] = static_cast<Residue>((bits >> (n - 1 + k)) & 1U);
      const Triangle p = build_pascal(left, ResidueTuple(right));
      const Triangle s = embed_pascal_in_steinhaus(p);
      REQUIRE(satisfies_local_rule(s));
      CHECK(extract_center(s) == p);
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t big = 2 * n - 1;
    std::size_t hits_total = 0;
    for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << big); ++seed) {
      const Triangle s = build_steinhaus(ResidueTuple::from_bits(seed, big));
      const Triangle center = extract_center(s);
      if (embed_pascal_in_steinhaus(center) == s) ++hits_total;
    }
    // the embedding is a bijection between size-n Pascal and size-(2n-1)
    // Steinhaus triangles
    CHECK(hits_total == (std::uint64_t{1} << big));
  }
}

TEST_CASE("embedding also works mod m") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 6);
    const std::size_t n = 1 + rng() % 9;
    auto left = random_tuple(rng, n, m);
    auto right = std::vector<Residue>(n);
    const auto r = random_tuple(rng, n, m);
    for (std::size_t k = 0; k < n; ++k) right[k] = r[k];
    right[0] = left[0];
    const Triangle p = build_pascal(left, ResidueTuple(right, m));
    const Triangle s = embed_pascal_in_steinhaus(p);
    CHECK(satisfies_local_rule(s));
    CHECK(extract_center(s) == p);
  }
}
