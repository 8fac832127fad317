#include <doctest.h>

#include <random>

#include "reference_tables.hpp"
#include "steinhaus/balance_search.hpp"
#include "steinhaus/error.hpp"

using namespace steinhaus;

namespace {

ResidueTuple T(const char* s) { return ResidueTuple::parse(s); }

const PeriodGrid& x9_grid() {
  static const PeriodGrid grid = build_period_grid(T(reference::kX9));
  return grid;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

// Periodic prefix x^infinity[n].
ResidueTuple prefix(const ResidueTuple& x, std::size_t n) {
  std::vector<Residue> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = x.cyclic(static_cast<std::int64_t>(k));
  return ResidueTuple(v);
}

// Multiplicity of the cells of an extracted triangle selected by a
// predicate on orbit-relative coordinates (i, j).
template <class Pred>
MultiplicityTable count_where(const Triangle& t, Pred pred) {
  MultiplicityTable out(2);
  for (std::size_t row = 0; row < t.size(); ++row)
    for (std::size_t k = 0; k < t.rows()[row].size(); ++k) {
      const std::size_t i = row;
      const std::size_t j = t.orientation() == Orientation::Steinhaus ? row + k : k;
      if (pred(i, j)) out.add(t.at(row, k));
    }
  return out;
}

std::size_t choose2(std::size_t k) { return k == 0 ? 0 : k * (k - 1) / 2; }

}  // namespace

TEST_CASE("block extraction") {
  const PeriodGrid grid = build_period_grid(T("010100"));
  CHECK(extract_steinhaus_block(grid, 0, 0, 0).size() == 0);
  const Triangle t = extract_steinhaus_block(grid, 0, 0, 6);
  const std::vector<std::string> rows{"010100", "011110", "010001", "111001", "000101", "100111"};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) CHECK(t.at(i, j - i) == rows[i][j] - '0');

  CHECK(extract_pascal_block(x9_grid(), 0, 9, 1).at(0, 0) == x9_grid().at(0, 9));
  const Triangle zero = extract_pascal_block(build_period_grid(ResidueTuple::zeros(8)), 3, 5, 5);
  CHECK(multiplicity(zero) == MultiplicityTable(2, {15, 0}));

  // blocks are triangles generated by their periodic sides
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i0 = static_cast<std::int64_t>(rng() % 60) - 30;
    const auto j0 = static_cast<std::int64_t>(rng() % 60) - 30;
    const std::size_t n = rng() % 60;
    const Triangle s = extract_steinhaus_block(x9_grid(), i0, j0, n);
    CHECK(satisfies_local_rule(s));
    CHECK(s == build_steinhaus(prefix(generator_tuple(x9_grid(), i0, j0), n)));
    if (n == 0) continue;
    const Triangle p = extract_pascal_block(x9_grid(), i0, j0, n);
    CHECK(satisfies_local_rule(p));
    const auto [left, right] = pascal_generator_tuples(x9_grid(), i0, j0);
    CHECK(left[0] == right[0]);
    CHECK(p == build_pascal(prefix(left, n), prefix(right, n)));
  }
  CHECK(generator_tuple(x9_grid(), 0, 0) == T(reference::kX9));
  const auto zeros = pascal_generator_tuples(build_period_grid(ResidueTuple::zeros(4)), 1, 2);
  CHECK(zeros.first == ResidueTuple::zeros(4));
  CHECK(zeros.second == ResidueTuple::zeros(4));
}

TEST_CASE("the (6,9,6) family and its blocks") {
  const auto cert = check_steinhaus_family(x9_grid(), 6, 9, 6);
  REQUIRE(cert.has_value());
  CHECK(cert->base_block == MultiplicityTable(2, {11, 10}));
  CHECK(cert->strip_block == MultiplicityTable(2, {222, 222}));
  CHECK(cert->period_block == MultiplicityTable(2, {288, 288}));
  CHECK(multiplicity(extract_steinhaus_block(x9_grid(), 6, 9, 6)) == MultiplicityTable(2, {11, 10}));
  CHECK(oracle_verify_family(*cert, 4));
  CHECK(oracle_verify_family(*cert, 0));

  // shifting the vertex one column keeps the recorded blocks but not the
  // balance
  FamilyCertificate shifted = *cert;
  shifted.j0 += 1;
  CHECK_FALSE(oracle_verify_family(shifted, 2));
  CHECK_FALSE(check_steinhaus_family(x9_grid(), 6, 10, 6).has_value());
}

TEST_CASE("r = 0 families have an empty base") {
  const auto cert = check_steinhaus_family(x9_grid(), 1, 11, 0);
  REQUIRE(cert.has_value());
  CHECK(cert->base_block.total() == 0);
  CHECK(cert->strip_block.total() == 300);
  CHECK(oracle_verify_family(*cert, 4));
}

TEST_CASE("published Steinhaus witnesses") {
  for (const auto& row : reference::kX9Steinhaus) {
    CHECK(generator_tuple(x9_grid(), row.i0, row.j0) == T(row.generator));
    for (std::size_t r : row.remainders) {
      CAPTURE(r);
      const auto cert = check_steinhaus_family(x9_grid(), row.i0, row.j0, r);
      REQUIRE(cert.has_value());
      CHECK(oracle_verify_family(*cert, 4));
    }
  }
}

TEST_CASE("published Pascal witnesses") {
  const std::size_t p = 24;
  for (const auto& row : reference::kX9PascalByDuality) {
    CAPTURE(row.remainder);
    const auto cert = check_pascal_family(x9_grid(), row.i0, row.j0, row.remainder);
    REQUIRE(cert.has_value());
    CHECK(oracle_verify_family(*cert, 4));
    const auto [left, right] = pascal_generator_tuples(x9_grid(), row.i0, row.j0);
    CHECK(left == T(row.left));
    CHECK(right == T(row.right));
    const auto back = steinhaus_dual_position(row.i0, row.j0, row.remainder, p);
    CHECK(back == FamilyPosition{row.steinhaus_i0, row.steinhaus_j0, row.steinhaus_remainder});
    CHECK(dual_position(back.i0, back.j0, back.remainder, p) == FamilyPosition{row.i0, row.j0, row.remainder});
    CHECK(check_steinhaus_family(x9_grid(), back.i0, back.j0, back.remainder).has_value());
  }
  for (const auto& row : reference::kX9PascalNative) {
    const auto [left, right] = pascal_generator_tuples(x9_grid(), row.i0, row.j0);
    CHECK(left == T(row.left));
    CHECK(right == T(row.right));
    for (std::size_t r : row.remainders) {
      CAPTURE(r);
      const auto cert = check_pascal_family(x9_grid(), row.i0, row.j0, r);
      REQUIRE(cert.has_value());
      CHECK(oracle_verify_family(*cert, 4));
    }
  }
}

TEST_CASE("dual positions") {
  CHECK(dual_position(1, 11, 23, 24) == FamilyPosition{25, 34, 0});
  CHECK(dual_position(6, 9, 17, 24) == FamilyPosition{24, 26, 6});
  CHECK(dual_position(0, 0, 23, 24).remainder == 0);
  CHECK(dual_position(0, 0, 0, 24).remainder == 23);
  for (std::size_t r = 0; r < 24; ++r) {
    const auto d = dual_position(5, 7, r, 24);
    CHECK(steinhaus_dual_position(d.i0, d.j0, d.remainder, 24) == FamilyPosition{5, 7, r});
  }
}

TEST_CASE("families need a balanced period divisible by 4") {
  CHECK(code_of([] { check_steinhaus_family(build_period_grid(T("010100")), 0, 0, 1); }) ==
        ErrorCode::PeriodNotDivisibleBy4);
  CHECK(code_of([] { check_pascal_family(build_period_grid(ResidueTuple::zeros(12)), 0, 0, 1); }) ==
        ErrorCode::UnbalancedPeriod);
  CHECK(code_of([] { check_steinhaus_family(x9_grid(), 0, 0, 24); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { balanced_period_classes(6); }) == ErrorCode::PeriodNotDivisibleBy4);
  CHECK(code_of([] { remainder_set(T("010100"), Orientation::Steinhaus); }) == ErrorCode::PeriodNotDivisibleBy4);
}

TEST_CASE("balanced-period classes") {
  CHECK(balanced_period_classes(4).empty());
  const auto c12 = balanced_period_classes(12);
  REQUIRE(c12.size() == 2);
  CHECK(c12[0].representative == T(reference::kBalancedClasses12[0]));
  CHECK(c12[1].representative == T(reference::kBalancedClasses12[1]));
  const auto c24 = balanced_period_classes(24);
  REQUIRE(c24.size() == 17);
  for (std::size_t k = 0; k < 17; ++k) CHECK(c24[k].representative.to_string() == reference::kBalancedClasses24[k]);
}

TEST_CASE("period 12 admits no balanced family") {
  for (const char* rep : reference::kBalancedClasses12) {
    const PeriodGrid grid = build_period_grid(T(rep));
    std::size_t accepted = 0;
    for (std::int64_t i0 = 0; i0 < 12; ++i0)
      for (std::int64_t j0 = 0; j0 < 12; ++j0)
        for (std::size_t r = 0; r < 12; ++r) {
          accepted += check_steinhaus_family(grid, i0, j0, r).has_value();
          accepted += check_pascal_family(grid, i0, j0, r).has_value();
        }
    CHECK(accepted == 0);
  }
  for (const auto& c : full_search(12).classes) {
    CHECK(c.steinhaus.size() == 0);
    CHECK(c.pascal.size() == 0);
  }
}

TEST_CASE("remainder sets") {
  CHECK(remainder_set(T(reference::kX9), Orientation::Steinhaus).size() == 24);
  CHECK(remainder_set(T(reference::kBalancedClasses24[0]), Orientation::Steinhaus).size() == 18);
  CHECK(remainder_set(T(reference::kBalancedClasses24[15]), Orientation::Steinhaus).size() == 0);

  const auto serial = remainder_set(T(reference::kBalancedClasses24[2]), Orientation::Pascal, 1);
  const auto threaded = remainder_set(T(reference::kBalancedClasses24[2]), Orientation::Pascal, 4);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial.witnesses[k].remainder == threaded.witnesses[k].remainder);
    CHECK(serial.witnesses[k].i0 == threaded.witnesses[k].i0);
    CHECK(serial.witnesses[k].j0 == threaded.witnesses[k].j0);
  }

  // witnesses are the first accepting position in (i0, j0) order
  const auto rs = remainder_set(T(reference::kX9), Orientation::Steinhaus);
  for (const auto& w : rs.witnesses) {
    bool earlier = false;
    for (std::int64_t i0 = 0; i0 <= w.i0 && !earlier; ++i0)
      for (std::int64_t j0 = 0; j0 < (i0 == w.i0 ? w.j0 : 24); ++j0)
        earlier = earlier || check_steinhaus_family(x9_grid(), i0, j0, w.remainder).has_value();
    CHECK_FALSE(earlier);
  }
}

TEST_CASE("full search at p = 24") {
  const SearchReport report = full_search(24);
  REQUIRE(report.classes.size() == 17);
  for (std::size_t k = 0; k < 17; ++k) {
    CAPTURE(k);
    const auto& c = report.classes[k];
    CHECK(c.steinhaus.size() == reference::kRemainderCount[k]);
    CHECK(c.pascal.size() == reference::kRemainderCount[k]);
    CHECK(c.duality_consistent);
    for (const auto& w : c.steinhaus.witnesses) CHECK(oracle_verify_family(w, 4));
    for (const auto& w : c.pascal.witnesses) CHECK(oracle_verify_family(w, 4));
  }
  std::vector<std::string> full;
  for (const auto& rep : report.full_classes()) full.push_back(rep.to_string());
  CHECK(full == std::vector<std::string>{reference::kBalancedClasses24[3], reference::kBalancedClasses24[5],
                                         reference::kBalancedClasses24[6], reference::kBalancedClasses24[7],
                                         reference::kBalancedClasses24[8], reference::kBalancedClasses24[10]});
}

TEST_CASE("block additivity") {
  std::mt19937_64 rng(31);
  const std::size_t p = 24;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& rep = reference::kBalancedClasses24[rng() % 17];
    const PeriodGrid grid = build_period_grid(T(rep));
    const auto i0 = static_cast<std::int64_t>(rng() % p);
    const auto j0 = static_cast<std::int64_t>(rng() % p);
    const std::size_t r = rng() % p;

    // Steinhaus: base = size-r triangle, strip = columns >= r of size p+r
    const Triangle t1 = extract_steinhaus_block(grid, i0, j0, p + r);
    const auto base = multiplicity(extract_steinhaus_block(grid, i0, j0, r));
    const auto strip = count_where(t1, [&](std::size_t, std::size_t j) { return j >= r; });
    CHECK(strip.total() == p * r + p * (p + 1) / 2);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto direct = multiplicity(extract_steinhaus_block(grid, i0, j0, k * p + r));
      CHECK(direct == base + k * strip + choose2(k) * grid.multiplicity());
    }

    // Pascal: base = size-r triangle, strip = columns < p of size p+r
    const Triangle v1 = extract_pascal_block(grid, i0, j0, p + r);
    const auto pbase = multiplicity(extract_pascal_block(grid, i0, j0, r));
    const auto pstrip = count_where(v1, [&](std::size_t, std::size_t j) { return j < p; });
    CHECK(pstrip.total() == p * r + p * (p + 1) / 2);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto direct = multiplicity(extract_pascal_block(grid, i0, j0, k * p + r));
      CHECK(direct == pbase + k * pstrip + choose2(k) * grid.multiplicity());
    }
  }
}

TEST_CASE("complementary blocks fill a period") {
  std::mt19937_64 rng(77);
  const std::size_t p = 24;
  for (int trial = 0; trial < 1000; ++trial) {
    const PeriodGrid grid = build_period_grid(T(reference::kBalancedClasses24[rng() % 17]));
    const auto i0 = static_cast<std::int64_t>(rng() % p);
    const auto j0 = static_cast<std::int64_t>(rng() % p);
    const std::size_t r = rng() % p;
    const DualityBlocks b = duality_blocks(grid, i0, j0, r);
    CHECK(b.steinhaus_base + b.pascal_strip == b.period);
    CHECK(b.steinhaus_strip + b.pascal_base == b.period);
    CHECK(b.period.total() == p * p);
  }
}

TEST_CASE("Steinhaus and dual Pascal families are accepted together") {
  const std::size_t p = 24;
  std::size_t accepted = 0;
  for (std::int64_t i0 = 0; i0 < 24; ++i0)
    for (std::int64_t j0 = 0; j0 < 24; ++j0)
      for (std::size_t r = 0; r < p; ++r) {
        const auto d = dual_position(i0, j0, r, p);
        const bool s = check_steinhaus_family(x9_grid(), i0, j0, r).has_value();
        CHECK(s == check_pascal_family(x9_grid(), d.i0, d.j0, d.remainder).has_value());
        accepted += s;
      }
  CHECK(accepted > 0);

  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    const PeriodGrid grid = build_period_grid(T(reference::kBalancedClasses24[rng() % 17]));
    const auto i0 = static_cast<std::int64_t>(rng() % p);
    const auto j0 = static_cast<std::int64_t>(rng() % p);
    const std::size_t r = rng() % p;
    const auto d = dual_position(i0, j0, r, p);
    CHECK(check_steinhaus_family(grid, i0, j0, r).has_value() ==
          check_pascal_family(grid, d.i0, d.j0, d.remainder).has_value());
  }
}

TEST_CASE("acceptance is periodic in the vertex position") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto i0 = static_cast<std::int64_t>(rng() % 24);
    const auto j0 = static_cast<std::int64_t>(rng() % 24);
    const std::size_t r = rng() % 24;
    for (const auto kind : {Orientation::Steinhaus, Orientation::Pascal}) {
      const bool here = check_family(kind, x9_grid(), i0, j0, r).has_value();
      CHECK(here == check_family(kind, x9_grid(), i0 + 24, j0 + 24, r).has_value());
      CHECK(here == check_family(kind, x9_grid(), i0 - 48, j0 + 72, r).has_value());
    }
  }
}

TEST_CASE("family cell classification") {
  const std::size_t p = 8;
  for (const auto kind : {Orientation::Steinhaus, Orientation::Pascal})
    for (std::size_t r : {0, 3, 7})
      for (std::size_t k = 0; k <= 4; ++k) {
        const std::size_t n = k * p + r;
        std::size_t base = 0;
        std::size_t strip = 0;
        std::size_t period = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const bool inside = kind == Orientation::Steinhaus ? i <= j : j <= i;
            if (!inside) continue;
            const BlockLabel label = classify_family_cell(kind, p, r, i, j);
            if (label.role == BlockRole::Base) ++base;
            if (label.role == BlockRole::Strip) ++strip;
            if (label.role == BlockRole::Period) ++period;
          }
        CHECK(base == r * (r + 1) / 2);
        CHECK(strip == k * (p * r + p * (p + 1) / 2));
        CHECK(period == choose2(k) * p * p);
      }
}
