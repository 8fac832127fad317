#include "steinhaus/balance_search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "steinhaus/error.hpp"

namespace steinhaus {
namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Cells 0 <= i <= j < n of the Steinhaus triangle at (i0, j0), restricted to
// j >= j_min and i < i_max.
MultiplicityTable count_steinhaus(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n,
                                  std::size_t j_min, std::size_t i_max) {
  const auto p = static_cast<std::int64_t>(grid.period());
  std::size_t ones = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < std::min(n, i_max); ++i) {
    const auto row = static_cast<std::size_t>(floor_mod(i0 + static_cast<std::int64_t>(i), p));
    const std::size_t start = std::max(i, j_min);
    auto col = static_cast<std::size_t>(floor_mod(j0 + static_cast<std::int64_t>(start), p));
    for (std::size_t j = start; j < n; ++j) {
      ones += static_cast<std::size_t>(grid(row, col));
      ++total;
      if (++col == grid.period()) col = 0;
    }
  }
  return MultiplicityTable(2, {total - ones, ones});
}

// Cells 0 <= j <= i < n of the Pascal triangle at (i0, j0), restricted to
// i >= i_min and j < j_max.
MultiplicityTable count_pascal(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n,
                               std::size_t i_min, std::size_t j_max) {
  const auto p = static_cast<std::int64_t>(grid.period());
  std::size_t ones = 0;
  std::size_t total = 0;
  for (std::size_t i = i_min; i < n; ++i) {
    const auto row = static_cast<std::size_t>(floor_mod(i0 + static_cast<std::int64_t>(i), p));
    auto col = static_cast<std::size_t>(floor_mod(j0, p));
    const std::size_t end = std::min(i + 1, j_max);
    for (std::size_t j = 0; j < end; ++j) {
      ones += static_cast<std::size_t>(grid(row, col));
      ++total;
      if (++col == grid.period()) col = 0;
    }
  }
  return MultiplicityTable(2, {total - ones, ones});
}

void require_family_grid(const PeriodGrid& grid) {
  if (grid.period() % 4 != 0) {
    throw Error(ErrorCode::PeriodNotDivisibleBy4,
                "period " + std::to_string(grid.period()) + " is not divisible by 4");
  }
  if (grid.multiplicity().spread() != 0) {
    throw Error(ErrorCode::UnbalancedPeriod, "the period of " + grid.generator().to_string() + " is not balanced");
  }
}

void require_remainder(const PeriodGrid& grid, std::size_t r) {
  if (r >= grid.period()) {
    throw Error(ErrorCode::InvalidArgument,
                "remainder " + std::to_string(r) + " must be below the period " + std::to_string(grid.period()));
  }
}

// Block test without the grid validation, for the search loops.
std::optional<FamilyCertificate> test_family(Orientation kind, const PeriodGrid& grid, std::int64_t i0,
                                             std::int64_t j0, std::size_t r, const MultiplicityTable& period) {
  const std::size_t p = grid.period();
  MultiplicityTable base;
  MultiplicityTable strip;
  if (kind == Orientation::Steinhaus) {
    base = count_steinhaus(grid, i0, j0, r, 0, kUnbounded);
    if (!base.balanced()) return std::nullopt;
    strip = count_steinhaus(grid, i0, j0, p + r, r, kUnbounded);
  } else {
    base = count_pascal(grid, i0, j0, r, 0, kUnbounded);
    if (!base.balanced()) return std::nullopt;
    strip = count_pascal(grid, i0, j0, p + r, 0, p);
  }
  if (strip.spread() != 0) return std::nullopt;
  const auto pp = static_cast<std::int64_t>(p);
  return FamilyCertificate{kind, grid.generator(), floor_mod(i0, pp), floor_mod(j0, pp), r, base, strip, period};
}

bool family_accepts(Orientation kind, const PeriodGrid& grid, const FamilyPosition& pos,
                    const MultiplicityTable& period) {
  return test_family(kind, grid, pos.i0, pos.j0, pos.remainder, period).has_value();
}

}  // namespace

Triangle extract_steinhaus_block(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n) {
  std::vector<std::vector<Residue>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].reserve(n - i);
    for (std::size_t j = i; j < n; ++j)
      rows[i].push_back(grid.at(i0 + static_cast<std::int64_t>(i), j0 + static_cast<std::int64_t>(j)));
  }
  return Triangle(Orientation::Steinhaus, 2, std::move(rows));
}

Triangle extract_pascal_block(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n) {
  std::vector<std::vector<Residue>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].reserve(i + 1);
    for (std::size_t j = 0; j <= i; ++j)
      rows[i].push_back(grid.at(i0 + static_cast<std::int64_t>(i), j0 + static_cast<std::int64_t>(j)));
  }
  return Triangle(Orientation::Pascal, 2, std::move(rows));
}

std::optional<FamilyCertificate> check_family(Orientation kind, const PeriodGrid& grid, std::int64_t i0,
                                              std::int64_t j0, std::size_t r) {
  require_family_grid(grid);
  require_remainder(grid, r);
  return test_family(kind, grid, i0, j0, r, grid.multiplicity());
}

std::optional<FamilyCertificate> check_steinhaus_family(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0,
                                                        std::size_t r) {
  return check_family(Orientation::Steinhaus, grid, i0, j0, r);
}

std::optional<FamilyCertificate> check_pascal_family(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0,
                                                     std::size_t r) {
  return check_family(Orientation::Pascal, grid, i0, j0, r);
}

bool oracle_verify_family(const FamilyCertificate& cert, std::size_t max_multiplier) {
  const PeriodGrid grid = build_period_grid(cert.generator);
  for (std::size_t k = 0; k <= max_multiplier; ++k) {
    const std::size_t n = cert.size_for(k);
    const Triangle t = cert.kind == Orientation::Steinhaus ? extract_steinhaus_block(grid, cert.i0, cert.j0, n)
                                                           : extract_pascal_block(grid, cert.i0, cert.j0, n);
    const MultiplicityTable counted = multiplicity(t);
    if (!counted.balanced()) return false;
    const std::size_t period_blocks = k == 0 ? 0 : k * (k - 1) / 2;
    const MultiplicityTable predicted = cert.base_block + k * cert.strip_block + period_blocks * cert.period_block;
    if (counted != predicted) return false;
  }
  return true;
}

FamilyPosition dual_position(std::int64_t i0, std::int64_t j0, std::size_t r, std::size_t p) {
  const auto rr = static_cast<std::int64_t>(r);
  return {i0 + rr + 1, j0 + rr, p - 1 - r};
}

FamilyPosition steinhaus_dual_position(std::int64_t i0, std::int64_t j0, std::size_t r, std::size_t p) {
  const auto rr = static_cast<std::int64_t>(r);
  const auto pp = static_cast<std::int64_t>(p);
  return {i0 + rr - pp, j0 + rr + 1 - pp, p - 1 - r};
}

ResidueTuple generator_tuple(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0) {
  std::vector<Residue> z(grid.period());
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = grid.at(i0, j0 + static_cast<std::int64_t>(j));
  return ResidueTuple(std::move(z));
}

std::pair<ResidueTuple, ResidueTuple> pascal_generator_tuples(const PeriodGrid& grid, std::int64_t i0,
                                                              std::int64_t j0) {
  std::vector<Residue> left(grid.period());
  std::vector<Residue> right(grid.period());
  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    left[i] = grid.at(i0 + ii, j0);
    right[i] = grid.at(i0 + ii, j0 + ii);
  }
  return {ResidueTuple(std::move(left)), ResidueTuple(std::move(right))};
}

DualityBlocks duality_blocks(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t r) {
  require_remainder(grid, r);
  const std::size_t p = grid.period();
  const FamilyPosition dual = dual_position(i0, j0, r, p);
  DualityBlocks blocks;
  blocks.steinhaus_base = count_steinhaus(grid, i0, j0, r, 0, kUnbounded);
  blocks.steinhaus_strip = count_steinhaus(grid, i0, j0, p + r, r, p);
  blocks.pascal_base = count_pascal(grid, dual.i0, dual.j0, dual.remainder, 0, kUnbounded);
  blocks.pascal_strip = count_pascal(grid, dual.i0, dual.j0, p + dual.remainder, dual.remainder, p);
  blocks.period = grid.multiplicity();
  return blocks;
}

BlockLabel classify_family_cell(Orientation kind, std::size_t p, std::size_t r, std::size_t i, std::size_t j) {
  // The Pascal decomposition is the Steinhaus one with rows and columns
  // exchanged.
  const std::size_t depth = kind == Orientation::Steinhaus ? j : i;
  const std::size_t across = kind == Orientation::Steinhaus ? i : j;
  if (depth < r) return {BlockRole::Base, 0, 0};
  const std::size_t strip = (depth - r) / p;
  if (across >= strip * p) return {BlockRole::Strip, strip, 0};
  return {BlockRole::Period, strip, across / p};
}

std::vector<std::size_t> RemainderSet::remainders() const {
  std::vector<std::size_t> out;
  out.reserve(witnesses.size());
  for (const auto& w : witnesses) out.push_back(w.remainder);
  return out;
}

const FamilyCertificate* RemainderSet::witness_for(std::size_t r) const {
  for (const auto& w : witnesses)
    if (w.remainder == r) return &w;
  return nullptr;
}

RemainderSet remainder_set(const ResidueTuple& class_rep, Orientation kind, std::size_t jobs) {
  const PeriodGrid grid = build_period_grid(class_rep);
  require_family_grid(grid);
  const std::size_t p = grid.period();
  const MultiplicityTable period = grid.multiplicity();

  // One task per starting row; each keeps its first witness per remainder.
  std::vector<std::vector<std::optional<FamilyCertificate>>> found(p);
  detail::parallel_for(p, jobs, [&](std::size_t i0) {
    auto& slot = found[i0];
    slot.resize(p);
    for (std::size_t j0 = 0; j0 < p; ++j0)
      for (std::size_t r = 0; r < p; ++r) {
        if (slot[r]) continue;
        slot[r] = test_family(kind, grid, static_cast<std::int64_t>(i0), static_cast<std::int64_t>(j0), r, period);
      }
  });

  RemainderSet out;
  out.class_rep = class_rep;
  out.kind = kind;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t i0 = 0; i0 < p; ++i0) {
      if (found[i0][r]) {
        out.witnesses.push_back(*found[i0][r]);
        break;
      }
    }
  }
  return out;
}

std::vector<OrbitClass> balanced_period_classes(std::size_t p) {
  if (p % 4 != 0) throw Error(ErrorCode::PeriodNotDivisibleBy4, "period " + std::to_string(p) + " is not divisible by 4");
  std::vector<OrbitClass> out;
  for (auto& cls : partition_classes(p)) {
    if (build_period_grid(cls.representative).multiplicity().spread() == 0) out.push_back(std::move(cls));
  }
  return out;
}

std::vector<ResidueTuple> SearchReport::full_classes() const {
  std::vector<ResidueTuple> out;
  for (const auto& c : classes)
    if (c.steinhaus.full()) out.push_back(c.cls.representative);
  return out;
}

SearchReport full_search(std::size_t p, std::size_t jobs) {
  SearchReport report;
  report.p = p;
  for (auto& cls : balanced_period_classes(p)) {
    ClassSearchResult result;
    result.steinhaus = remainder_set(cls.representative, Orientation::Steinhaus, jobs);
    result.pascal = remainder_set(cls.representative, Orientation::Pascal, jobs);

    const PeriodGrid grid = build_period_grid(cls.representative);
    const MultiplicityTable period = grid.multiplicity();
    std::vector<std::size_t> mirrored;
    bool consistent = true;
    for (const auto& w : result.steinhaus.witnesses) {
      mirrored.push_back(p - 1 - w.remainder);
      consistent = consistent &&
                   family_accepts(Orientation::Pascal, grid, dual_position(w.i0, w.j0, w.remainder, p), period);
    }
    for (const auto& w : result.pascal.witnesses) {
      consistent = consistent && family_accepts(Orientation::Steinhaus, grid,
                                                steinhaus_dual_position(w.i0, w.j0, w.remainder, p), period);
    }
    std::sort(mirrored.begin(), mirrored.end());
    result.duality_consistent = consistent && mirrored == result.pascal.remainders();
    result.cls = std::move(cls);
    report.classes.push_back(std::move(result));
  }
  return report;
}

std::size_t default_jobs() {
  const char* env = std::getenv("STEINHAUS_JOBS");
  if (env == nullptr) return 1;
  std::size_t jobs = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, jobs);
  if (ec != std::errc{} || ptr != end || jobs == 0) return 1;
  return jobs;
}

}  // namespace steinhaus
