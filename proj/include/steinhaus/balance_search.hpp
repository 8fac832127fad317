#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steinhaus/orbit.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

/// The Steinhaus triangle (a_{i0+i, j0+j})_{0<=i<=j<n} of a periodic orbit.
Triangle extract_steinhaus_block(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n);
/// The generalized Pascal triangle (a_{i0+i, j0+j})_{0<=j<=i<n}.
Triangle extract_pascal_block(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t n);

/// Evidence that the triangles of sizes kp + r at a fixed principal vertex
/// are balanced for every k >= 0.
///
/// For the Steinhaus kind, base_block is the size-r triangle, strip_block the
/// cells of the size-(p+r) triangle in columns r and beyond, and period_block
/// the p x p period. For the Pascal kind, base_block is the size-r triangle
/// and strip_block the cells of the size-(p+r) triangle in columns below p.
struct FamilyCertificate {
  Orientation kind = Orientation::Steinhaus;
  ResidueTuple generator;
  std::int64_t i0 = 0;  ///< reduced into [0, p)
  std::int64_t j0 = 0;  ///< reduced into [0, p)
  std::size_t remainder = 0;
  MultiplicityTable base_block;
  MultiplicityTable strip_block;
  MultiplicityTable period_block;

  std::size_t period() const noexcept { return generator.size(); }
  std::size_t size_for(std::size_t k) const noexcept { return k * period() + remainder; }
};

/// Throws PeriodNotDivisibleBy4 or UnbalancedPeriod when the grid cannot
/// carry a balanced family, and InvalidArgument when r >= p. Returns nothing
/// when the blocks are unbalanced.
std::optional<FamilyCertificate> check_steinhaus_family(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0,
                                                        std::size_t r);
std::optional<FamilyCertificate> check_pascal_family(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0,
                                                     std::size_t r);
std::optional<FamilyCertificate> check_family(Orientation kind, const PeriodGrid& grid, std::int64_t i0,
                                              std::int64_t j0, std::size_t r);

/// Extracts the triangles of sizes r, p+r, ..., Kp+r straight from the orbit
/// and counts them. Also confirms the recorded block multiplicities.
bool oracle_verify_family(const FamilyCertificate& cert, std::size_t max_multiplier);

struct FamilyPosition {
  std::int64_t i0 = 0;
  std::int64_t j0 = 0;
  std::size_t remainder = 0;
  friend bool operator==(const FamilyPosition&, const FamilyPosition&) = default;
};

/// Pascal family (i0+r+1, j0+r, p-1-r) dual to the Steinhaus family
/// (i0, j0, r). Positions are left unreduced.
FamilyPosition dual_position(std::int64_t i0, std::int64_t j0, std::size_t r, std::size_t p);
/// Steinhaus family (i0+r-p, j0+r+1-p, p-1-r) dual to the Pascal family.
FamilyPosition steinhaus_dual_position(std::int64_t i0, std::int64_t j0, std::size_t r, std::size_t p);

/// Z = (a_{i0, j0+j})_j: the periodic top row of every Steinhaus triangle
/// with principal vertex (i0, j0).
ResidueTuple generator_tuple(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0);
/// (Z_l, Z_r) = ((a_{i0+i, j0})_i, (a_{i0+i, j0+i})_i): the left and right
/// sides of every Pascal triangle with apex (i0, j0).
std::pair<ResidueTuple, ResidueTuple> pascal_generator_tuples(const PeriodGrid& grid, std::int64_t i0,
                                                              std::int64_t j0);

/// Multiplicities of the four blocks pairing a Steinhaus family with its
/// dual Pascal family, plus the period.
struct DualityBlocks {
  MultiplicityTable steinhaus_base;   ///< U0
  MultiplicityTable steinhaus_strip;  ///< U1
  MultiplicityTable pascal_base;      ///< V1
  MultiplicityTable pascal_strip;     ///< V0
  MultiplicityTable period;           ///< P
};
DualityBlocks duality_blocks(const PeriodGrid& grid, std::int64_t i0, std::int64_t j0, std::size_t r);

/// Which block of the family decomposition a cell of the size-(kp+r)
/// triangle belongs to. Cell coordinates are relative to the principal
/// vertex.
enum class BlockRole { Base, Strip, Period };
struct BlockLabel {
  BlockRole role = BlockRole::Base;
  std::size_t strip = 0;  ///< strip index for Strip and Period cells
  std::size_t column_block = 0;  ///< for Period cells: which p x p square in the strip row
};
BlockLabel classify_family_cell(Orientation kind, std::size_t p, std::size_t r, std::size_t i, std::size_t j);

/// Remainders r admitting a balanced family, with the first witness found in
/// (i0, j0) order for each.
struct RemainderSet {
  ResidueTuple class_rep;
  Orientation kind = Orientation::Steinhaus;
  std::vector<FamilyCertificate> witnesses;  ///< ascending by remainder

  std::vector<std::size_t> remainders() const;
  std::size_t size() const noexcept { return witnesses.size(); }
  bool full() const noexcept { return witnesses.size() == class_rep.size(); }
  const FamilyCertificate* witness_for(std::size_t r) const;
};

/// Scans every (i0, j0, r) in [0,p)^3 on the orbit of the representative.
/// `jobs` worker threads; the result does not depend on it.
RemainderSet remainder_set(const ResidueTuple& class_rep, Orientation kind, std::size_t jobs = 1);

/// Classes of PO(p) whose period is balanced.
std::vector<OrbitClass> balanced_period_classes(std::size_t p);

struct ClassSearchResult {
  OrbitClass cls;
  RemainderSet steinhaus;
  RemainderSet pascal;
  /// The Pascal remainders equal {p-1-r : r Steinhaus remainder} and every
  /// witness's dual position is accepted by the other predicate.
  bool duality_consistent = false;
};

struct SearchReport {
  std::size_t p = 0;
  std::vector<ClassSearchResult> classes;

  /// Representatives whose Steinhaus remainder set is all of {0, ..., p-1}.
  std::vector<ResidueTuple> full_classes() const;
};

SearchReport full_search(std::size_t p, std::size_t jobs = 1);

/// Worker count from the STEINHAUS_JOBS environment variable, or 1.
std::size_t default_jobs();

}  // namespace steinhaus
