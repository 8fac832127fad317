#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "steinhaus/orbit.hpp"
#include "steinhaus/residue_tuple.hpp"

namespace steinhaus {

/// Element t_{u,v} r^rotation i^reflection of the symmetry group of PO(p),
/// kept in normal form (0 <= u, v < p, rotation in {0,1,2}, reflection in
/// {0,1}).
///
/// Words are read left to right in order of application: the element acts on
/// a tuple by translating first, then rotating, then reflecting. Under this
/// reading the group satisfies
///   r t_{u,v} = t_{v-u,-u} r,   i t_{u,v} = t_{u,u-v} i,   i r = r^2 i.
struct GroupElement {
  std::size_t period = 1;
  std::int64_t u = 0;
  std::int64_t v = 0;
  int rotation = 0;
  int reflection = 0;

  static GroupElement identity(std::size_t p) { return {p, 0, 0, 0, 0}; }
  static GroupElement rotation_r(std::size_t p) { return {p, 0, 0, 1, 0}; }
  static GroupElement reflection_i(std::size_t p) { return {p, 0, 0, 0, 1}; }
  static GroupElement translation(std::size_t p, std::int64_t u, std::int64_t v);
  static GroupElement make(std::size_t p, std::int64_t u, std::int64_t v, int rotation, int reflection);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Normal form of the word g h (g applied first, then h).
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// All 6p^2 elements, ordered by (u, v, rotation, reflection).
std::vector<GroupElement> group_elements(std::size_t p);

/// Translates by (u, v), then rotates, then reflects. Satisfies
/// apply(compose(g, h), x) == apply(h, apply(g, x)).
ResidueTuple apply(const GroupElement& g, const PeriodGrid& grid);
ResidueTuple apply(const GroupElement& g, const ResidueTuple& x);

/// t_{u,v}(x) = (a_{-u, j-v})_j, read off the period grid.
ResidueTuple translate(const ResidueTuple& x, std::int64_t u, std::int64_t v);
/// Right side of the size-p Steinhaus triangle on x: (a_{j, p-1})_j.
ResidueTuple rotate_r(const ResidueTuple& x);
/// Entry reversal.
ResidueTuple reflect_i(const ResidueTuple& x);

/// Right side (a_{i, n-1})_i of the Steinhaus triangle on any finite
/// sequence; coincides with rotate_r on members of PO(p).
ResidueTuple triangle_right_side(const ResidueTuple& seq);

struct OrbitClass {
  std::size_t period = 0;
  ResidueTuple representative;  ///< lexicographically smallest member
  std::size_t size = 0;
  std::vector<ResidueTuple> members;  ///< sorted; may be left empty
};

/// Full orbit of x under the 6p^2 group elements.
OrbitClass group_orbit(const ResidueTuple& x);

/// PO(p) split into orbits, sorted by representative.
std::vector<OrbitClass> partition_classes(std::size_t p, bool keep_members = false);

}  // namespace steinhaus
