#include "steinhaus/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "packed.hpp"
#include "steinhaus/error.hpp"

namespace steinhaus {
namespace {

void require_same_period(const GroupElement& g, const GroupElement& h) {
  if (g.period != h.period) throw Error(ErrorCode::InvalidArgument, "group elements act on different periods");
}

struct IndexPair {
  std::int64_t i;
  std::int64_t j;
};

// Orbit cell of r^rotation i^reflection (x) at (0, j), as a cell of the orbit
// of x.
IndexPair dihedral_source(int rotation, int reflection, std::int64_t j) {
  switch (rotation * 2 + reflection) {
    case 0: return {0, j};             // id
    case 1: return {0, -j - 1};        // i
    case 2: return {j, -1};            // r
    case 3: return {-j - 1, -1};       // r i
    case 4: return {-j - 1, -j - 1};   // r^2
    default: return {j, j};            // r^2 i
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

GroupElement GroupElement::translation(std::size_t p, std::int64_t u, std::int64_t v) {
  return make(p, u, v, 0, 0);
}

GroupElement GroupElement::make(std::size_t p, std::int64_t u, std::int64_t v, int rotation, int reflection) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "group period must be positive");
  const auto pp = static_cast<std::int64_t>(p);
  return {p, floor_mod(u, pp), floor_mod(v, pp), static_cast<int>(floor_mod(rotation, 3)),
          static_cast<int>(floor_mod(reflection, 2))};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  require_same_period(g, h);
  std::int64_t u = h.u;
  std::int64_t v = h.v;
  // move h's translation to the left of g's reflection, then of g's rotation
  if (g.reflection) v = u - v;
  for (int k = 0; k < g.rotation; ++k) {
    const std::int64_t nu = v - u;
    v = -u;
    u = nu;
  }
  const int rotation = g.rotation + (g.reflection ? -h.rotation : h.rotation);
  return GroupElement::make(g.period, g.u + u, g.v + v, rotation, g.reflection ^ h.reflection);
}

std::vector<GroupElement> group_elements(std::size_t p) {
  std::vector<GroupElement> out;
  out.reserve(6 * p * p);
  const auto pp = static_cast<std::int64_t>(p);
  for (std::int64_t u = 0; u < pp; ++u)
    for (std::int64_t v = 0; v < pp; ++v)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b) out.push_back({p, u, v, a, b});
  return out;
}

ResidueTuple apply(const GroupElement& g, const PeriodGrid& grid) {
  if (g.period != grid.period()) throw Error(ErrorCode::InvalidArgument, "element and tuple periods differ");
  const auto p = static_cast<std::int64_t>(grid.period());
  std::vector<Residue> out(grid.period());
  for (std::int64_t j = 0; j < p; ++j) {
    const IndexPair src = dihedral_source(g.rotation, g.reflection, j);
    out[static_cast<std::size_t>(j)] = grid.at(src.i - g.u, src.j - g.v);
  }
  return ResidueTuple(std::move(out), 2);
}

ResidueTuple apply(const GroupElement& g, const ResidueTuple& x) { return apply(g, build_period_grid(x)); }

ResidueTuple translate(const ResidueTuple& x, std::int64_t u, std::int64_t v) {
  return apply(GroupElement::translation(x.size(), u, v), x);
}

ResidueTuple rotate_r(const ResidueTuple& x) { return build_period_grid(x).column(-1); }

ResidueTuple reflect_i(const ResidueTuple& x) { return x.reversed(); }

ResidueTuple triangle_right_side(const ResidueTuple& seq) {
  std::vector<Residue> side;
  side.reserve(seq.size());
  ResidueTuple row = seq;
  while (!row.empty()) {
    side.push_back(row[row.size() - 1]);
    std::vector<Residue> next(row.size() - 1);
    for (std::size_t k = 0; k + 1 < row.size(); ++k) next[k] = (row[k] + row[k + 1]) % seq.modulus();
    row = ResidueTuple(std::move(next), seq.modulus());
  }
  return ResidueTuple(std::move(side), seq.modulus());
}

OrbitClass group_orbit(const ResidueTuple& x) {
  const PeriodGrid grid = build_period_grid(x);
  std::vector<ResidueTuple> images;
  images.reserve(6 * x.size() * x.size());
  for (const auto& g : group_elements(x.size())) images.push_back(apply(g, grid));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  OrbitClass cls;
  cls.period = x.size();
  cls.representative = images.front();
  cls.size = images.size();
  cls.members = std::move(images);
  return cls;
}

std::vector<OrbitClass> partition_classes(std::size_t p, bool keep_members) {
  const auto tuples = enumerate_periodic_tuples(p);
  std::vector<std::uint64_t> bits;
  bits.reserve(tuples.size());
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(tuples.size() * 2);
  for (const auto& t : tuples) {
    index.emplace(t.to_bits(), static_cast<std::uint32_t>(bits.size()));
    bits.push_back(t.to_bits());
  }
  auto index_of = [&](std::uint64_t image) {
    const auto it = index.find(image);
    if (it == index.end()) throw Error(ErrorCode::NotPeriodic, "generator image left PO(p)");
    return it->second;
  };

  // Union along the four generators r, i, t_{1,0}, t_{0,1}.
  DisjointSets sets(bits.size());
  for (std::uint32_t k = 0; k < bits.size(); ++k) {
    std::uint64_t row = bits[k];
    std::uint64_t right_side = 0;
    for (std::size_t i = 0; i < p; ++i) {
      right_side |= ((row >> (p - 1)) & 1U) << i;
      if (i + 1 < p) row = packed::derive(row, p);
    }
    sets.unite(k, index_of(right_side));                              // r
    sets.unite(k, index_of(packed::reverse(bits[k], p)));             // i
    sets.unite(k, index_of(row));                                     // t_{1,0}: row p-1
    sets.unite(k, index_of(packed::shift_right_cyclic(bits[k], p)));  // t_{0,1}
  }

  // tuples are already in lexicographic order, so the first member seen for
  // each root is its representative
  std::unordered_map<std::uint32_t, std::size_t> class_of_root;
  std::vector<OrbitClass> classes;
  for (std::uint32_t k = 0; k < bits.size(); ++k) {
    const std::uint32_t root = sets.find(k);
    auto [it, inserted] = class_of_root.emplace(root, classes.size());
    if (inserted) {
      OrbitClass cls;
      cls.period = p;
      cls.representative = tuples[k];
      classes.push_back(std::move(cls));
    }
    OrbitClass& cls = classes[it->second];
    ++cls.size;
    if (keep_members) cls.members.push_back(tuples[k]);
  }
  return classes;
}

}  // namespace steinhaus
