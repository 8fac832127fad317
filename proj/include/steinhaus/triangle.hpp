#pragma once

#include <cstddef>
#include <vector>

#include "steinhaus/residue_tuple.hpp"

namespace steinhaus {

/// Steinhaus triangles point down (rows shrink), Pascal triangles point up
/// (rows grow).
enum class Orientation { Steinhaus, Pascal };

const char* to_string(Orientation orientation) noexcept;

constexpr std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

/// Number of occurrences of each residue.
struct MultiplicityTable {
  int modulus = 2;
  std::vector<std::size_t> counts = std::vector<std::size_t>(2, 0);

  MultiplicityTable() = default;
  explicit MultiplicityTable(int m) : modulus(m), counts(static_cast<std::size_t>(m), 0) {}
  MultiplicityTable(int m, std::vector<std::size_t> c) : modulus(m), counts(std::move(c)) {}

  std::size_t operator[](Residue x) const { return counts[static_cast<std::size_t>(x)]; }
  void add(Residue x, std::size_t times = 1) { counts[static_cast<std::size_t>(x)] += times; }

  std::size_t total() const;
  /// Largest pairwise difference between two residue counts.
  std::size_t spread() const;
  bool balanced() const { return spread() <= 1; }

  MultiplicityTable& operator+=(const MultiplicityTable& other);
  friend MultiplicityTable operator+(MultiplicityTable a, const MultiplicityTable& b) { return a += b; }
  friend MultiplicityTable operator*(std::size_t k, const MultiplicityTable& a);
  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// A triangle of residues stored row by row.
///
/// Steinhaus row t has n - t entries and rows[t][k] is the orbit cell
/// a_{t, t+k}; Pascal row t has t + 1 entries and rows[t][k] is a_{t, k}.
/// Either way every derived cell is the sum of its two parents mod m.
class Triangle {
 public:
  Triangle() = default;
  /// Checks the row shape only; use satisfies_local_rule() for the rule.
  Triangle(Orientation orientation, int modulus, std::vector<std::vector<Residue>> rows);

  Orientation orientation() const noexcept { return orientation_; }
  int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t cell_count() const noexcept { return triangular(rows_.size()); }
  const std::vector<std::vector<Residue>>& rows() const noexcept { return rows_; }
  Residue at(std::size_t row, std::size_t index) const { return rows_[row][index]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  Orientation orientation_ = Orientation::Steinhaus;
  int modulus_ = 2;
  std::vector<std::vector<Residue>> rows_;
};

struct Balance {
  bool balanced;
  std::size_t spread;
};

Triangle build_steinhaus(const ResidueTuple& seed);

/// Throws MismatchedSides unless both sides share length, modulus and apex.
Triangle build_pascal(const ResidueTuple& left, const ResidueTuple& right);

MultiplicityTable multiplicity(const Triangle& triangle);
Balance balance(const Triangle& triangle);
inline bool is_balanced(const Triangle& triangle) { return balance(triangle).balanced; }

bool satisfies_local_rule(const Triangle& triangle);

/// The size-(2n-1) Steinhaus triangle whose central apex-up region is the
/// given Pascal triangle of size n.
Triangle embed_pascal_in_steinhaus(const Triangle& pascal);

/// Inverse of embed_pascal_in_steinhaus for odd-size Steinhaus triangles.
Triangle extract_center(const Triangle& steinhaus);

/// Top row of a Steinhaus triangle, or the (left, right) sides of a Pascal one.
ResidueTuple steinhaus_seed(const Triangle& steinhaus);
ResidueTuple pascal_left_side(const Triangle& pascal);
ResidueTuple pascal_right_side(const Triangle& pascal);

}  // namespace steinhaus
