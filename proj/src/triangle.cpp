#include "steinhaus/triangle.hpp"

#include <algorithm>

#include "steinhaus/error.hpp"

namespace steinhaus {

const char* to_string(Orientation orientation) noexcept {
  return orientation == Orientation::Steinhaus ? "steinhaus" : "pascal";
}

std::size_t MultiplicityTable::total() const {
  std::size_t sum = 0;
  for (std::size_t c : counts) sum += c;
  return sum;
}

std::size_t MultiplicityTable::spread() const {
  if (counts.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo;
}

MultiplicityTable& MultiplicityTable::operator+=(const MultiplicityTable& other) {
  if (other.modulus != modulus) throw Error(ErrorCode::InvalidArgument, "multiplicity moduli differ");
  for (std::size_t x = 0; x < counts.size(); ++x) counts[x] += other.counts[x];
  return *this;
}

MultiplicityTable operator*(std::size_t k, const MultiplicityTable& a) {
  MultiplicityTable out = a;
  for (auto& c : out.counts) c *= k;
  return out;
}

Triangle::Triangle(Orientation orientation, int modulus, std::vector<std::vector<Residue>> rows)
    : orientation_(orientation), modulus_(modulus), rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t expected = orientation_ == Orientation::Steinhaus ? n - t : t + 1;
    if (rows_[t].size() != expected) {
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(t) + " has " +
                                                  std::to_string(rows_[t].size()) + " entries, expected " +
                                                  std::to_string(expected));
    }
    for (Residue e : rows_[t]) {
      if (e < 0 || e >= modulus_) throw Error(ErrorCode::InvalidResidue, "triangle cell out of range");
    }
  }
}

Triangle build_steinhaus(const ResidueTuple& seed) {
  const int m = seed.modulus();
  std::vector<std::vector<Residue>> rows;
  rows.reserve(seed.size());
  if (!seed.empty()) rows.emplace_back(seed.entries().begin(), seed.entries().end());
  for (std::size_t t = 1; t < seed.size(); ++t) {
    const auto& prev = rows.back();
    std::vector<Residue> row(prev.size() - 1);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = (prev[k] + prev[k + 1]) % m;
    rows.push_back(std::move(row));
  }
  return Triangle(Orientation::Steinhaus, m, std::move(rows));
}

Triangle build_pascal(const ResidueTuple& left, const ResidueTuple& right) {
  if (left.size() != right.size()) {
    throw Error(ErrorCode::MismatchedSides, "sides have lengths " + std::to_string(left.size()) + " and " +
                                                std::to_string(right.size()));
  }
  if (left.modulus() != right.modulus()) throw Error(ErrorCode::MismatchedSides, "sides have different moduli");
  if (!left.empty() && left[0] != right[0]) throw Error(ErrorCode::MismatchedSides, "sides disagree at the apex");

  const int m = left.modulus();
  std::vector<std::vector<Residue>> rows;
  rows.reserve(left.size());
  for (std::size_t t = 0; t < left.size(); ++t) {
    std::vector<Residue> row(t + 1);
    row.front() = left[t];
    row.back() = right[t];
    for (std::size_t k = 1; k < t; ++k) row[k] = (rows[t - 1][k - 1] + rows[t - 1][k]) % m;
    rows.push_back(std::move(row));
  }
  return Triangle(Orientation::Pascal, m, std::move(rows));
}

MultiplicityTable multiplicity(const Triangle& triangle) {
  MultiplicityTable table(triangle.modulus());
  for (const auto& row : triangle.rows())
    for (Residue e : row) table.add(e);
  return table;
}

Balance balance(const Triangle& triangle) {
  const std::size_t spread = multiplicity(triangle).spread();
  return {spread <= 1, spread};
}

bool satisfies_local_rule(const Triangle& triangle) {
  const int m = triangle.modulus();
  const auto& rows = triangle.rows();
  for (std::size_t t = 1; t < rows.size(); ++t) {
    if (triangle.orientation() == Orientation::Steinhaus) {
      for (std::size_t k = 0; k < rows[t].size(); ++k)
        if (rows[t][k] != (rows[t - 1][k] + rows[t - 1][k + 1]) % m) return false;
    } else {
      for (std::size_t k = 1; k < t; ++k)
        if (rows[t][k] != (rows[t - 1][k - 1] + rows[t - 1][k]) % m) return false;
    }
  }
  return true;
}

// With the Pascal triangle of size n sitting at columns n-1.. of a Steinhaus
// triangle of size 2n-1, its left side is column n-1 and its right side is
// the diagonal j - i = n-1. Solving the local rule upward from those two
// lines recovers every seed entry.
Triangle embed_pascal_in_steinhaus(const Triangle& pascal) {
  if (pascal.orientation() != Orientation::Pascal) {
    throw Error(ErrorCode::InvalidArgument, "embedding expects a Pascal triangle");
  }
  const std::size_t n = pascal.size();
  const int m = pascal.modulus();
  if (n == 0) return Triangle(Orientation::Steinhaus, m, {});

  std::vector<Residue> seed(2 * n - 1);

  // column c holds cells a_{t,c} for t = 0..c
  std::vector<Residue> column(n);
  for (std::size_t t = 0; t < n; ++t) column[t] = pascal.at(t, 0);
  seed[n - 1] = column[0];
  for (std::size_t c = n - 1; c > 0; --c) {
    std::vector<Residue> next(c);
    for (std::size_t t = 1; t <= c; ++t) next[t - 1] = static_cast<Residue>(floor_mod(column[t] - column[t - 1], m));
    column = std::move(next);
    seed[c - 1] = column[0];
  }

  // diagonal e holds cells a_{t,t+e} for t = 0..2n-2-e
  std::vector<Residue> diagonal(n);
  for (std::size_t t = 0; t < n; ++t) diagonal[t] = pascal.at(t, t);
  for (std::size_t e = n; e < 2 * n - 1; ++e) {
    std::vector<Residue> next(diagonal.size() - 1);
    for (std::size_t t = 1; t < diagonal.size(); ++t)
      next[t - 1] = static_cast<Residue>(floor_mod(diagonal[t] - diagonal[t - 1], m));
    diagonal = std::move(next);
    seed[e] = diagonal[0];
  }
  return build_steinhaus(ResidueTuple(std::move(seed), m));
}

Triangle extract_center(const Triangle& steinhaus) {
  if (steinhaus.orientation() != Orientation::Steinhaus || steinhaus.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "center extraction expects an odd-size Steinhaus triangle");
  }
  const std::size_t n = (steinhaus.size() + 1) / 2;
  std::vector<std::vector<Residue>> rows(n);
  for (std::size_t t = 0; t < n; ++t) {
    rows[t].resize(t + 1);
    // a_{t, n-1+k} lives at rows[t][n-1+k-t]
    for (std::size_t k = 0; k <= t; ++k) rows[t][k] = steinhaus.at(t, n - 1 + k - t);
  }
  return Triangle(Orientation::Pascal, steinhaus.modulus(), std::move(rows));
}

ResidueTuple steinhaus_seed(const Triangle& steinhaus) {
  if (steinhaus.size() == 0) return ResidueTuple({}, steinhaus.modulus());
  return ResidueTuple(steinhaus.rows().front(), steinhaus.modulus());
}

ResidueTuple pascal_left_side(const Triangle& pascal) {
  std::vector<Residue> side;
  for (const auto& row : pascal.rows()) side.push_back(row.front());
  return ResidueTuple(std::move(side), pascal.modulus());
}

ResidueTuple pascal_right_side(const Triangle& pascal) {
  std::vector<Residue> side;
  for (const auto& row : pascal.rows()) side.push_back(row.back());
  return ResidueTuple(std::move(side), pascal.modulus());
}

}  // namespace steinhaus
