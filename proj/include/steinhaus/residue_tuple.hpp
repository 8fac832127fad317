#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steinhaus {

/// Residue modulo a small modulus. Values are always kept in [0, modulus).
using Residue = int;

/// Reduces any integer into [0, m).
constexpr std::int64_t floor_mod(std::int64_t value, std::int64_t m) {
  const std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

/// A finite sequence over Z/m. The empty tuple is a valid value.
class ResidueTuple {
 public:
  ResidueTuple() = default;
  explicit ResidueTuple(std::vector<Residue> entries, int modulus = 2);

  static ResidueTuple zeros(std::size_t length, int modulus = 2);

  /// Accepts either a compact digit string ("0010100", m <= 10) or a
  /// comma-separated list ("0,12,3"). Whitespace is ignored.
  static ResidueTuple parse(std::string_view text, int modulus = 2);

  /// Binary tuple of length `length` whose entry j is bit j of `bits`.
  static ResidueTuple from_bits(std::uint64_t bits, std::size_t length);

  int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Residue operator[](std::size_t index) const { return entries_[index]; }
  /// Entry of the periodic extension, any integer index.
  Residue cyclic(std::int64_t index) const {
    return entries_[static_cast<std::size_t>(floor_mod(index, static_cast<std::int64_t>(size())))];
  }
  std::span<const Residue> entries() const noexcept { return entries_; }

  /// Packs a binary tuple of length <= 64 with entry j at bit j.
  std::uint64_t to_bits() const;

  /// Digits for m <= 10, comma-separated otherwise.
  std::string to_string() const;

  /// Concatenation of `count` copies (X^k).
  ResidueTuple repeat(std::size_t count) const;
  ResidueTuple reversed() const;

  // Lexicographic on entries first, which is the order used for class
  // representatives.
  friend auto operator<=>(const ResidueTuple&, const ResidueTuple&) = default;
  friend bool operator==(const ResidueTuple&, const ResidueTuple&) = default;

 private:
  std::vector<Residue> entries_;
  int modulus_ = 2;
};

}  // namespace steinhaus
