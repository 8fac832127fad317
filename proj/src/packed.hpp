#pragma once

// Binary tuples of length p <= 64 packed with entry j at bit j.

#include <bit>
#include <cstddef>
#include <cstdint>

namespace steinhaus::packed {

constexpr std::uint64_t mask(std::size_t p) { return p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1; }

/// Cyclic shift moving entry j to j+1.
constexpr std::uint64_t shift_right_cyclic(std::uint64_t x, std::size_t p) {
  if (p <= 1) return x;
  return ((x << 1) | (x >> (p - 1))) & mask(p);
}

constexpr std::uint64_t shift_cyclic(std::uint64_t x, std::size_t p, std::size_t by) {
  by %= p;
  if (by == 0) return x;
  return ((x << by) | (x >> (p - by))) & mask(p);
}

/// One derivation step: entry j becomes a_{j-1} + a_j.
constexpr std::uint64_t derive(std::uint64_t x, std::size_t p) { return x ^ shift_right_cyclic(x, p); }

constexpr std::uint64_t reverse(std::uint64_t x, std::size_t p) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < p; ++j) out |= ((x >> j) & 1U) << (p - 1 - j);
  return out;
}

/// Key whose integer order is the lexicographic order of the tuples.
constexpr std::uint64_t lex_key(std::uint64_t x, std::size_t p) { return reverse(x, p); }

}  // namespace steinhaus::packed
