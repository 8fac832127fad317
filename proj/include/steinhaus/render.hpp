#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/balance_search.hpp"
#include "steinhaus/residue_tuple.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kWhite = {255, 255, 255};
inline constexpr Rgb kBlack = {0, 0, 0};
inline constexpr Rgb kOutside = {192, 192, 192};
inline constexpr Rgb kOutline = {220, 20, 20};

/// Half-open ranges of orbit rows and columns.
struct Window {
  std::int64_t row_begin = 0;
  std::int64_t row_end = 0;
  std::int64_t col_begin = 0;
  std::int64_t col_end = 0;
};

/// Triangle outline drawn over an orbit; (i0, j0) is the principal vertex.
struct Overlay {
  Orientation kind = Orientation::Steinhaus;
  std::int64_t i0 = 0;
  std::int64_t j0 = 0;
  std::size_t n = 0;
};

struct RenderSpec {
  std::size_t cell_size = 1;
  /// Color of each residue; empty means a gray ramp from white (0) to black (m-1).
  std::vector<Rgb> palette;
  /// Defaults to one p x p period starting at (0, 0).
  std::optional<Window> window;
  std::vector<Overlay> overlays;
  std::size_t max_pixels = 1U << 24;
};

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;  ///< row-major

  Image() = default;
  Image(std::size_t w, std::size_t h, Rgb fill) : width(w), height(h), pixels(w * h, fill) {}
  Rgb& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
  const Rgb& at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

std::vector<Rgb> default_palette(int modulus);

/// ASCII bitmap; throws InvalidArgument unless every pixel is black or white.
std::string encode_pbm(const Image& image);
/// ASCII pixmap with maxval 255.
std::string encode_ppm(const Image& image);

/// Orbit cells of the window, one cell_size square per cell, overlays
/// outlined. Rows come from repeated derivation of x^infinity; negative rows
/// need x to generate a |x|-periodic orbit. Throws WindowTooLarge above
/// spec.max_pixels.
Image draw_orbit(const ResidueTuple& x, const RenderSpec& spec);
/// PBM for binary orbits without overlays, PPM otherwise.
std::string render_orbit(const ResidueTuple& x, const RenderSpec& spec);

/// Tint applied to residue colors by block role, so that base, strip and
/// period cells stay distinguishable even at one pixel per cell.
Rgb family_color(const std::vector<Rgb>& palette, Residue value, BlockRole role);

/// The size-(Kp+r) triangle of the family on an n x n cell grid (cell (t, c)
/// is orbit cell (i0+t, j0+c)); cells outside the triangle are gray. With
/// cell_size >= 3 the block boundaries are outlined. The window and
/// overlays of the spec are ignored.
Image draw_family(const FamilyCertificate& cert, std::size_t max_multiplier, const RenderSpec& spec);
std::string render_family(const FamilyCertificate& cert, std::size_t max_multiplier, const RenderSpec& spec);

}  // namespace steinhaus
