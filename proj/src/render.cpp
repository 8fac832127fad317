#include "steinhaus/render.hpp"

#include <set>
#include <string>
#include <utility>

#include "steinhaus/error.hpp"
#include "steinhaus/orbit.hpp"

namespace steinhaus {
namespace {

constexpr std::size_t kLineLimit = 70;

using Cell = std::pair<std::int64_t, std::int64_t>;

Rgb blend(Rgb base, Rgb tint, int tint_percent) {
  Rgb out{};
  for (std::size_t c = 0; c < 3; ++c) out[c] = static_cast<std::uint8_t>((base[c] * (100 - tint_percent) + tint[c] * tint_percent) / 100);
  return out;
}

std::vector<Rgb> resolve_palette(const RenderSpec& spec, int modulus) {
  if (spec.palette.empty()) return default_palette(modulus);
  if (spec.palette.size() < static_cast<std::size_t>(modulus)) {
    throw Error(ErrorCode::InvalidArgument, "palette has " + std::to_string(spec.palette.size()) +
                                                " colors for modulus " + std::to_string(modulus));
  }
  return spec.palette;
}

void check_pixels(std::size_t cols, std::size_t rows, const RenderSpec& spec) {
  if (spec.cell_size == 0) throw Error(ErrorCode::InvalidArgument, "cell size must be at least 1");
  const std::size_t cap = spec.max_pixels;
  const std::size_t cell = spec.cell_size;
  const bool fits = cols <= cap / cell && rows <= cap / cell && (cols == 0 || rows * cell <= cap / (cols * cell));
  if (!fits) {
    throw Error(ErrorCode::WindowTooLarge, std::to_string(cols) + "x" + std::to_string(rows) + " cells at size " +
                                               std::to_string(cell) + " exceed the cap of " + std::to_string(cap) +
                                               " pixels");
  }
}

void fill_cell(Image& image, std::size_t row, std::size_t col, std::size_t cell, Rgb color) {
  for (std::size_t dy = 0; dy < cell; ++dy)
    for (std::size_t dx = 0; dx < cell; ++dx) image.at(col * cell + dx, row * cell + dy) = color;
}

enum class Side { Top, Bottom, Left, Right };

void draw_side(Image& image, std::size_t row, std::size_t col, std::size_t cell, Side side) {
  const std::size_t x0 = col * cell;
  const std::size_t y0 = row * cell;
  for (std::size_t k = 0; k < cell; ++k) {
    switch (side) {
      case Side::Top: image.at(x0 + k, y0) = kOutline; break;
      case Side::Bottom: image.at(x0 + k, y0 + cell - 1) = kOutline; break;
      case Side::Left: image.at(x0, y0 + k) = kOutline; break;
      case Side::Right: image.at(x0 + cell - 1, y0 + k) = kOutline; break;
    }
  }
}

std::vector<Cell> overlay_cells(const Overlay& overlay) {
  std::vector<Cell> cells;
  const auto n = static_cast<std::int64_t>(overlay.n);
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int64_t first = overlay.kind == Orientation::Steinhaus ? t : 0;
    const std::int64_t last = overlay.kind == Orientation::Steinhaus ? n - 1 : t;
    for (std::int64_t c = first; c <= last; ++c) cells.emplace_back(overlay.i0 + t, overlay.j0 + c);
  }
  return cells;
}

}  // namespace

std::vector<Rgb> default_palette(int modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "palette needs a modulus of at least 2");
  std::vector<Rgb> palette(static_cast<std::size_t>(modulus));
  for (int x = 0; x < modulus; ++x) {
    const auto level = static_cast<std::uint8_t>(255 - 255 * x / (modulus - 1));
    palette[static_cast<std::size_t>(x)] = {level, level, level};
  }
  return palette;
}

std::string encode_pbm(const Image& image) {
  std::string out = "P1\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n";
  for (std::size_t y = 0; y < image.height; ++y) {
    std::size_t line = 0;
    for (std::size_t x = 0; x < image.width; ++x) {
      const Rgb& px = image.at(x, y);
      if (px != kWhite && px != kBlack) throw Error(ErrorCode::InvalidArgument, "bitmap pixels must be black or white");
      if (line == kLineLimit) {
        out += '\n';
        line = 0;
      }
      out += px == kBlack ? '1' : '0';
      ++line;
    }
    out += '\n';
  }
  return out;
}

std::string encode_ppm(const Image& image) {
  std::string out = "P3\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  for (std::size_t y = 0; y < image.height; ++y) {
    std::size_t line = 0;
    for (std::size_t x = 0; x < image.width; ++x) {
      const Rgb& px = image.at(x, y);
      const std::string token =
          std::to_string(px[0]) + " " + std::to_string(px[1]) + " " + std::to_string(px[2]);
      if (line != 0 && line + 1 + token.size() > kLineLimit) {
        out += '\n';
        line = 0;
      }
      if (line != 0) {
        out += ' ';
        ++line;
      }
      out += token;
      line += token.size();
    }
    out += '\n';
  }
  return out;
}

Image draw_orbit(const ResidueTuple& x, const RenderSpec& spec) {
  if (x.empty()) throw Error(ErrorCode::EmptyTuple, "cannot render the orbit of an empty tuple");
  const auto p = static_cast<std::int64_t>(x.size());
  const Window window = spec.window.value_or(Window{0, p, 0, p});
  if (window.row_end <= window.row_begin || window.col_end <= window.col_begin) {
    throw Error(ErrorCode::InvalidArgument, "render window must be non-empty");
  }
  const auto rows = static_cast<std::size_t>(window.row_end - window.row_begin);
  const auto cols = static_cast<std::size_t>(window.col_end - window.col_begin);
  check_pixels(cols, rows, spec);
  const std::vector<Rgb> palette = resolve_palette(spec, x.modulus());

  // Each orbit row is |x|-periodic; rows repeat with period |x| exactly
  // when x generates a periodic orbit.
  const bool periodic = generates_periodic_orbit(x);
  if (!periodic && window.row_begin < 0) {
    throw Error(ErrorCode::NotPeriodic, "negative rows need a periodic orbit");
  }
  const std::int64_t computed = periodic ? p : window.row_end;
  if (!periodic && static_cast<std::size_t>(computed) > spec.max_pixels) {
    throw Error(ErrorCode::WindowTooLarge, "window reaches row " + std::to_string(computed));
  }
  std::vector<ResidueTuple> orbit_rows;
  orbit_rows.reserve(static_cast<std::size_t>(computed));
  orbit_rows.push_back(x);
  while (static_cast<std::int64_t>(orbit_rows.size()) < computed) orbit_rows.push_back(derive_tuple(orbit_rows.back()));
  auto value_at = [&](std::int64_t i, std::int64_t j) {
    const std::int64_t row = periodic ? floor_mod(i, p) : i;
    return orbit_rows[static_cast<std::size_t>(row)].cyclic(j);
  };

  const std::size_t cell = spec.cell_size;
  Image image(cols * cell, rows * cell, kWhite);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Residue v = value_at(window.row_begin + static_cast<std::int64_t>(r), window.col_begin + static_cast<std::int64_t>(c));
      fill_cell(image, r, c, cell, palette[static_cast<std::size_t>(v)]);
    }
  }

  for (Overlay overlay : spec.overlays) {
    // Move the overlay to the copy whose principal vertex lies in the first
    // period of the window.
    overlay.j0 = window.col_begin + floor_mod(overlay.j0 - window.col_begin, p);
    if (periodic) overlay.i0 = window.row_begin + floor_mod(overlay.i0 - window.row_begin, p);
    const std::vector<Cell> cells = overlay_cells(overlay);
    const std::set<Cell> members(cells.begin(), cells.end());
    for (const auto& [i, j] : cells) {
      if (i < window.row_begin || i >= window.row_end || j < window.col_begin || j >= window.col_end) {
        throw Error(ErrorCode::InvalidArgument, "overlay of size " + std::to_string(overlay.n) +
                                                    " does not fit the render window");
      }
    }
    for (const auto& [i, j] : cells) {
      const auto r = static_cast<std::size_t>(i - window.row_begin);
      const auto c = static_cast<std::size_t>(j - window.col_begin);
      const bool open[4] = {!members.count({i - 1, j}), !members.count({i + 1, j}), !members.count({i, j - 1}),
                            !members.count({i, j + 1})};
      if (!(open[0] || open[1] || open[2] || open[3])) continue;
      if (cell < 3) {
        fill_cell(image, r, c, cell, blend(palette[static_cast<std::size_t>(value_at(i, j))], kOutline, 60));
        continue;
      }
      const Side sides[4] = {Side::Top, Side::Bottom, Side::Left, Side::Right};
      for (std::size_t s = 0; s < 4; ++s)
        if (open[s]) draw_side(image, r, c, cell, sides[s]);
    }
  }
  return image;
}

std::string render_orbit(const ResidueTuple& x, const RenderSpec& spec) {
  const Image image = draw_orbit(x, spec);
  const bool bitmap = x.modulus() == 2 && spec.overlays.empty() && spec.palette.empty();
  return bitmap ? encode_pbm(image) : encode_ppm(image);
}

Rgb family_color(const std::vector<Rgb>& palette, Residue value, BlockRole role) {
  const Rgb base = palette[static_cast<std::size_t>(value)];
  switch (role) {
    case BlockRole::Base: return base;
    case BlockRole::Strip: return blend(base, Rgb{60, 120, 220}, 40);
    case BlockRole::Period: return blend(base, Rgb{240, 170, 30}, 40);
  }
  return base;
}

Image draw_family(const FamilyCertificate& cert, std::size_t max_multiplier, const RenderSpec& spec) {
  const std::size_t p = cert.period();
  const std::size_t n = cert.size_for(max_multiplier);
  check_pixels(n, n, spec);
  const std::vector<Rgb> palette = resolve_palette(spec, cert.generator.modulus());
  const PeriodGrid grid = build_period_grid(cert.generator);
  const bool steinhaus = cert.kind == Orientation::Steinhaus;
  auto inside = [&](std::size_t t, std::size_t c) { return t < n && c < n && (steinhaus ? c >= t : c <= t); };
  auto same_block = [&](const BlockLabel& a, const BlockLabel& b) {
    return a.role == b.role && a.strip == b.strip && a.column_block == b.column_block;
  };

  const std::size_t cell = spec.cell_size;
  Image image(n * cell, n * cell, kOutside);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!inside(t, c)) continue;
      const Residue v = grid.at(cert.i0 + static_cast<std::int64_t>(t), cert.j0 + static_cast<std::int64_t>(c));
      const BlockLabel label = classify_family_cell(cert.kind, p, cert.remainder, t, c);
      fill_cell(image, t, c, cell, family_color(palette, v, label.role));
    }
  }
  if (cell < 3) return image;

  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!inside(t, c)) continue;
      const BlockLabel label = classify_family_cell(cert.kind, p, cert.remainder, t, c);
      auto boundary = [&](bool has, std::size_t nt, std::size_t nc) {
        return !has || !inside(nt, nc) || !same_block(label, classify_family_cell(cert.kind, p, cert.remainder, nt, nc));
      };
      if (boundary(t > 0, t - 1, c)) draw_side(image, t, c, cell, Side::Top);
      if (boundary(true, t + 1, c)) draw_side(image, t, c, cell, Side::Bottom);
      if (boundary(c > 0, t, c - 1)) draw_side(image, t, c, cell, Side::Left);
      if (boundary(true, t, c + 1)) draw_side(image, t, c, cell, Side::Right);
    }
  }
  return image;
}

std::string render_family(const FamilyCertificate& cert, std::size_t max_multiplier, const RenderSpec& spec) {
  return encode_ppm(draw_family(cert, max_multiplier, spec));
}

}  // namespace steinhaus
