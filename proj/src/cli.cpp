#include "steinhaus/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>

#include "steinhaus/balance_search.hpp"
#include "steinhaus/census.hpp"
#include "steinhaus/error.hpp"
#include "steinhaus/modm.hpp"
#include "steinhaus/orbit.hpp"
#include "steinhaus/render.hpp"
#include "steinhaus/report.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus::cli {
namespace {

const std::map<std::string, Orientation> kKinds = {{"steinhaus", Orientation::Steinhaus},
                                                   {"pascal", Orientation::Pascal}};

std::int64_t parse_int(const std::string& text, const std::string& option) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CLI::ValidationError(option, "'" + text + "' is not an integer");
  }
  return value;
}

// "a:b" as the half-open range [a, b).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const std::string& option) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError(option, "expected BEGIN:END, got '" + text + "'");
  return {parse_int(text.substr(0, colon), option), parse_int(text.substr(colon + 1), option)};
}

// "kind,i0,j0,n"
Overlay parse_overlay(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t comma = text.find(','); comma != std::string::npos; comma = text.find(',', start)) {
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 4 || !kKinds.count(parts[0])) {
    throw CLI::ValidationError("--overlay", "expected KIND,I0,J0,N, got '" + text + "'");
  }
  const std::int64_t n = parse_int(parts[3], "--overlay");
  if (n < 0) throw CLI::ValidationError("--overlay", "size must be non-negative");
  return {kKinds.at(parts[0]), parse_int(parts[1], "--overlay"), parse_int(parts[2], "--overlay"),
          static_cast<std::size_t>(n)};
}

void add_output_options(CLI::App* sub, std::string& format, std::string& out_path) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--out", out_path, "Write to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic balanced binary triangles: orbits, symmetry classes and balanced families"};
  app.name(args.empty() ? "steinhaus" : args.front());
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;

  // triangle
  auto* triangle_cmd = app.add_subcommand("triangle", "Build a triangle and report its balance");
  std::string seed_text, left_text, right_text;
  int modulus = 2;
  auto* seed_opt = triangle_cmd->add_option("--seed-tuple", seed_text, "Top row of a Steinhaus triangle");
  auto* left_opt = triangle_cmd->add_option("--left", left_text, "Left side of a Pascal triangle");
  auto* right_opt = triangle_cmd->add_option("--right", right_text, "Right side of a Pascal triangle");
  left_opt->needs(right_opt);
  right_opt->needs(left_opt);
  seed_opt->excludes(left_opt);
  triangle_cmd->add_option("--modulus", modulus, "Modulus of the entries")->check(CLI::Range(2, 1 << 20));
  add_output_options(triangle_cmd, format, out_path);

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel dimensions of the Wendt matrices");
  std::size_t p = 0;
  std::size_t p_max = 24;
  auto* kernel_p = kernel_cmd->add_option("--p", p, "A single period")->check(CLI::Range(1, 4096));
  kernel_cmd->add_option("--p-max", p_max, "Periods 1..P")->check(CLI::Range(1, 4096))->excludes(kernel_p);
  add_output_options(kernel_cmd, format, out_path);

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "Symmetry classes of periodic tuples");
  auto* classes_p = classes_cmd->add_option("--p", p, "List the classes of one period")->check(CLI::Range(1, 64));
  classes_cmd->add_option("--p-max", p_max, "Count the classes of periods 1..P")
      ->check(CLI::Range(1, 64))
      ->excludes(classes_p);
  add_output_options(classes_cmd, format, out_path);

  // balanced-classes
  auto* balanced_cmd = app.add_subcommand("balanced-classes", "Classes whose period is balanced");
  auto* balanced_p = balanced_cmd->add_option("--p", p, "List the balanced classes of one period")
                         ->check(CLI::Range(1, 64));
  balanced_cmd->add_option("--p-max", p_max, "Count them for the multiples of 4 up to P")
      ->check(CLI::Range(4, 64))
      ->excludes(balanced_p);
  add_output_options(balanced_cmd, format, out_path);

  // search
  auto* search_cmd = app.add_subcommand("search", "Remainder sets and family witnesses");
  std::size_t search_p = 24;
  std::size_t jobs = default_jobs();
  std::size_t k_verify = 0;
  bool summary = false;
  search_cmd->add_option("--p", search_p, "Period")->check(CLI::Range(4, 64));
  search_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
  search_cmd->add_option("--k-verify", k_verify, "Re-count every family up to size Kp+r")->check(CLI::Range(0, 64));
  search_cmd->add_flag("--summary", summary, "Only the remainder-set sizes");
  add_output_options(search_cmd, format, out_path);

  // census
  auto* census_cmd = app.add_subcommand("census", "Exhaustive counts of ones over all binary triangles");
  std::string census_kind = "both";
  std::optional<std::size_t> census_n_max;
  census_cmd->add_option("--kind", census_kind, "steinhaus, pascal or both")
      ->check(CLI::IsMember({"steinhaus", "pascal", "both"}));
  census_cmd->add_option("--n-max", census_n_max, "Sizes 1..N (default 14 for Steinhaus, 9 for Pascal)")
      ->check(CLI::Range(1, 64));
  add_output_options(census_cmd, format, out_path);

  // modm
  auto* modm_cmd = app.add_subcommand("modm", "Balance scans modulo an odd number");
  int modm_m = 3;
  int difference = 1;
  int start = 0;
  std::optional<std::size_t> modm_n_max;
  bool interlaced = false;
  std::string modm_kind = "steinhaus";
  modm_cmd->add_option("--modulus", modm_m, "Odd modulus m >= 3");
  modm_cmd->add_option("--difference", difference, "Common difference of the progression");
  modm_cmd->add_option("--start", start, "First term of the progression");
  modm_cmd->add_option("--n-max", modm_n_max, "Sizes 1..N (default three periods)")
      ->check(CLI::Range(std::size_t{1}, kMaxScanSize));
  modm_cmd->add_flag("--interlaced", interlaced, "Scan the interlaced sequence instead");
  modm_cmd->add_option("--kind", modm_kind, "Triangle kind for the interlaced scan")
      ->check(CLI::IsMember({"steinhaus", "pascal"}));
  add_output_options(modm_cmd, format, out_path);

  // render
  auto* render_cmd = app.add_subcommand("render", "Draw an orbit or a triangle family as PBM/PPM");
  std::string render_seed;
  int render_m = 2;
  std::string rows_text, cols_text;
  std::vector<std::string> overlay_texts;
  std::size_t cell_size = 1;
  std::size_t max_pixels = RenderSpec{}.max_pixels;
  std::string family_kind;
  std::int64_t i0 = 0, j0 = 0;
  std::size_t remainder = 0;
  std::size_t family_k = 1;
  render_cmd->add_option("--seed-tuple", render_seed, "Generating tuple")->required();
  render_cmd->add_option("--modulus", render_m, "Modulus of the entries")->check(CLI::Range(2, 256));
  render_cmd->add_option("--rows", rows_text, "Orbit rows BEGIN:END (default one period)");
  render_cmd->add_option("--cols", cols_text, "Orbit columns BEGIN:END (default one period)");
  render_cmd->add_option("--overlay", overlay_texts, "Outline KIND,I0,J0,N; repeatable");
  render_cmd->add_option("--cell-size", cell_size, "Pixels per cell")->check(CLI::Range(1, 256));
  render_cmd->add_option("--max-pixels", max_pixels, "Refuse images larger than this");
  auto* family_opt = render_cmd->add_option("--family", family_kind, "Draw the family of this kind instead")
                         ->check(CLI::IsMember({"steinhaus", "pascal"}));
  render_cmd->add_option("--i0", i0, "Principal vertex row")->needs(family_opt);
  render_cmd->add_option("--j0", j0, "Principal vertex column")->needs(family_opt);
  render_cmd->add_option("--remainder", remainder, "Family remainder r")->needs(family_opt);
  render_cmd->add_option("--k", family_k, "Draw the triangle of size Kp+r")->needs(family_opt)->check(CLI::Range(0, 64));
  render_cmd->add_option("--out", out_path, "Write to this file instead of standard output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("steinhaus");
  for (const auto& a : args) argv.push_back(a.c_str());

  std::string result;
  bool validation_failed = false;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const report::Format fmt = report::parse_format(format);

    if (*triangle_cmd) {
      if (seed_text.empty() && left_text.empty()) {
        throw CLI::RequiredError("--seed-tuple or --left/--right");
      }
      const Triangle t = seed_text.empty()
                             ? build_pascal(ResidueTuple::parse(left_text, modulus), ResidueTuple::parse(right_text, modulus))
                             : build_steinhaus(ResidueTuple::parse(seed_text, modulus));
      result = report::triangle(t, fmt);
    } else if (*kernel_cmd) {
      std::vector<report::KernelRow> rows;
      const std::size_t first = *kernel_p ? p : 1;
      const std::size_t last = *kernel_p ? p : p_max;
      for (std::size_t q = first; q <= last; ++q) rows.push_back({q, kernel_dimension(q)});
      result = report::kernel_table(rows, fmt);
    } else if (*classes_cmd) {
      if (*classes_p) {
        result = report::class_listing(p, partition_classes(p), true, fmt);
      } else {
        std::vector<report::ClassCountRow> rows;
        for (std::size_t q = 1; q <= p_max; ++q) rows.push_back({q, kernel_dimension(q), partition_classes(q).size(), {}});
        result = report::class_counts(rows, fmt);
      }
    } else if (*balanced_cmd) {
      if (*balanced_p) {
        result = report::class_listing(p, balanced_period_classes(p), false, fmt);
      } else {
        std::vector<report::ClassCountRow> rows;
        for (std::size_t q = 4; q <= p_max; q += 4) {
          rows.push_back({q, kernel_dimension(q), partition_classes(q).size(), balanced_period_classes(q).size()});
        }
        result = report::class_counts(rows, fmt);
      }
    } else if (*search_cmd) {
      const SearchReport search = full_search(search_p, jobs);
      for (const auto& c : search.classes) {
        if (!c.duality_consistent) {
          err << "error: class " << c.cls.representative.to_string() << " violates duality\n";
          validation_failed = true;
        }
        if (k_verify == 0) continue;
        for (const RemainderSet* set : {&c.steinhaus, &c.pascal}) {
          for (const auto& w : set->witnesses) {
            if (!oracle_verify_family(w, k_verify)) {
              err << "error: " << to_string(w.kind) << " family (" << w.i0 << ", " << w.j0 << ", " << w.remainder
                  << ") of " << c.cls.representative.to_string() << " fails direct verification\n";
              validation_failed = true;
            }
          }
        }
      }
      result = summary ? report::search_summary(search, fmt) : report::search_witnesses(search, fmt);
    } else if (*census_cmd) {
      std::vector<report::CensusRow> rows;
      for (const Orientation kind : {Orientation::Steinhaus, Orientation::Pascal}) {
        if (census_kind != "both" && census_kind != to_string(kind)) continue;
        const std::size_t last = census_n_max.value_or(kind == Orientation::Steinhaus ? 14 : 9);
        for (std::size_t n = 1; n <= last; ++n) rows.push_back({average_census(n, kind), extremal_ones_scan(n, kind)});
      }
      result = report::census(rows, fmt);
    } else if (*modm_cmd) {
      if (interlaced) {
        const Orientation kind = kKinds.at(modm_kind);
        const auto checks = interlaced_scan(modm_m, modm_n_max.value_or(9 * static_cast<std::size_t>(modm_m)), kind);
        for (const auto& c : checks) {
          if (c.claimed && !c.balanced()) {
            err << "error: no balanced triangle of size " << c.n << "\n";
            validation_failed = true;
          }
        }
        result = report::interlaced(modm_m, kind, checks, fmt);
      } else {
        const ApFamilySpec spec = ApFamilySpec::make(modm_m, difference, start);
        const auto rows = ap_balanced_scan(spec, modm_n_max.value_or(3 * spec.period));
        for (const auto& row : rows) {
          if (row.claimed && !row.balanced) {
            err << "error: size " << row.n << " is not balanced\n";
            validation_failed = true;
          }
        }
        result = report::ap_scan(spec, rows, fmt);
      }
    } else if (*render_cmd) {
      const ResidueTuple x = ResidueTuple::parse(render_seed, render_m);
      RenderSpec spec;
      spec.cell_size = cell_size;
      spec.max_pixels = max_pixels;
      if (!family_kind.empty()) {
        const Orientation kind = kKinds.at(family_kind);
        const auto cert = check_family(kind, build_period_grid(x), i0, j0, remainder);
        if (!cert) {
          throw Error(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " family (" + std::to_string(i0) +
                                                      ", " + std::to_string(j0) + ", " + std::to_string(remainder) +
                                                      ") is not balanced");
        }
        result = render_family(*cert, family_k, spec);
      } else {
        if (!rows_text.empty() || !cols_text.empty()) {
          const auto period = static_cast<std::int64_t>(x.size());
          const auto r = rows_text.empty() ? std::pair<std::int64_t, std::int64_t>{0, period}
                                           : parse_range(rows_text, "--rows");
          const auto c = cols_text.empty() ? std::pair<std::int64_t, std::int64_t>{0, period}
                                           : parse_range(cols_text, "--cols");
          spec.window = Window{r.first, r.second, c.first, c.second};
        }
        for (const auto& text : overlay_texts) spec.overlays.push_back(parse_overlay(text));
        result = render_orbit(x, spec);
      }
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << result;
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 1;
    }
  }
  return validation_failed ? 1 : 0;
}

}  // namespace steinhaus::cli
