#include "steinhaus/report.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>

#include "steinhaus/error.hpp"
#include "steinhaus/orbit.hpp"

namespace steinhaus::report {
namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& table) {
  std::string out = csv_row(table.header);
  for (const auto& row : table.rows) out += csv_row(row);
  return out;
}

std::string render_text(const Table& table) {
  std::vector<std::size_t> widths(table.header.size());
  for (std::size_t c = 0; c < widths.size(); ++c) widths[c] = table.header[c].size();
  for (const auto& row : table.rows)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0) out += "  ";
      out += cells[c];
      if (c + 1 != cells.size()) out.append(widths[c] - cells[c].size(), ' ');
    }
    return out + "\n";
  };
  std::string out = line(table.header);
  for (const auto& row : table.rows) out += line(row);
  return out;
}

std::string render(const Table& table, const Json& json, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(table);
    case Format::Json: return json.dump(2) + "\n";
    case Format::Text: return render_text(table);
  }
  return {};
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string decimal(double v) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string counts_text(const MultiplicityTable& table) {
  std::string out;
  for (std::size_t x = 0; x < table.counts.size(); ++x) {
    if (x != 0) out += '/';
    out += std::to_string(table.counts[x]);
  }
  return out;
}

std::string row_string(const std::vector<Residue>& row, int m) { return ResidueTuple(row, m).to_string(); }

Json witness_json(const FamilyCertificate& w, const PeriodGrid& grid) {
  Json j;
  j["remainder"] = w.remainder;
  j["i0"] = w.i0;
  j["j0"] = w.j0;
  if (w.kind == Orientation::Steinhaus) {
    j["generator"] = generator_tuple(grid, w.i0, w.j0).to_string();
  } else {
    const auto [left, right] = pascal_generator_tuples(grid, w.i0, w.j0);
    j["left"] = left.to_string();
    j["right"] = right.to_string();
  }
  j["blocks"] = {{"base", w.base_block.counts}, {"strip", w.strip_block.counts}, {"period", w.period_block.counts}};
  return j;
}

Json remainder_json(const RemainderSet& set, const PeriodGrid& grid) {
  Json j;
  j["remainders"] = set.remainders();
  Json witnesses = Json::array();
  for (const auto& w : set.witnesses) witnesses.push_back(witness_json(w, grid));
  j["witnesses"] = std::move(witnesses);
  return j;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k != 0) out += ',';
    out += csv_field(fields[k]);
  }
  return out + "\n";
}

std::string triangle(const Triangle& t, Format format) {
  const MultiplicityTable counts = multiplicity(t);
  const Balance b = balance(t);
  Json j;
  j["orientation"] = to_string(t.orientation());
  j["modulus"] = t.modulus();
  j["size"] = t.size();
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row_string(row, t.modulus()));
  j["rows"] = std::move(rows);
  j["counts"] = counts.counts;
  j["spread"] = b.spread;
  j["balanced"] = b.balanced;

  if (format == Format::Json) return j.dump(2) + "\n";
  if (format == Format::Csv) {
    Table table{{"row", "cells"}, {}};
    for (std::size_t r = 0; r < t.size(); ++r) table.rows.push_back({str(r), row_string(t.rows()[r], t.modulus())});
    return render_csv(table);
  }
  std::string out;
  const bool steinhaus = t.orientation() == Orientation::Steinhaus;
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::size_t indent = steinhaus ? r : t.size() - 1 - r;
    out.append(indent, ' ');
    const auto& row = t.rows()[r];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  out += std::string(to_string(t.orientation())) + " triangle of size " + str(t.size()) + " mod " +
         std::to_string(t.modulus()) + "\n";
  out += "counts: " + counts_text(counts) + "\n";
  out += std::string(b.balanced ? "balanced" : "not balanced") + " (spread " + str(b.spread) + ")\n";
  return out;
}

std::string kernel_table(const std::vector<KernelRow>& rows, Format format) {
  Table table{{"p", "kernel_dimension"}, {}};
  Json j = Json::array();
  for (const auto& row : rows) {
    table.rows.push_back({str(row.p), str(row.dimension)});
    j.push_back({{"p", row.p}, {"kernel_dimension", row.dimension}});
  }
  return render(table, j, format);
}

std::string class_counts(const std::vector<ClassCountRow>& rows, Format format) {
  const bool balanced = !rows.empty() && rows.front().balanced_classes.has_value();
  Table table{{"p", "periodic_tuples", "classes"}, {}};
  if (balanced) table.header.push_back("balanced_classes");
  Json j = Json::array();
  for (const auto& row : rows) {
    const std::size_t tuples = std::size_t{1} << row.kernel_dimension;
    std::vector<std::string> cells = {str(row.p), str(tuples), str(row.classes)};
    Json item = {{"p", row.p}, {"periodic_tuples", tuples}, {"classes", row.classes}};
    if (balanced) {
      cells.push_back(str(row.balanced_classes.value_or(0)));
      item["balanced_classes"] = row.balanced_classes.value_or(0);
    }
    table.rows.push_back(std::move(cells));
    j.push_back(std::move(item));
  }
  return render(table, j, format);
}

std::string class_listing(std::size_t p, const std::vector<OrbitClass>& classes, bool with_sizes, Format format) {
  Table table{{"p", "index", "representative"}, {}};
  if (with_sizes) table.header.push_back("orbit_size");
  Json j = Json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const OrbitClass& c = classes[k];
    std::vector<std::string> cells = {str(p), str(k + 1), c.representative.to_string()};
    Json item = {{"p", p}, {"index", k + 1}, {"representative", c.representative.to_string()}};
    if (with_sizes) {
      cells.push_back(str(c.size));
      item["orbit_size"] = c.size;
    }
    table.rows.push_back(std::move(cells));
    j.push_back(std::move(item));
  }
  return render(table, j, format);
}

std::string search_witnesses(const SearchReport& search, Format format) {
  Table table{{"p", "class", "kind", "remainder", "i0", "j0", "generator"}, {}};
  Json j;
  j["p"] = search.p;
  Json sizes = Json::array();
  for (const auto& c : search.classes) sizes.push_back(c.steinhaus.size());
  j["remainder_set_sizes"] = std::move(sizes);
  Json full = Json::array();
  for (const auto& rep : search.full_classes()) full.push_back(rep.to_string());
  j["full_classes"] = std::move(full);
  Json classes = Json::array();
  for (std::size_t k = 0; k < search.classes.size(); ++k) {
    const ClassSearchResult& c = search.classes[k];
    const PeriodGrid grid = build_period_grid(c.cls.representative);
    const std::string rep = c.cls.representative.to_string();
    for (const auto& w : c.steinhaus.witnesses) {
      table.rows.push_back({str(search.p), rep, "steinhaus", str(w.remainder), str(w.i0), str(w.j0),
                            generator_tuple(grid, w.i0, w.j0).to_string()});
    }
    for (const auto& w : c.pascal.witnesses) {
      const auto [left, right] = pascal_generator_tuples(grid, w.i0, w.j0);
      table.rows.push_back({str(search.p), rep, "pascal", str(w.remainder), str(w.i0), str(w.j0),
                            left.to_string() + "/" + right.to_string()});
    }
    Json item;
    item["index"] = k + 1;
    item["representative"] = rep;
    item["orbit_size"] = c.cls.size;
    item["duality_consistent"] = c.duality_consistent;
    item["steinhaus"] = remainder_json(c.steinhaus, grid);
    item["pascal"] = remainder_json(c.pascal, grid);
    classes.push_back(std::move(item));
  }
  j["classes"] = std::move(classes);
  return render(table, j, format);
}

std::string search_summary(const SearchReport& search, Format format) {
  Table table{{"index", "representative", "steinhaus_remainders", "pascal_remainders"}, {}};
  Json j;
  j["p"] = search.p;
  Json classes = Json::array();
  for (std::size_t k = 0; k < search.classes.size(); ++k) {
    const ClassSearchResult& c = search.classes[k];
    const std::string rep = c.cls.representative.to_string();
    table.rows.push_back({str(k + 1), rep, str(c.steinhaus.size()), str(c.pascal.size())});
    classes.push_back({{"index", k + 1},
                       {"representative", rep},
                       {"steinhaus_remainders", c.steinhaus.size()},
                       {"pascal_remainders", c.pascal.size()},
                       {"duality_consistent", c.duality_consistent}});
  }
  j["classes"] = std::move(classes);
  return render(table, j, format);
}

std::string census(const std::vector<CensusRow>& rows, Format format) {
  Table table{{"kind", "n", "triangles", "total_ones", "average", "half_triangular", "max_ones", "formula"}, {}};
  Json j = Json::array();
  for (const auto& row : rows) {
    const CensusResult& a = row.average;
    std::vector<std::string> cells = {to_string(a.kind), str(a.n), std::to_string(a.triangles),
                                      std::to_string(a.total_ones), decimal(a.average()),
                                      yes_no(a.average_is_half_triangular())};
    Json item = {{"kind", to_string(a.kind)},
                 {"n", a.n},
                 {"triangles", a.triangles},
                 {"total_ones", a.total_ones},
                 {"average", a.average()},
                 {"half_triangular", a.average_is_half_triangular()}};
    if (row.extremal) {
      cells.push_back(std::to_string(row.extremal->max_ones));
      cells.push_back(std::to_string(row.extremal->formula));
      item["max_ones"] = row.extremal->max_ones;
      item["formula"] = row.extremal->formula;
      item["witness"] = row.extremal->kind == Orientation::Steinhaus
                            ? steinhaus_seed(row.extremal->witness).to_string()
                            : pascal_left_side(row.extremal->witness).to_string() + "/" +
                                  pascal_right_side(row.extremal->witness).to_string();
    } else {
      cells.insert(cells.end(), {"", ""});
    }
    table.rows.push_back(std::move(cells));
    j.push_back(std::move(item));
  }
  return render(table, j, format);
}

std::string ap_scan(const ApFamilySpec& spec, const std::vector<ScanRow>& rows, Format format) {
  Table table{{"m", "d", "n", "balanced", "spread", "claimed"}, {}};
  Json j;
  j["m"] = spec.m;
  j["d"] = spec.common_difference;
  j["start"] = spec.start;
  j["order_factor"] = spec.order_factor;
  j["period"] = spec.period;
  Json items = Json::array();
  for (const auto& row : rows) {
    table.rows.push_back({std::to_string(spec.m), std::to_string(spec.common_difference), str(row.n),
                          yes_no(row.balanced), str(row.spread), yes_no(row.claimed)});
    items.push_back({{"n", row.n}, {"balanced", row.balanced}, {"spread", row.spread}, {"claimed", row.claimed}});
  }
  j["rows"] = std::move(items);
  return render(table, j, format);
}

std::string interlaced(int m, Orientation kind, const std::vector<InterlacedCheck>& checks, Format format) {
  Table table{{"m", "d", "n", "balanced", "spread", "claimed", "i0", "j0"}, {}};
  Json j;
  j["m"] = m;
  j["kind"] = to_string(kind);
  Json items = Json::array();
  for (const auto& c : checks) {
    const std::string i0 = c.witness ? str(c.witness->first) : "";
    const std::string j0 = c.witness ? str(c.witness->second) : "";
    table.rows.push_back({std::to_string(m), "interlaced", str(c.n), yes_no(c.balanced()), str(c.best_spread),
                          yes_no(c.claimed), i0, j0});
    Json item = {{"n", c.n},
                 {"balanced", c.balanced()},
                 {"spread", c.best_spread},
                 {"claimed", c.claimed},
                 {"balanced_at_origin", c.at_origin.balanced},
                 {"origin_spread", c.at_origin.spread}};
    item["witness"] = c.witness ? Json{{"i0", c.witness->first}, {"j0", c.witness->second}} : Json(nullptr);
    items.push_back(std::move(item));
  }
  j["rows"] = std::move(items);
  return render(table, j, format);
}

}  // namespace steinhaus::report
