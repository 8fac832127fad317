#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinhaus/balance_search.hpp"
#include "steinhaus/census.hpp"
#include "steinhaus/modm.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus::report {

enum class Format { Text, Csv, Json };

/// "text", "csv" or "json"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// Quotes a field when it contains a comma, a quote or a line break.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

std::string triangle(const Triangle& t, Format format);

struct KernelRow {
  std::size_t p = 0;
  std::size_t dimension = 0;
};
std::string kernel_table(const std::vector<KernelRow>& rows, Format format);

struct ClassCountRow {
  std::size_t p = 0;
  std::size_t kernel_dimension = 0;
  std::size_t classes = 0;
  std::optional<std::size_t> balanced_classes;
};
std::string class_counts(const std::vector<ClassCountRow>& rows, Format format);

/// One line per class: p, 1-based index, representative and, when
/// requested, the orbit size.
std::string class_listing(std::size_t p, const std::vector<OrbitClass>& classes, bool with_sizes, Format format);

/// Every witness of every class, Steinhaus then Pascal.
std::string search_witnesses(const SearchReport& search, Format format);
/// Remainder-set sizes per class.
std::string search_summary(const SearchReport& search, Format format);

struct CensusRow {
  CensusResult average;
  std::optional<ExtremalResult> extremal;
};
std::string census(const std::vector<CensusRow>& rows, Format format);

std::string ap_scan(const ApFamilySpec& spec, const std::vector<ScanRow>& rows, Format format);
std::string interlaced(int m, Orientation kind, const std::vector<InterlacedCheck>& checks, Format format);

}  // namespace steinhaus::report
