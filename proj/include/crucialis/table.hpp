#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crucialis {

enum class TableFormat { Text, Csv, Markdown };

TableFormat table_format_from_name(std::string_view name);

struct Table {
  /// Emitted as leading '#' lines in Text output only.
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Text: tab-separated. Csv: comma-separated with RFC 4180 quoting.
/// Markdown: pipe-delimited with a separator row.
std::string render_table(const Table& t, TableFormat format);

/// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "7" or "4..12". Throws ArgumentError if malformed or empty.
IntRange parse_range(std::string_view text);

/// Columns: n, k, lower, upper, exact, exact_source, upper_family.
Table bounds_table(IntRange n, IntRange k);
std::string emit_bounds_table(IntRange n, IntRange k, TableFormat format);

/// Columns: family, n, k, format, word, length. One row per construction in
/// its domain whose length is at most `max_length`; words with n <= 9 are Compact.
Table families_table(IntRange n, IntRange k, std::uint64_t max_length);

}  // namespace crucialis
