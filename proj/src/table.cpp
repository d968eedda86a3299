#include "crucialis/table.hpp"

#include <charconv>

#include "crucialis/bounds.hpp"
#include "crucialis/constructions.hpp"
#include "crucialis/errors.hpp"
#include "crucialis/word.hpp"

namespace crucialis {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string markdown_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void emit_row(std::string& out, const std::vector<std::string>& row, TableFormat format) {
  switch (format) {
    case TableFormat::Text:
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += '\t';
        out += row[i];
      }
      break;
    case TableFormat::Csv:
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(row[i]);
      }
      break;
    case TableFormat::Markdown:
      out += '|';
      for (const auto& cell : row) out += ' ' + markdown_field(cell) + " |";
      break;
  }
  out += '\n';
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw ArgumentError("bad range '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

TableFormat table_format_from_name(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "markdown") return TableFormat::Markdown;
  throw ArgumentError("unknown table output '" + std::string(name) + "'");
}

std::string render_table(const Table& t, TableFormat format) {
  std::string out;
  if (format == TableFormat::Text) {
    for (const auto& c : t.comments) out += "# " + c + "\n";
  }
  emit_row(out, t.header, format);
  if (format == TableFormat::Markdown) {
    out += '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
    out += '\n';
  }
  for (const auto& row : t.rows) emit_row(out, row, format);
  return out;
}

IntRange parse_range(std::string_view text) {
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(text.substr(0, dots), text);
    r.hi = parse_int(text.substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw ArgumentError("empty range '" + std::string(text) + "'");
  return r;
}

Table bounds_table(IntRange n, IntRange k) {
  Table t;
  t.comments = {"bounds on the minimal length of a crucial abelian-k-power-free word over n letters",
                "exact_source: stated = published value, derived = confirmed only by exhaustive search"};
  t.header = {"n", "k", "lower", "upper", "exact", "exact_source", "upper_family"};
  for (int ni = n.lo; ni <= n.hi; ++ni) {
    for (int ki = k.lo; ki <= k.hi; ++ki) {
      const Bounds b = bounds(ni, ki);
      std::string source = "-";
      if (b.exact) source = (ki == 2 && ni == 2) ? "derived" : "stated";
      t.rows.push_back({std::to_string(ni), std::to_string(ki), std::to_string(b.lower),
                        std::to_string(b.upper), b.exact ? std::to_string(*b.exact) : "-", source,
                        std::string(family_name(b.upper_family))});
    }
  }
  return t;
}

std::string emit_bounds_table(IntRange n, IntRange k, TableFormat format) {
  return render_table(bounds_table(n, k), format);
}

Table families_table(IntRange n, IntRange k, std::uint64_t max_length) {
  Table t;
  t.comments = {"crucial abelian-power-free constructions",
                "rows longer than " + std::to_string(max_length) + " letters are omitted"};
  t.header = {"family", "n", "k", "format", "word", "length"};
  ConstructionLimits limits;
  limits.max_length = max_length;
  for (Family f : kAllFamilies) {
    for (int ni = n.lo; ni <= n.hi; ++ni) {
      for (int ki = k.lo; ki <= k.hi; ++ki) {
        if (!in_domain(f, ni, ki)) continue;
        const auto len = family_length(f, ni, ki);
        if (len > max_length) continue;
        const Word w = construct(f, ni, ki, limits);
        const auto format = ni <= 9 ? WordFormat::Compact : WordFormat::Spaced;
        t.rows.push_back({std::string(family_name(f)), std::to_string(ni), std::to_string(ki),
                          format == WordFormat::Compact ? "compact" : "spaced",
                          render_word(w, format), std::to_string(len)});
      }
    }
  }
  return t;
}

}  // namespace crucialis
