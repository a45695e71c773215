#include "input.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cccmap/errors.hpp"

namespace cccmap::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "tsv") return Format::Tsv;
  if (name == "plain") return Format::Plain;
  throw InvalidInput("unknown input format '" + name + "'");
}

bool ColumnRef::is_index() const {
  if (spec.empty()) return false;
  for (char c : spec) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& line, Format format) {
  std::vector<std::string> out;
  if (format == Format::Plain) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
  }
  const char sep = format == Format::Csv ? ',' : '\t';
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

std::optional<double> parse_number(const std::string& field) {
  if (field.empty()) return std::nullopt;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (*first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

Table Table::parse(std::istream& in, const InputSpec& spec) {
  Table t;
  std::string line;
  std::size_t lineno = 0;
  bool need_header = spec.header;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto fields = split(line, spec.format);
    if (need_header) {
      t.header_ = std::move(fields);
      need_header = false;
      continue;
    }
    t.cells_.push_back(std::move(fields));
    t.line_numbers_.push_back(lineno);
  }
  if (t.cells_.empty()) throw InvalidInput("input has no data rows");
  return t;
}

Table Table::load(const InputSpec& spec, std::istream& stdin_stream) {
  if (spec.path == "-") return parse(stdin_stream, spec);
  std::ifstream f(spec.path);
  if (!f) throw InvalidInput("cannot open input file '" + spec.path + "'");
  return parse(f, spec);
}

std::size_t Table::resolve(const ColumnRef& ref) const {
  if (ref.is_index()) return static_cast<std::size_t>(std::stoul(ref.spec));
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == ref.spec) return i;
  }
  if (header_.empty()) {
    throw InvalidInput("column '" + ref.spec + "' selected by name but the input has no header (use --header)");
  }
  throw InvalidInput("no column named '" + ref.spec + "'");
}

std::vector<double> Table::column(const ColumnRef& ref) const {
  const std::size_t idx = resolve(ref);
  std::vector<double> out;
  out.reserve(cells_.size());
  for (std::size_t r = 0; r < cells_.size(); ++r) {
    const std::string where = "line " + std::to_string(line_numbers_[r]);
    if (idx >= cells_[r].size()) {
      throw InvalidInput(where + ": missing column " + ref.spec);
    }
    const auto v = parse_number(cells_[r][idx]);
    if (!v) throw InvalidInput(where + ": cannot parse '" + cells_[r][idx] + "' as a number");
    if (!std::isfinite(*v)) throw InvalidInput(where + ": non-finite value '" + cells_[r][idx] + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace cccmap::cli
