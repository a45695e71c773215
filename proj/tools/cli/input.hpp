#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace cccmap::cli {

enum class Format { Csv, Tsv, Plain };

Format parse_format(const std::string& name);

/// A column selected either by header name or by 0-based index.
struct ColumnRef {
  std::string spec;  // as given on the command line

  bool is_index() const;
};

struct InputSpec {
  std::string path = "-";  // "-" reads standard input
  Format format = Format::Csv;
  bool header = false;
};

/// Parsed numeric table; rows are data lines, blank lines and lines starting
/// with '#' are skipped.
class Table {
 public:
  static Table parse(std::istream& in, const InputSpec& spec);
  static Table load(const InputSpec& spec, std::istream& stdin_stream);

  /// Values of one column. Throws InputError naming the offending line for
  /// unparsable or non-finite entries.
  std::vector<double> column(const ColumnRef& ref) const;
  std::size_t rows() const noexcept { return cells_.size(); }

 private:
  std::size_t resolve(const ColumnRef& ref) const;

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::size_t> line_numbers_;
};

/// Strict locale-independent decimal parse of an entire field.
std::optional<double> parse_number(const std::string& field);

}  // namespace cccmap::cli
