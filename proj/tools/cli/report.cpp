#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace cccmap::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string text_number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void json_rec(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(it.key()).dump() << ": ";
        json_rec(out, it.value(), indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      out << "[";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out << ", ";
        first = false;
        json_rec(out, e, indent + 1);
      }
      out << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      // JSON has no literal for non-finite values
      if (std::isfinite(d)) {
        out << format_number(d);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << v.dump();
  }
}

void text_scalar(std::ostream& out, const Json& v) {
  if (v.is_number_float()) {
    out << text_number(v.get<double>());
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

void text_rec(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& e = it.value();
    out << pad << it.key() << ":";
    if (e.is_object()) {
      out << "\n";
      text_rec(out, e, indent + 1);
    } else if (e.is_array()) {
      out << " [";
      bool first = true;
      for (const auto& x : e) {
        if (!first) out << ", ";
        first = false;
        if (x.is_object() || x.is_array()) {
          out << x.dump();
        } else {
          text_scalar(out, x);
        }
      }
      out << "]\n";
    } else {
      out << " ";
      text_scalar(out, e);
      out << "\n";
    }
  }
}

}  // namespace

void write_json(std::ostream& out, const Json& value) {
  json_rec(out, value, 0);
  out << "\n";
}

void write_text(std::ostream& out, const Json& value) { text_rec(out, value, 0); }

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << "\n";
  }
}

}  // namespace cccmap::cli
