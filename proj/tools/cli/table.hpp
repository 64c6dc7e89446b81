#pragma once

// CSV cells with RFC 4180 quoting and 17-significant-digit floats.

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperrec::cli {

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string csv_quote(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string q = "\"";
  for (char ch : cell) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

class CsvRow {
 public:
  CsvRow& add(std::string_view s) {
    cells_.push_back(csv_quote(s));
    return *this;
  }
  CsvRow& add(const char* s) { return add(std::string_view(s)); }
  CsvRow& add(const std::string& s) { return add(std::string_view(s)); }
  CsvRow& add(double x) { return add(format_double(x)); }
  CsvRow& add(bool v) { return add(v ? "true" : "false"); }
  template <class I>
    requires std::is_integral_v<I>
  CsvRow& add(I v) {
    return add(std::to_string(v));
  }
  CsvRow& add(const std::optional<double>& x) { return x ? add(*x) : add(""); }

  void write(std::ostream& os) const {
    for (std::size_t k = 0; k < cells_.size(); ++k) os << (k ? "," : "") << cells_[k];
    os << "\r\n";
  }

 private:
  std::vector<std::string> cells_;
};

inline void write_header(std::ostream& os, const std::vector<std::string>& cols) {
  CsvRow row;
  for (const auto& c : cols) row.add(c);
  row.write(os);
}

}  // namespace hyperrec::cli
