#include "sqc/csvio.hpp"

#include <cstdio>
#include <stdexcept>

namespace sqc::csvio {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& title,
                     const std::map<std::string, std::string>& resolved_config)
    : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open output file '" + path + "'");
  out_ << "# " << title << "\n";
  for (const auto& [k, v] : resolved_config) out_ << "# " << k << " = " << v << "\n";
}

void CsvWriter::columns(const std::vector<std::string>& names) {
  out_ << "# columns: ";
  for (std::size_t i = 0; i < names.size(); ++i)
    out_ << (i ? "," : "") << names[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    out_ << (i ? "," : "") << fmt17(values[i]);
  out_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

}  // namespace sqc::csvio
