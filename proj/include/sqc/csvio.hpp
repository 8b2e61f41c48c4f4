#ifndef SQC_CSVIO_HPP
#define SQC_CSVIO_HPP

#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace sqc::csvio {

// Full-precision decimal (17 significant digits, round-trips a double).
std::string fmt17(double x);

// CSV writer with a '#'-prefixed header block recording the resolved
// configuration, then a column line and plain comma-separated rows.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& title,
            const std::map<std::string, std::string>& resolved_config);

  void columns(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
};

}  // namespace sqc::csvio

#endif
