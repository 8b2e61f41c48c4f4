#ifndef SQC_CONFIG_HPP
#define SQC_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sqc::config {

// Line-oriented "key = value" configuration with [section] prefixes:
//
//   # comment
//   [loop]
//   ramsey_t = 1.0          -> key "loop.ramsey_t"
//   trials   = 200
//
// Values keep their literal text; typed getters parse on access. Later
// assignments to the same key win.
class Config {
 public:
  static Config parse_file(const std::string& path);
  // lenient mode skips lines without '=' instead of rejecting them; used for
  // re-parsing output-file headers.
  static Config parse_text(const std::string& text, bool lenient = false);
  // Reads the leading '#' comment block of an output file and re-parses the
  // recorded key = value pairs.
  static Config parse_output_header(const std::string& path);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // whitespace- or comma-separated list
  std::vector<double> get_double_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace sqc::config

#endif
