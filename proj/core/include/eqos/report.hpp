#ifndef EQOS_REPORT_HPP
#define EQOS_REPORT_HPP

#include <string>
#include <vector>

namespace eqos {

/// Deterministic report: free text sections, a key/value data block with
/// stable (sorted) key order, and named PASS/FAIL checks.  Everything
/// except the timing line is byte-reproducible for fixed inputs.
class Report {
 public:
  explicit Report(std::string command_echo) : command_(std::move(command_echo)) {}

  void line(const std::string& text) { lines_.push_back(text); }
  void blank() { lines_.emplace_back(); }
  void data(const std::string& key, const std::string& value);
  void data(const std::string& key, long long value) { data(key, std::to_string(value)); }
  void check(const std::string& name, bool pass, const std::string& detail = "");
  void set_timing_ms(long long ms) { timing_ms_ = ms; }

  bool all_passed() const;
  std::size_t check_count() const { return checks_.size(); }

  /// The deterministic body (everything but the timing line).
  std::string body() const;
  /// Body plus the timing line.
  std::string full_text() const;

 private:
  std::string command_;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> data_;
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks_;
  long long timing_ms_ = -1;
};

/// FNV-1a digest of file or string content, for the input echo.
std::string fnv1a_digest(const std::string& content);
std::string file_digest(const std::string& path);

/// Join a size_t vector as "(a,b,c)".
std::string format_vector(const std::vector<std::size_t>& v);

}  // namespace eqos

#endif
