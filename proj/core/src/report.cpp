#include "eqos/report.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqos {

void Report::data(const std::string& key, const std::string& value) {
  data_.emplace_back(key, value);
}

void Report::check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, pass, detail});
}

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::string Report::body() const {
  std::ostringstream os;
  os << "== eqos report ==\n";
  os << "command: " << command_ << '\n';
  for (const std::string& l : lines_) os << l << '\n';
  if (!data_.empty()) {
    os << "[data]\n";
    auto sorted = data_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, v] : sorted) os << k << " = " << v << '\n';
    os << "[/data]\n";
  }
  for (const Check& c : checks_) {
    os << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  os << "== end ==\n";
  return os.str();
}

std::string Report::full_text() const {
  std::string out = body();
  if (timing_ms_ >= 0) out += "time_ms: " + std::to_string(timing_ms_) + "\n";
  return out;
}

std::string fnv1a_digest(const std::string& content) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << h;
  return os.str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for digest: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return fnv1a_digest(os.str());
}

std::string format_vector(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace eqos
