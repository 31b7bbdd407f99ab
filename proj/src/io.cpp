#include "ccmsp/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccmsp {

std::string format_real(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

// Shortest decimal form that parses back to the same double.
std::string format_real_exact(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_real(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty() || errno == ERANGE)
    throw std::invalid_argument("bad real value: '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty() || errno == ERANGE)
    throw std::invalid_argument("bad integer value: '" + s + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty() || s[0] == '-' || errno == ERANGE)
    throw std::invalid_argument("bad unsigned value: '" + s + "'");
  return v;
}

bool KvDoc::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::vector<std::string>& KvDoc::values(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw std::invalid_argument("missing key: " + key);
}

const std::string& KvDoc::single(const std::string& key) const {
  const auto& v = values(key);
  if (v.size() != 1)
    throw std::invalid_argument("key " + key + " expects exactly one value");
  return v[0];
}

KvDoc parse_kv(const std::string& text) {
  KvDoc doc;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> vals;
    std::string tok;
    while (ls >> tok) vals.push_back(tok);
    for (const auto& [k, v] : doc.entries)
      if (k == key) throw std::invalid_argument("duplicate key: " + key);
    doc.entries.emplace_back(std::move(key), std::move(vals));
  }
  return doc;
}

std::string instance_to_text(const Instance& inst) {
  std::ostringstream out;
  out << "variant " << to_string(inst.variant) << "\n";
  out << "k " << inst.groups() << "\n";
  out << "sizes";
  for (std::int64_t m : inst.sizes) out << ' ' << m;
  out << "\n";
  out << "a " << format_real_exact(inst.expected_time) << "\n";
  out << "d " << format_real_exact(inst.job_variance) << "\n";
  out << "c";
  for (double c : inst.covariance) out << ' ' << format_real_exact(c);
  out << "\n";
  out << "gamma " << format_real_exact(inst.gamma) << "\n";
  return out.str();
}

Instance instance_from_text(const std::string& text) {
  KvDoc doc = parse_kv(text);
  Variant v = variant_from_string(doc.single("variant"));
  std::int64_t k = parse_int(doc.single("k"));
  const auto& size_tokens = doc.values("sizes");
  if (static_cast<std::int64_t>(size_tokens.size()) != k)
    throw std::invalid_argument("size list does not match group count");
  std::vector<std::int64_t> sizes;
  sizes.reserve(size_tokens.size());
  for (const auto& s : size_tokens) sizes.push_back(parse_int(s));
  double a = parse_real(doc.single("a"));
  double d = parse_real(doc.single("d"));
  const auto& cov_tokens = doc.values("c");
  std::vector<double> cov;
  if (cov_tokens.size() == 1) {
    cov.assign(sizes.size(), parse_real(cov_tokens[0]));
  } else if (static_cast<std::int64_t>(cov_tokens.size()) == k) {
    for (const auto& s : cov_tokens) cov.push_back(parse_real(s));
  } else {
    throw std::invalid_argument("covariance list must have one entry or one per group");
  }
  double gamma = parse_real(doc.single("gamma"));
  return Instance::make(v, std::move(sizes), a, d, std::move(cov), gamma);
}

Instance load_instance(const std::string& path) { return instance_from_text(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  write_file(path, instance_to_text(inst));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace ccmsp
