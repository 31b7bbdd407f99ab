#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccmsp/model.hpp"

namespace ccmsp {

/// Shortest decimal form with the given number of significant digits.
std::string format_real(double v, int significant_digits = 12);

/// Decimal form that parses back to exactly the same double.
std::string format_real_exact(double v);

double parse_real(const std::string& s);
std::int64_t parse_int(const std::string& s);
std::uint64_t parse_uint(const std::string& s);

// Line-oriented key-value document: one key per line followed by its
// whitespace-separated values. '#' starts a comment, blank lines are skipped.
// Instance files and campaign configuration files share this format.
struct KvDoc {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;

  bool has(const std::string& key) const;
  const std::vector<std::string>& values(const std::string& key) const;
  const std::string& single(const std::string& key) const;
};

KvDoc parse_kv(const std::string& text);

/// Serialize with the fixed field order variant, k, sizes, a, d, c, gamma.
/// Group order follows the instance (sizes nondecreasing). Reals round-trip.
std::string instance_to_text(const Instance& inst);
Instance instance_from_text(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ccmsp
