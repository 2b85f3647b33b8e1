#include "squeeze/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "squeeze/bernoulli.hpp"
#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

unsigned read_cap(const char* name, unsigned fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string_view text(raw);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw ParseError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.depth_cap = read_cap("SQUEEZE_DEPTH_CAP", limits.depth_cap);
  limits.bisect_cap = read_cap("SQUEEZE_BISECT_CAP", limits.bisect_cap);
  return limits;
}

unsigned Limits::bernoulli_cap() const { return std::max(kDefaultBernoulliCap, depth_cap); }

}  // namespace squeeze
