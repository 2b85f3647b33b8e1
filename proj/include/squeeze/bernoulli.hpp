#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "squeeze/rational.hpp"

namespace squeeze {

enum class FamilyTag { LogCos, LogTanRatio };

/// One of the two even log-series:
///   LogCos:      -log cos x      = sum_k c_k x^{2k}, c_1 = 1/2
///   LogTanRatio: -log(x / tan x) = sum_k d_k x^{2k}, d_1 = 1/3
/// Both have strictly positive coefficients on (0, pi/2).
struct Family {
  FamilyTag tag;
  Rational c1;
  std::string name;         // CLI token: "logcos" / "logtan"
  std::string description;

  friend bool operator==(const Family& a, const Family& b) { return a.tag == b.tag; }
};

const Family& log_cos_family();
const Family& log_tan_ratio_family();
const Family& family(FamilyTag tag);

/// Accepts "logcos" or "logtan"; throws ParseError otherwise.
const Family& family_from_name(std::string_view name);

inline constexpr unsigned kDefaultBernoulliCap = 256;

/// Raw Bernoulli number B_n from sum_{j<=n} C(n+1, j) B_j = 0, B_0 = 1
/// (so B_1 = -1/2). Requires n <= 2 * cap.
Rational bernoulli_raw(unsigned n, unsigned cap = kDefaultBernoulliCap);

/// |B_{2k}| for 1 <= k <= cap; ResourceError past the cap.
Rational bernoulli_abs_2k(unsigned k, unsigned cap = kDefaultBernoulliCap);

/// k-th series coefficient of the family (k >= 1).
Rational coeff(const Family& family, unsigned k, unsigned cap = kDefaultBernoulliCap);

/// [coeff(family, 1), ..., coeff(family, n)].
std::vector<Rational> coeff_prefix(const Family& family, unsigned n,
                                   unsigned cap = kDefaultBernoulliCap);

}  // namespace squeeze
