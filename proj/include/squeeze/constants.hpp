#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squeeze/certifier.hpp"

namespace squeeze {

/// e^{-theta* x^2} < h(x) < e^{-c1 x^2} on (0, certified_interval_end),
/// h = cos (LogCos) or x / tan x (LogTanRatio), theta* = best_constant.hi().
struct SqueezeResult {
  FamilyTag family = FamilyTag::LogCos;
  Rational x0;
  Enclosure best_constant;
  Rational upper_constant;         // c1
  Certificate lower_cert;          // UniqueZero at theta*
  Certificate upper_cert;          // Positivity at c1
  Rational certified_interval_end; // lower_cert.zero_bracket->lo() >= x0

  Rational certified_constant() const { return best_constant.hi(); }
};

/// Location t0 of the minimum of F_theta on (0, x0) and delta = -F_theta(t0),
/// the largest gap between log h(x) and -theta x^2 there.
struct ErrorReport {
  FamilyTag family = FamilyTag::LogCos;
  Rational x0;
  Rational theta;
  Enclosure t0;
  Enclosure delta;
};

struct ScanRow {
  Rational x0;
  std::optional<Enclosure> best_constant;
  std::optional<Enclosure> t0;
  std::optional<Enclosure> delta;
  std::optional<std::string> error;
};

/// Enclosure of -log h(x0) / x0^2, the smallest theta for which the lower
/// bound holds on (0, x0). Lower endpoint strictly above c1.
Enclosure best_constant(const Family& family, const Rational& x0, const Rational& target_width,
                        const Limits& limits = {});

/// Certifies both sides of the squeeze on (0, x0). Throws
/// CertificationError when the zero bracket cannot be pushed to >= x0.
SqueezeResult certify_squeeze(const Family& family, const Rational& x0, const Rational& width,
                              const Limits& limits = {});

inline const Rational kDefaultThetaWidth{1, 10'000'000'000};

ErrorReport max_error(const Family& family, const Rational& x0, const Rational& tol,
                      const Limits& limits = {},
                      const Rational& theta_width = kDefaultThetaWidth);

/// Rows at x0 = from + i (to - from) / steps, i = 0..steps. A failing row
/// records its error; the rest of the grid still runs.
std::vector<ScanRow> scan(const Family& family, const Rational& from, const Rational& to,
                          unsigned steps, const Rational& width, const Rational& tol,
                          const Limits& limits = {});

}  // namespace squeeze
