#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squeeze/bernoulli.hpp"
#include "squeeze/enclosure.hpp"
#include "squeeze/limits.hpp"
#include "squeeze/series.hpp"

namespace squeeze {

/// A certified sign of F_theta^{(order)} at a rational point.
struct Witness {
  Rational point;
  unsigned order = 0;  // 0, 1 or 2
  Sign sign = Sign::Indeterminate;
  Enclosure enclosure;
};

enum class CertificateKind { Positivity, UniqueZero };

const char* to_string(CertificateKind kind);

/// Machine-checkable record of either
///  - Positivity: F_theta > 0 on (0, pi/2) because every coefficient of the
///    series, including lambda = c1 - theta, is nonnegative; or
///  - UniqueZero: the derivative chain at m = 3. F''' > 0 termwise, F''
///    starts at 2*lambda < 0 and turns positive at a witness, so F' has a
///    single zero t0 (the minimum of F) and F a single zero x0 > t0.
///    Both are bracketed by witnesses of opposite sign.
struct Certificate {
  CertificateKind kind = CertificateKind::Positivity;
  FamilyTag family = FamilyTag::LogCos;
  Rational theta;
  unsigned m = 3;
  std::vector<Witness> witnesses;
  std::optional<Enclosure> zero_bracket;
  std::optional<Enclosure> min_bracket;
  unsigned depth_used = 0;
  unsigned coefficient_checks = 0;  // coeff(k) > 0 checked for k <= this
  Enclosure domain_end;             // pi/2 bounds

  Rational lambda() const { return squeeze::family(family).c1 - theta; }
};

/// Number of leading coefficients checked for positivity in a certificate.
inline constexpr unsigned kCoefficientChecks = 60;

/// theta <= c1 only; PreconditionError otherwise.
Certificate certify_positivity(const Family& family, const Rational& theta);

/// theta > c1 only. Throws CertificationError when no witness is found
/// below pi/2 or a bracket cannot be narrowed to the tolerance.
Certificate certify_unique_zero(const Family& family, const Rational& theta,
                                const Rational& zero_tol, const Rational& min_tol,
                                const Limits& limits = {});

struct BracketResult {
  Enclosure bracket;
  bool indeterminate = false;  // true when bisection stalled above tol
  Witness left;                // Negative at bracket.lo()
  Witness right;               // Positive at bracket.hi()
  unsigned depth_used = 0;
};

/// Certified bisection for the unique sign change of F^{(order)} on
/// [lo_point, hi_point]. Requires Negative at lo_point and Positive at
/// hi_point (PreconditionError otherwise).
BracketResult bracket_root(const PerturbedSeries& series, unsigned order,
                           const Rational& lo_point, const Rational& hi_point,
                           const Rational& tol, const Limits& limits = {});

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

/// Recomputes every witness and re-checks the structural invariants.
VerifyResult verify_certificate(const Certificate& cert, const Limits& limits = {});

}  // namespace squeeze
