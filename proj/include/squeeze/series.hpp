#pragma once

#include "squeeze/bernoulli.hpp"
#include "squeeze/enclosure.hpp"
#include "squeeze/limits.hpp"
#include "squeeze/rational.hpp"

namespace squeeze {

/// F_theta(x) = (c1 - theta) x^2 + sum_{k>=2} coeff(family, k) x^{2k}.
///
/// For LogCos this is -theta x^2 - log cos x, for LogTanRatio it is
/// -theta x^2 - log(x / tan x), on (0, pi/2). theta = c1 gives the
/// all-positive series; theta > c1 makes the leading coefficient negative.
class PerturbedSeries {
 public:
  PerturbedSeries(const Family& family, Rational theta)
      : family_(&family), theta_(std::move(theta)) {}

  const Family& family() const { return *family_; }
  const Rational& theta() const { return theta_; }
  /// Leading coefficient lambda = c1 - theta.
  Rational lambda() const { return family_->c1 - theta_; }

 private:
  const Family* family_;
  Rational theta_;
};

/// Geometric majorant data for the omitted tail past index N.
struct TailParams {
  unsigned depth = 0;
  Rational ratio;      // upper bound on (2x / pi_lo)^2, strictly < 1
  Rational majorant;   // 5/3, bounds zeta(2k)
};

inline const Rational kZetaBound{5, 3};

/// Ratio r = (x / lo(pi/2))^2 rounded up to a dyadic (still < 1).
/// DomainError unless 0 < x < lo(pi/2).
TailParams tail_params(const Rational& x, unsigned depth);

/// Upper bound on sum_{k>N} coeff(family,k) * (2k)(2k-1)...(2k-d+1) * x^{2k-d},
/// from coeff(family,k) <= (5/3) (2/pi_lo)^{2k} / k (shared by both families).
/// d = 0: (5/3) r^{N+1} / ((N+1)(1 - r)).
/// d >= 1: x^{-d} (5/3) C r~^{N+1} / (1 - r~) with r~ = (1 + r)/2 and
/// C = max_{k>N} (2k)^d / k * (r/r~)^k. Nonincreasing in N.
Rational tail_bound(const Family& family, const Rational& x, unsigned depth, unsigned order);

/// Enclosure plus the bookkeeping behind it.
struct SeriesValue {
  Enclosure value;
  unsigned depth = 0;
  Rational partial_sum;  // exact partial sum through index `depth`
  Rational tail;         // tail_bound at `depth`
};

/// d-th derivative (d in 0..3) of F_theta at x, as [S, S + T] (outward
/// rounded when S grows past 4096 denominator bits). Width <= target_width,
/// ConvergenceError when that needs more than limits.depth_cap terms.
SeriesValue eval_detailed(const PerturbedSeries& series, const Rational& x, unsigned order,
                          const Rational& target_width, const Limits& limits = {});

Enclosure eval(const PerturbedSeries& series, const Rational& x, unsigned order,
               const Rational& target_width, const Limits& limits = {});

/// c1 + sum_{k>=2} coeff(family,k) x0^{2k-2}, which equals -log(cos x0)/x0^2
/// (resp. -log(x0/tan x0)/x0^2): the best constant for the interval (0, x0).
SeriesValue eval_best_constant_series_detailed(const Family& family, const Rational& x0,
                                               const Rational& target_width,
                                               const Limits& limits = {});

Enclosure eval_best_constant_series(const Family& family, const Rational& x0,
                                    const Rational& target_width, const Limits& limits = {});

}  // namespace squeeze
