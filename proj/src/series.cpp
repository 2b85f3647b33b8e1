#include "squeeze/series.hpp"

#include <string>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

constexpr unsigned kRelativeBits = 160;
constexpr std::size_t kRoundingTrigger = 4096;
constexpr unsigned kRoundingBudget = 256;
constexpr unsigned kMaxPeakScan = 5000;

// Smallest dyadic >= v carrying about `bits` significant bits (v > 0).
Rational round_up_relative(const Rational& v, unsigned bits) {
  const long magnitude = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
                         static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
  const long shift = static_cast<long>(bits) - magnitude;
  if (shift <= 0) return Rational(ceil(v));
  const Rational scale = pow2(shift);
  return ratio(ceil(v * scale), scale.get_num());
}

// Upper bound on q^k for 0 < q.
Rational pow_up(const Rational& q, unsigned long k) {
  Rational result(1);
  Rational base = q;
  while (k > 0) {
    if (k & 1UL) result = round_up_relative(result * base, kRelativeBits);
    k >>= 1;
    if (k > 0) base = round_up_relative(base * base, kRelativeBits);
  }
  return result;
}

// Upper bound strictly below 1 when the exact value is.
Rational tighten_below_one(const Rational& exact) {
  Rational rounded = round_up_relative(exact, kRelativeBits);
  return rounded < 1 ? rounded : exact;
}

Rational falling_factorial(unsigned long n, unsigned order) {
  Rational out(1);
  for (unsigned j = 0; j < order; ++j) out *= Rational(static_cast<long>(n - j));
  return out;
}

void check_order(unsigned order) {
  if (order > 3) throw DomainError("derivative order must be in 0..3");
}

// Smallest N in [2, cap] with tail(N) <= target, by doubling then bisection.
template <typename TailFn>
unsigned choose_depth(TailFn tail, const Rational& target, unsigned cap, const char* what) {
  if (cap < 2) cap = 2;
  unsigned hi = 2;
  while (tail(hi) > target) {
    if (hi == cap) {
      throw ConvergenceError(std::string(what) + ": target width not reachable within depth cap " +
                             std::to_string(cap));
    }
    hi = std::min(cap, hi * 2);
  }
  unsigned lo = std::max(2u, hi / 2);
  if (lo == hi) return hi;
  // tail(lo) > target unless lo == 2 was already tried above.
  while (lo + 1 < hi) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (tail(mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return tail(lo) <= target ? lo : hi;
}

SeriesValue finish(Rational partial_sum, Rational tail, unsigned depth) {
  Enclosure value(partial_sum, partial_sum + tail);
  if (denominator_bits(partial_sum) > kRoundingTrigger ||
      denominator_bits(value.hi()) > kRoundingTrigger) {
    value = round_outward(value, kRoundingBudget);
  }
  return SeriesValue{std::move(value), depth, std::move(partial_sum), std::move(tail)};
}

}  // namespace

TailParams tail_params(const Rational& x, unsigned depth) {
  const Rational& half_pi_lo = pi_half_bounds().lo();
  if (x <= 0 || x >= half_pi_lo) {
    throw DomainError("x = " + to_fraction_string(x) +
                      " outside (0, lo(pi/2)); the series diverges at pi/2");
  }
  Rational r = x / half_pi_lo;
  r *= r;
  return TailParams{depth, tighten_below_one(r), kZetaBound};
}

Rational tail_bound(const Family& /*family*/, const Rational& x, unsigned depth, unsigned order) {
  check_order(order);
  if (depth < 2) throw DomainError("tail_bound requires N >= 2");
  const TailParams params = tail_params(x, depth);
  const Rational& r = params.ratio;
  const Rational first(static_cast<long>(depth + 1));
  if (order == 0) {
    // sum_{k>N} r^k / k <= r^{N+1} / ((N+1)(1 - r))
    return round_up_relative(
        params.majorant * pow_up(r, depth + 1UL) / (first * (Rational(1) - r)), 64);
  }

  // (2k)^d / k * r^k = [2^d k^{d-1} q^k] * r~^k with q = r / r~ < 1.
  const Rational r_tilde = (Rational(1) + r) / 2;
  const Rational q = tighten_below_one(r / r_tilde);
  // k^{d-1} q^k is log-concave in k: walk up from N+1 to its peak.
  unsigned long k = depth + 1UL;
  auto rises = [&](unsigned long kk) {
    return pow(Rational(static_cast<long>(kk + 1)), order - 1) * q >
           pow(Rational(static_cast<long>(kk)), order - 1);
  };
  while (rises(k)) {
    if (++k - depth > kMaxPeakScan) {
      throw ConvergenceError("derivative tail peak search did not terminate; x too close to pi/2");
    }
  }
  const Rational peak =
      pow2(order) * pow(Rational(static_cast<long>(k)), order - 1) * pow_up(q, k);
  const Rational x_pow = pow(x, order);
  return round_up_relative(
      params.majorant * peak * pow_up(r_tilde, depth + 1UL) / ((Rational(1) - r_tilde) * x_pow),
      64);
}

SeriesValue eval_detailed(const PerturbedSeries& series, const Rational& x, unsigned order,
                          const Rational& target_width, const Limits& limits) {
  check_order(order);
  if (target_width <= 0) throw DomainError("target_width must be positive");
  tail_params(x, 2);  // domain check

  const Family& fam = series.family();
  const unsigned cap = limits.depth_cap;
  const unsigned bern_cap = limits.bernoulli_cap();
  auto tail = [&](unsigned n) -> Rational { return tail_bound(fam, x, n, order); };

  unsigned depth = choose_depth(tail, target_width, cap, "series eval");
  const Rational y = x * x;
  const Rational lambda = series.lambda();
  for (;;) {
    // Horner in y over b_k = a_k * (2k)_d, a_1 = lambda, a_k = coeff(k).
    const auto coeffs = coeff_prefix(fam, depth, bern_cap);
    Rational acc(0);
    for (unsigned k = depth; k >= 1; --k) {
      const Rational a = k == 1 ? lambda : coeffs[k - 1];
      acc = acc * y + a * falling_factorial(2UL * k, order);
    }
    // acc * y = sum b_k y^k; divide by x^d.
    Rational partial = acc * y / pow(x, order);
    Rational t = tail(depth);
    SeriesValue out = finish(std::move(partial), std::move(t), depth);
    if (out.value.width() <= target_width) return out;
    if (depth >= cap) {
      throw ConvergenceError("series eval: target width not reachable within depth cap " +
                             std::to_string(cap));
    }
    depth = std::min(cap, depth + std::max(1u, depth / 4));
  }
}

Enclosure eval(const PerturbedSeries& series, const Rational& x, unsigned order,
               const Rational& target_width, const Limits& limits) {
  return eval_detailed(series, x, order, target_width, limits).value;
}

SeriesValue eval_best_constant_series_detailed(const Family& family, const Rational& x0,
                                               const Rational& target_width,
                                               const Limits& limits) {
  if (target_width <= 0) throw DomainError("target_width must be positive");
  tail_params(x0, 2);

  const Rational y = x0 * x0;
  auto tail = [&](unsigned n) -> Rational { return tail_bound(family, x0, n, 0) / y; };
  unsigned depth = choose_depth(tail, target_width, limits.depth_cap, "best constant");
  for (;;) {
    const auto coeffs = coeff_prefix(family, depth, limits.bernoulli_cap());
    Rational acc(0);
    for (unsigned k = depth; k >= 1; --k) acc = acc * y + coeffs[k - 1];
    SeriesValue out = finish(std::move(acc), tail(depth), depth);
    if (out.value.width() <= target_width) return out;
    if (depth >= limits.depth_cap) {
      throw ConvergenceError("best constant: target width not reachable within depth cap " +
                             std::to_string(limits.depth_cap));
    }
    depth = std::min(limits.depth_cap, depth + std::max(1u, depth / 4));
  }
}

Enclosure eval_best_constant_series(const Family& family, const Rational& x0,
                                    const Rational& target_width, const Limits& limits) {
  return eval_best_constant_series_detailed(family, x0, target_width, limits).value;
}

}  // namespace squeeze
