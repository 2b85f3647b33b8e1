#include "squeeze/certifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

constexpr unsigned kWitnessSchedule = 40;
constexpr unsigned kSearchShrinks = 6;      // witness search: width /16 per step
constexpr unsigned kLowPointHalvings = 200;
constexpr unsigned kScheduleBits = 64;

// Evaluates one series and tracks the deepest truncation used.
class Probe {
 public:
  Probe(const PerturbedSeries& series, const Limits& limits) : series_(series), limits_(limits) {}

  // Certified sign at (x, order) trying widths w, w/s, w/s^2, ... for
  // `tries` steps; nullopt if still Indeterminate or out of depth.
  std::optional<Witness> witness(const Rational& x, unsigned order, Rational width,
                                 unsigned tries, const Rational& shrink) {
    for (unsigned i = 0; i < tries; ++i, width /= shrink) {
      SeriesValue v;
      try {
        v = eval_detailed(series_, x, order, width, limits_);
      } catch (const ConvergenceError&) {
        return std::nullopt;
      }
      max_depth_ = std::max(max_depth_, v.depth);
      if (const Sign s = v.value.sign(); s != Sign::Indeterminate) {
        return Witness{x, order, s, v.value};
      }
    }
    return std::nullopt;
  }

  // First schedule point x_j = lo(pi/2)(1 - 2^-j) where F^{(order)} is
  // certified Positive.
  Witness search_positive(unsigned order) {
    const Rational& half_pi_lo = pi_half_bounds().lo();
    const Rational grid = pow2(static_cast<long>(kScheduleBits));
    for (unsigned j = 1; j <= kWitnessSchedule; ++j) {
      const Rational x = ratio(floor(half_pi_lo * (Rational(1) - pow2(-static_cast<long>(j))) * grid),
                               grid.get_num());
      auto w = witness(x, order, Rational(1, 4), kSearchShrinks, Rational(16));
      if (w && w->sign == Sign::Positive) return *w;
    }
    throw CertificationError("no positive witness for derivative order " + std::to_string(order) +
                             " below pi/2 (theta = " + to_fraction_string(series_.theta()) + ")");
  }

  // Halve x until F^{(order)} is certified Negative.
  Witness search_negative_below(const Rational& start, unsigned order) {
    Rational x = start;
    for (unsigned i = 0; i < kLowPointHalvings; ++i, x /= 2) {
      auto w = witness(x, order, Rational(1, 16), kSearchShrinks, Rational(16));
      if (w && w->sign == Sign::Negative) return *w;
    }
    throw CertificationError("no negative witness for derivative order " + std::to_string(order) +
                             " near 0");
  }

  unsigned max_depth() const { return max_depth_; }
  void absorb(unsigned depth) { max_depth_ = std::max(max_depth_, depth); }

 private:
  const PerturbedSeries& series_;
  const Limits& limits_;
  unsigned max_depth_ = 0;
};

const Witness* find_witness(const Certificate& cert, const Rational& point, unsigned order,
                            Sign sign) {
  for (const auto& w : cert.witnesses) {
    if (w.point == point && w.order == order && w.sign == sign) return &w;
  }
  return nullptr;
}

}  // namespace

const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::Positivity ? "positivity" : "unique_zero";
}

Certificate certify_positivity(const Family& family, const Rational& theta) {
  if (theta > family.c1) {
    throw PreconditionError("positivity needs theta <= c1 = " + to_fraction_string(family.c1));
  }
  Certificate cert;
  cert.kind = CertificateKind::Positivity;
  cert.family = family.tag;
  cert.theta = theta;
  cert.domain_end = pi_half_bounds();
  for (unsigned k = 1; k <= kCoefficientChecks; ++k) {
    if (coeff(family, k) <= 0) {
      throw CertificationError("coefficient " + std::to_string(k) + " is not positive");
    }
  }
  cert.coefficient_checks = kCoefficientChecks;
  cert.depth_used = kCoefficientChecks;
  return cert;
}

BracketResult bracket_root(const PerturbedSeries& series, unsigned order,
                           const Rational& lo_point, const Rational& hi_point,
                           const Rational& tol, const Limits& limits) {
  if (order > 2) throw DomainError("bracket_root supports derivative orders 0..2");
  if (tol <= 0) throw DomainError("bisection tolerance must be positive");
  if (lo_point >= hi_point) throw PreconditionError("bracket_root needs lo_point < hi_point");

  Probe probe(series, limits);
  const Rational start_width = (hi_point - lo_point) / 16;
  auto left = probe.witness(lo_point, order, start_width, limits.bisect_cap + 1, Rational(2));
  auto right = probe.witness(hi_point, order, start_width, limits.bisect_cap + 1, Rational(2));
  if (!left || left->sign != Sign::Negative || !right || right->sign != Sign::Positive) {
    throw PreconditionError("bracket_root needs a certified Negative sign at lo_point and "
                            "Positive at hi_point");
  }

  BracketResult result{Enclosure(lo_point, hi_point), false, *left, *right, 0};
  while (result.bracket.width() > tol) {
    const Rational& u = result.left.point;
    const Rational& v = result.right.point;
    const Rational span = v - u;
    // Midpoint first, then off-centre cuts if the midpoint sits on the root.
    const std::array<Rational, 3> cuts = {u + span / 2, u + span * Rational(3, 8),
                                          u + span * Rational(5, 8)};
    std::optional<Witness> w;
    for (const auto& cut : cuts) {
      w = probe.witness(cut, order, span / 16, limits.bisect_cap + 1, Rational(2));
      if (w) break;
    }
    if (!w) {
      result.indeterminate = true;
      break;
    }
    if (w->sign == Sign::Negative) {
      result.left = *w;
    } else {
      result.right = *w;
    }
    result.bracket = Enclosure(result.left.point, result.right.point);
  }
  result.depth_used = probe.max_depth();
  return result;
}

Certificate certify_unique_zero(const Family& family, const Rational& theta,
                                const Rational& zero_tol, const Rational& min_tol,
                                const Limits& limits) {
  if (theta <= family.c1) {
    throw PreconditionError("unique-zero certificate needs theta > c1 = " +
                            to_fraction_string(family.c1));
  }
  if (zero_tol <= 0 || min_tol <= 0) throw DomainError("tolerances must be positive");

  Certificate cert;
  cert.kind = CertificateKind::UniqueZero;
  cert.family = family.tag;
  cert.theta = theta;
  cert.domain_end = pi_half_bounds();

  // (a) F''' > 0: lambda drops out at order 3, all other terms positive.
  for (unsigned k = 2; k <= kCoefficientChecks; ++k) {
    if (coeff(family, k) <= 0) {
      throw CertificationError("coefficient " + std::to_string(k) + " is not positive");
    }
  }
  cert.coefficient_checks = kCoefficientChecks;

  const PerturbedSeries series(family, theta);
  Probe probe(series, limits);
  auto record = [&](const Witness& w) {
    if (!find_witness(cert, w.point, w.order, w.sign)) cert.witnesses.push_back(w);
  };
  auto run_bracket = [&](unsigned order, const Rational& lo, const Rational& hi,
                         const Rational& tol, const char* what) {
    BracketResult b = bracket_root(series, order, lo, hi, tol, limits);
    probe.absorb(b.depth_used);
    if (b.indeterminate) {
      std::ostringstream msg;
      msg << what << ": bisection stalled at " << b.bracket
          << " (Indeterminate midpoint sign; raise SQUEEZE_BISECT_CAP)";
      throw CertificationError(msg.str());
    }
    record(b.left);
    record(b.right);
    return b;
  };

  // F''(0+) = 2 lambda < 0; a positive witness gives the unique zero x2 of F''.
  const Witness second_pos = probe.search_positive(2);
  const Witness second_neg = probe.search_negative_below(second_pos.point / 2, 2);
  record(second_neg);
  record(second_pos);
  const BracketResult inflection =
      run_bracket(2, second_neg.point, second_pos.point,
                  (second_pos.point - second_neg.point) / 1024, "F'' zero");

  // F'(0+) = 0 and F' decreases up to x2, so F' < 0 at the left end.
  const Witness first_pos = probe.search_positive(1);
  record(first_pos);
  auto first_neg = probe.witness(inflection.bracket.lo(), 1, Rational(1, 16),
                                 kSearchShrinks, Rational(16));
  if (!first_neg || first_neg->sign != Sign::Negative) {
    throw CertificationError("could not certify F' < 0 left of the inflection point");
  }
  record(*first_neg);
  const BracketResult minimum =
      run_bracket(1, first_neg->point, first_pos.point, min_tol, "minimum (F' zero)");
  cert.min_bracket = minimum.bracket;

  // F(0+) = 0 and F decreases up to t0, so F < 0 right of the minimum bracket too.
  const Witness value_pos = probe.search_positive(0);
  record(value_pos);
  auto value_neg = probe.witness(minimum.bracket.hi(), 0, Rational(1, 16), kSearchShrinks,
                                 Rational(16));
  if (!value_neg || value_neg->sign != Sign::Negative) {
    throw CertificationError("could not certify F < 0 at the minimum bracket");
  }
  record(*value_neg);
  if (value_pos.point <= value_neg->point) {
    throw CertificationError("positive F witness lies left of the minimum");
  }
  const BracketResult zero =
      run_bracket(0, value_neg->point, value_pos.point, zero_tol, "zero of F");
  cert.zero_bracket = zero.bracket;

  cert.depth_used = probe.max_depth();
  return cert;
}

VerifyResult verify_certificate(const Certificate& cert, const Limits& limits) {
  VerifyResult result;
  auto fail = [&](std::string reason) {
    result.ok = false;
    result.reasons.push_back(std::move(reason));
  };

  const Family& fam = family(cert.family);
  if (cert.m != 3) fail("m must be 3");
  if (!(cert.domain_end == pi_half_bounds())) fail("domain_end differs from the pi/2 enclosure");

  const unsigned checks = std::min(cert.coefficient_checks, limits.bernoulli_cap());
  if (checks < 2) fail("no coefficient positivity checks recorded");
  for (unsigned k = 1; k <= checks; ++k) {
    if (coeff(fam, k) <= 0) fail("coefficient " + std::to_string(k) + " is not positive");
  }

  const PerturbedSeries series(fam, cert.theta);
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const Witness& w = cert.witnesses[i];
    const std::string tag = "witness " + std::to_string(i);
    if (w.order > 2) {
      fail(tag + ": derivative order must be 0..2");
      continue;
    }
    if (w.sign == Sign::Indeterminate) {
      fail(tag + ": indeterminate sign");
      continue;
    }
    if (w.enclosure.sign() != w.sign) fail(tag + ": enclosure does not have the recorded sign");
    if (w.point <= 0 || w.point >= pi_half_bounds().lo()) {
      fail(tag + ": point outside (0, pi/2)");
      continue;
    }
    Rational width = w.enclosure.width();
    if (width <= 0) width = pow2(-64);
    try {
      const Enclosure fresh = eval(series, w.point, w.order, width, limits);
      if (fresh.sign() != w.sign) {
        fail(tag + ": re-evaluation gives " + to_string(fresh.sign()) + ", recorded " +
             to_string(w.sign));
      }
    } catch (const Error& e) {
      fail(tag + ": re-evaluation failed: " + e.what());
    }
  }

  if (cert.kind == CertificateKind::Positivity) {
    if (cert.lambda() < 0) fail("positivity certificate with theta > c1");
    if (cert.zero_bracket || cert.min_bracket) fail("positivity certificate carries brackets");
    return result;
  }

  if (cert.lambda() >= 0) fail("unique-zero certificate with theta <= c1");
  if (!cert.zero_bracket || !cert.min_bracket) {
    fail("unique-zero certificate without brackets");
    return result;
  }
  const Enclosure& zero = *cert.zero_bracket;
  const Enclosure& minimum = *cert.min_bracket;

  bool second_positive = false;
  for (const auto& w : cert.witnesses) {
    if (w.order == 2 && w.sign == Sign::Positive) second_positive = true;
  }
  if (!second_positive) fail("no witness with F'' > 0");
  if (!find_witness(cert, minimum.lo(), 1, Sign::Negative)) fail("min_bracket.lo lacks F' < 0");
  if (!find_witness(cert, minimum.hi(), 1, Sign::Positive)) fail("min_bracket.hi lacks F' > 0");
  if (!find_witness(cert, zero.lo(), 0, Sign::Negative)) fail("zero_bracket.lo lacks F < 0");
  if (!find_witness(cert, zero.hi(), 0, Sign::Positive)) fail("zero_bracket.hi lacks F > 0");
  if (!(minimum.hi() < zero.lo())) fail("min_bracket.hi >= zero_bracket.lo (t0 < x0 violated)");
  if (minimum.lo() <= 0) fail("min_bracket must lie in (0, pi/2)");
  if (zero.hi() >= pi_half_bounds().lo()) fail("zero_bracket must lie below pi/2");
  return result;
}

}  // namespace squeeze
