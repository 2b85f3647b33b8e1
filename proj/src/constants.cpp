#include "squeeze/constants.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

void check_interval_end(const Rational& x0) {
  if (x0 <= 0 || x0 >= pi_half_bounds().lo()) {
    throw DomainError("x0 = " + to_fraction_string(x0) + " outside (0, pi/2)");
  }
}

}  // namespace

Enclosure best_constant(const Family& family, const Rational& x0, const Rational& target_width,
                        const Limits& limits) {
  check_interval_end(x0);
  return eval_best_constant_series(family, x0, target_width, limits);
}

SqueezeResult certify_squeeze(const Family& family, const Rational& x0, const Rational& width,
                              const Limits& limits) {
  check_interval_end(x0);
  SqueezeResult result;
  result.family = family.tag;
  result.x0 = x0;
  result.best_constant = best_constant(family, x0, width, limits);
  result.upper_constant = family.c1;

  // theta* >= the true best constant, so its zero sits at or right of x0;
  // tighten the zero bracket until that is certified.
  const Rational theta = result.best_constant.hi();
  Rational zero_tol = width;
  for (unsigned attempt = 0;; ++attempt) {
    result.lower_cert = certify_unique_zero(family, theta, zero_tol, width, limits);
    if (result.lower_cert.zero_bracket->lo() >= x0) break;
    if (attempt >= limits.bisect_cap) {
      throw CertificationError("zero bracket still starts below x0 after " +
                               std::to_string(attempt) + " refinements");
    }
    zero_tol /= 2;
  }
  result.certified_interval_end = result.lower_cert.zero_bracket->lo();
  result.upper_cert = certify_positivity(family, family.c1);
  return result;
}

ErrorReport max_error(const Family& family, const Rational& x0, const Rational& tol,
                      const Limits& limits, const Rational& theta_width) {
  check_interval_end(x0);
  if (tol <= 0) throw DomainError("tolerance must be positive");
  ErrorReport report;
  report.family = family.tag;
  report.x0 = x0;
  report.theta = best_constant(family, x0, theta_width, limits).hi();

  const Certificate cert = certify_unique_zero(family, report.theta, tol, tol, limits);
  report.t0 = *cert.min_bracket;
  if (!(report.t0.hi() < x0)) {
    throw CertificationError("minimum bracket does not lie left of x0");
  }

  const PerturbedSeries series(family, report.theta);
  const Rational& u = report.t0.lo();
  const Rational& v = report.t0.hi();
  const Rational fine = std::min(tol, Rational(1, 1'000'000)) / 1000;
  const Enclosure f_u = eval(series, u, 0, fine, limits);
  const Enclosure f_v = eval(series, v, 0, fine, limits);
  // F' increases on the bracket (it lies right of the zero of F''), so
  // |F'| there is bounded by its endpoint magnitudes.
  const Rational slope = std::max(eval(series, u, 1, tol, limits).magnitude(),
                                  eval(series, v, 1, tol, limits).magnitude());
  const Rational lower = -std::min(f_u.hi(), f_v.hi());
  const Rational upper = slope * (v - u) - f_u.lo();
  if (lower <= 0) throw CertificationError("could not certify F(t0) < 0");
  report.delta = round_outward(Enclosure(lower, upper), 128);
  return report;
}

std::vector<ScanRow> scan(const Family& family, const Rational& from, const Rational& to,
                          unsigned steps, const Rational& width, const Rational& tol,
                          const Limits& limits) {
  if (steps < 1) throw DomainError("scan needs steps >= 1");
  if (!(from > 0 && from < to && to < pi_half_bounds().lo())) {
    throw DomainError("scan needs 0 < from < to < pi/2");
  }

  std::vector<ScanRow> rows(steps + 1);
  const Rational step = (to - from) / Rational(static_cast<long>(steps));
  for (unsigned i = 0; i <= steps; ++i) rows[i].x0 = from + step * Rational(static_cast<long>(i));

  auto fill = [&](ScanRow& row) {
    try {
      row.best_constant = best_constant(family, row.x0, width, limits);
      ErrorReport report = max_error(family, row.x0, tol, limits);
      row.t0 = report.t0;
      row.delta = report.delta;
    } catch (const Error& e) {
      row.error = e.what();
    }
  };

  // Static striping keeps the row order independent of scheduling.
  const unsigned workers =
      std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(rows.size()));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < rows.size(); i += workers) fill(rows[i]);
    }));
  }
  for (auto& job : jobs) job.get();
  return rows;
}

}  // namespace squeeze
