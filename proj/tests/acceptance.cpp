// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "squeeze/cli.hpp"
#include "squeeze/constants.hpp"
#include "squeeze/serialize.hpp"

using namespace squeeze;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliOutcome {
  int code;
  Json doc;
};

CliOutcome cli_run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  Json doc;
  try {
    doc = Json::parse(out.str());
  } catch (const std::exception&) {
  }
  return {code, std::move(doc)};
}

Rational rat(const Json& j) { return Rational(j.get<std::string>()); }

Rational dec(const char* s) { return rational_from_decimal(s); }

// The enclosure meets [value - tol, value + tol].
bool near(const Rational& lo, const Rational& hi, const char* value, const char* tol) {
  return lo <= dec(value) + dec(tol) && hi >= dec(value) - dec(tol);
}
bool near(const Enclosure& e, const char* value, const char* tol) {
  return near(e.lo(), e.hi(), value, tol);
}

bool encloses(const Enclosure& e, const oracle::Real& v) {
  return oracle::to_real(e.lo()) <= v && v <= oracle::to_real(e.hi());
}

Rational random_between(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  std::uniform_int_distribution<unsigned long> u(1, (1UL << 32) - 1);
  return lo + (hi - lo) * ratio(Integer(u(rng)), Integer(1UL << 32));
}

void best_constant_cli(Check& c, const char* fam, const char* value) {
  const CliOutcome r = cli_run({"constant", "--family", fam, "--x0", "1", "--width", "1e-7"});
  c.require(r.code == 0, "exit code " + std::to_string(r.code));
  if (!c.ok) return;
  const Json& bc = r.doc["results"]["best_constant"];
  const Rational lo = rat(bc["lo"]), hi = rat(bc["hi"]);
  c.require(Rational(hi - lo) <= dec("1e-7"), "width above 1e-7");
  c.require(near(lo, hi, value, "1e-6"), "enclosure misses " + std::string(value));
}

void error_analysis(Check& c, const Family& fam, const char* t0, const char* delta) {
  const ErrorReport r = max_error(fam, Rational(1), dec("1e-6"));
  c.require(near(r.t0, t0, "5e-6"), "t0 misses " + std::string(t0));
  c.require(near(r.delta, delta, "5e-7"), "delta misses " + std::string(delta));
}

void coefficients(Check& c) {
  const std::pair<const Family*, std::vector<Rational>> spots[] = {
      {&log_cos_family(), {Rational(1, 12), Rational(1, 45), Rational(17, 2520)}},
      {&log_tan_ratio_family(), {Rational(7, 90), Rational(62, 2835), Rational(127, 18900)}},
  };
  for (const auto& [fam, values] : spots) {
    for (unsigned k = 2; k <= 4; ++k)
      c.require(coeff(*fam, k) == values[k - 2], fam->name + " spot k=" + std::to_string(k));
    const auto expected = oracle::symbolic_coefficients(fam->tag, 10);
    for (unsigned k = 1; k <= 10; ++k)
      c.require(coeff(*fam, k) == expected[k - 1], fam->name + " oracle k=" + std::to_string(k));
  }
}

void positivity(Check& c) {
  for (const Family* fam : {&log_cos_family(), &log_tan_ratio_family()}) {
    try {
      const Certificate cert = certify_positivity(*fam, fam->c1);
      c.require(verify_certificate(cert).ok, fam->name + " certificate does not verify");
    } catch (const std::exception& e) {
      c.require(false, fam->name + ": " + e.what());
    }
  }
}

void squeeze_reproduction(Check& c) {
  for (const char* fam : {"logcos", "logtan"}) {
    std::ostringstream out, err;
    std::istringstream none;
    const int code = cli::run({"certify", "--family", fam, "--x0", "1"}, out, err, none);
    c.require(code == 0, std::string(fam) + " certify exit " + std::to_string(code));
    if (!c.ok) return;
    c.require(rat(Json::parse(out.str())["results"]["certified_interval_end"]) >= 1,
              std::string(fam) + " interval end below 1");
    const CliOutcome v = cli_run({"verify", "--in", "-"}, out.str());
    c.require(v.code == 0, std::string(fam) + " verify exit " + std::to_string(v.code));
  }
}

void containment(Check& c) {
  std::mt19937_64 rng(2024);
  const Rational end = Rational(95, 100) * pi_half_bounds().lo();
  const Rational widths[2] = {dec("1e-8"), dec("1e-5")};
  int total = 0, hits = 0;
  for (const Family* fam : {&log_cos_family(), &log_tan_ratio_family()}) {
    for (int i = 0; i < 200; ++i) {
      const Rational x = random_between(rng, Rational(0), end);
      const PerturbedSeries s(*fam, fam->c1);
      for (unsigned d = 0; d <= 1; ++d) {
        ++total;
        const Enclosure e = eval(s, x, d, widths[d]);
        if (encloses(e, oracle::perturbed(fam->tag, oracle::to_real(fam->c1),
                                          oracle::to_real(x), d)))
          ++hits;
      }
    }
  }
  c.require(hits == total, std::to_string(hits) + "/" + std::to_string(total) + " contained");
}

void soundness(Check& c) {
  const Rational tol = dec("1e-6");
  const Certificate cert = certify_unique_zero(log_cos_family(), Rational(3, 5), tol, tol);
  const Enclosure& zero = *cert.zero_bracket;
  c.require(cert.min_bracket->hi() < zero.lo(), "minimum not left of zero");
  const PerturbedSeries s(log_cos_family(), cert.theta);
  const Rational end = Rational(95, 100) * pi_half_bounds().lo();
  const Rational w(1, 1 << 20);
  std::mt19937_64 rng(7);
  int left_ok = 0, right_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const Rational l = random_between(rng, Rational(0), zero.lo());
    if (eval(s, l, 0, std::min(w, Rational(l * l / 64))).sign() == Sign::Negative) ++left_ok;
    const Rational r = random_between(rng, zero.hi(), end);
    if (eval(s, r, 0, std::min(w, Rational((r - zero.hi()) / 64))).sign() == Sign::Positive)
      ++right_ok;
  }
  c.require(left_ok == 100, std::to_string(left_ok) + "/100 negative on the left");
  c.require(right_ok == 100, std::to_string(right_ok) + "/100 positive on the right");
}

void monotone(Check& c) {
  const Rational w = dec("1e-7");
  for (const Family* fam : {&log_cos_family(), &log_tan_ratio_family()}) {
    std::optional<Enclosure> previous;
    for (int i = 1; i <= 7; ++i) {
      const Enclosure e = best_constant(*fam, Rational(i, 5), w);
      if (previous) c.require(previous->hi() < e.lo(), fam->name + " not separated at " +
                                                           std::to_string(i) + "/5");
      previous = e;
    }
    const Enclosure small = best_constant(*fam, Rational(1, 100), w);
    c.require(small.lo() > fam->c1 && small.hi() < fam->c1 + dec("1e-5"),
              fam->name + " limit at 1/100");
  }
}

void optimality(Check& c) {
  const Rational eps = dec("1e-3"), x = dec("1e-2");
  for (const Family* fam : {&log_cos_family(), &log_tan_ratio_family()}) {
    const Enclosure minus_log = eval(PerturbedSeries(*fam, Rational(0)), x, 0, dec("1e-12"));
    c.require((fam->c1 + eps) * x * x > minus_log.hi(), fam->name + " not separated");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime limit
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "best constant a (logcos, x0=1)", 1, [](Check& c) { best_constant_cli(c, "logcos", "0.615626"); }},
      {2, "best constant b (logtan, x0=1)", 1, [](Check& c) { best_constant_cli(c, "logtan", "0.443023"); }},
      {3, "error analysis logcos", 5,
       [](Check& c) { error_analysis(c, log_cos_family(), "0.736713", "0.0339435"); }},
      {4, "error analysis logtan", 5,
       [](Check& c) { error_analysis(c, log_tan_ratio_family(), "0.737815", "0.0324168"); }},
      {5, "coefficient exactness", 1, coefficients},
      {6, "positivity certificates at c1", 0, positivity},
      {7, "squeeze reproduction on (0,1) + verify", 0, squeeze_reproduction},
      {8, "containment property suite", 30, containment},
      {9, "unique-zero soundness sampling", 0, soundness},
      {10, "monotonicity and small-interval limits", 0, monotone},
      {11, "upper-constant optimality probe", 0, optimality},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && seconds >= cr.limit_s) {
      std::ostringstream msg;
      msg << "runtime " << seconds << " s exceeds " << cr.limit_s << " s";
      check.require(false, msg.str());
    }
    if (!check.ok) ++failures;
    std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name
              << " (" << seconds << " s)";
    if (!check.ok) std::cout << " -- " << check.detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
