#include "squeeze/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

// Append-only memo tables. Readers take a shared lock; extension takes
// the exclusive lock and re-checks the size.
class BernoulliTable {
 public:
  Rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
  }

 private:
  void extend_to(unsigned n) {
    if (values_.empty()) values_.emplace_back(1);
    Integer binom;
    while (values_.size() <= n) {
      const auto m = static_cast<unsigned long>(values_.size());
      if (m > 1 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational sum(0);
      for (unsigned long j = 0; j < m; ++j) {
        if (j > 1 && j % 2 == 1) continue;
        mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
        sum += Rational(binom) * values_[j];
      }
      Rational b = -sum / Rational(static_cast<long>(m + 1));
      b.canonicalize();
      values_.push_back(std::move(b));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

class CoefficientTable {
 public:
  explicit CoefficientTable(FamilyTag tag) : tag_(tag) {}

  Rational get(unsigned k, unsigned cap) {
    {
      std::shared_lock lock(mutex_);
      if (k < values_.size()) return values_[k];
    }
    // Compute outside the lock; the Bernoulli table has its own.
    std::vector<Rational> fresh;
    unsigned start;
    {
      std::shared_lock lock(mutex_);
      start = static_cast<unsigned>(std::max<std::size_t>(values_.size(), 1));
    }
    for (unsigned j = start; j <= k; ++j) fresh.push_back(compute(j, cap));
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.emplace_back(0);  // index 0 unused
    for (unsigned j = static_cast<unsigned>(values_.size()); j <= k; ++j) {
      values_.push_back(fresh[j - start]);
    }
    return values_[k];
  }

 private:
  Rational compute(unsigned k, unsigned cap) const {
    const Rational b = bernoulli_abs_2k(k, cap);
    Integer factorial;
    mpz_fac_ui(factorial.get_mpz_t(), 2UL * k);
    const Rational p2k = pow2(2L * k);
    Rational numer;
    if (tag_ == FamilyTag::LogCos) {
      numer = pow2(2L * k - 1) * (p2k - 1) * b;
    } else {
      numer = p2k * (pow2(2L * k - 1) - 1) * b;
    }
    Rational out = numer / (Rational(static_cast<long>(k)) * Rational(factorial));
    out.canonicalize();
    return out;
  }

  FamilyTag tag_;
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

CoefficientTable& coefficient_table(FamilyTag tag) {
  static CoefficientTable log_cos(FamilyTag::LogCos);
  static CoefficientTable log_tan(FamilyTag::LogTanRatio);
  return tag == FamilyTag::LogCos ? log_cos : log_tan;
}

}  // namespace

const Family& log_cos_family() {
  static const Family f{FamilyTag::LogCos, Rational(1, 2), "logcos",
                        "-log cos x = sum 2^{2k-1}(2^{2k}-1)|B_2k| / (k (2k)!) x^{2k}"};
  return f;
}

const Family& log_tan_ratio_family() {
  static const Family f{FamilyTag::LogTanRatio, Rational(1, 3), "logtan",
                        "-log(x/tan x) = sum 2^{2k}(2^{2k-1}-1)|B_2k| / (k (2k)!) x^{2k}"};
  return f;
}

const Family& family(FamilyTag tag) {
  return tag == FamilyTag::LogCos ? log_cos_family() : log_tan_ratio_family();
}

const Family& family_from_name(std::string_view name) {
  if (name == "logcos") return log_cos_family();
  if (name == "logtan") return log_tan_ratio_family();
  throw ParseError("unknown family '" + std::string(name) + "' (expected logcos or logtan)");
}

Rational bernoulli_raw(unsigned n, unsigned cap) {
  if (n > 2 * cap) {
    throw ResourceError("Bernoulli index " + std::to_string(n) + " exceeds cap " +
                        std::to_string(2 * cap));
  }
  return bernoulli_table().get(n);
}

Rational bernoulli_abs_2k(unsigned k, unsigned cap) {
  if (k < 1) throw DomainError("bernoulli_abs_2k requires k >= 1");
  if (k > cap) {
    throw ResourceError("Bernoulli index k=" + std::to_string(k) + " exceeds cap " +
                        std::to_string(cap));
  }
  return abs(bernoulli_table().get(2 * k));
}

Rational coeff(const Family& family, unsigned k, unsigned cap) {
  if (k < 1) throw DomainError("series coefficients are indexed from k = 1");
  if (k > cap) {
    throw ResourceError("coefficient index k=" + std::to_string(k) + " exceeds cap " +
                        std::to_string(cap));
  }
  return coefficient_table(family.tag).get(k, cap);
}

std::vector<Rational> coeff_prefix(const Family& family, unsigned n, unsigned cap) {
  if (n < 1) throw DomainError("coeff_prefix requires n >= 1");
  std::vector<Rational> out;
  out.reserve(n);
  coeff(family, n, cap);  // fills the table in one pass
  for (unsigned k = 1; k <= n; ++k) out.push_back(coeff(family, k, cap));
  return out;
}

}  // namespace squeeze
