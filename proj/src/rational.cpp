#include "squeeze/rational.hpp"

#include <cctype>
#include <string>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

constexpr long kMaxExponent = 100000;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

Rational pow10_signed(long e) {
  if (e >= 0) return Rational(pow10(static_cast<unsigned long>(e)));
  return Rational(Integer(1), pow10(static_cast<unsigned long>(-e)));
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational literal '" + original + "'");
    }
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + original + "'");
    value = Rational(p, q);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw ParseError("malformed exponent in '" + original + "'");
      }
      exponent = std::stol(std::string(exp_text));
      if (exponent > kMaxExponent) throw ParseError("exponent out of range in '" + original + "'");
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
      if (!frac_part.empty() && !all_digits(frac_part)) {
        throw ParseError("malformed rational literal '" + original + "'");
      }
    }
    if (!int_part.empty() && !all_digits(int_part)) {
      throw ParseError("malformed rational literal '" + original + "'");
    }
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("malformed rational literal '" + original + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa(digits, 10);
    value = Rational(mantissa) *
            pow10_signed(exponent - static_cast<long>(frac_part.size()));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw ParseError("zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow2(long e) {
  Integer p(1);
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(Integer(1), p);
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // num^e / den^e stays coprime with positive denominator.
  return out;
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

std::size_t denominator_bits(const Rational& value) {
  return mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

std::string to_decimal(const Rational& value, int significant, Rounding dir) {
  if (significant < 1) significant = 1;
  if (value == 0) return "0";

  const Rational magnitude = abs(value);
  long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
  while (pow10_signed(e) > magnitude) --e;
  while (pow10_signed(e + 1) <= magnitude) ++e;

  const Rational scaled = value * pow10_signed(significant - 1 - e);
  Integer n = dir == Rounding::Down ? floor(scaled) : ceil(scaled);
  Integer n_abs = abs(n);
  if (n_abs == pow10(static_cast<unsigned long>(significant))) {
    n_abs /= 10;
    ++e;
  }

  std::string digits = n_abs.get_str();
  std::string out = value < 0 ? "-" : "";

  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
  };

  if (e >= -7 && e < 10) {
    std::string body;
    if (e < 0) {
      body = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else if (static_cast<std::size_t>(e + 1) >= digits.size()) {
      body = digits + std::string(static_cast<std::size_t>(e + 1) - digits.size(), '0');
    } else {
      body = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
             digits.substr(static_cast<std::size_t>(e + 1));
    }
    return out + strip(body);
  }
  std::string mantissa = digits.size() > 1 ? digits.substr(0, 1) + "." + digits.substr(1) : digits;
  return out + strip(mantissa) + "e" + std::to_string(e);
}

}  // namespace squeeze
