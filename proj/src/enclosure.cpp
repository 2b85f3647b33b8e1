#include "squeeze/enclosure.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "squeeze/errors.hpp"

namespace squeeze {

const char* to_string(Sign sign) {
  switch (sign) {
    case Sign::Positive:
      return "positive";
    case Sign::Negative:
      return "negative";
    case Sign::Indeterminate:
      break;
  }
  return "indeterminate";
}

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw DomainError("enclosure with lo > hi: [" + to_fraction_string(lo_) + ", " +
                      to_fraction_string(hi_) + "]");
  }
}

Sign Enclosure::sign() const {
  if (lo_ > 0) return Sign::Positive;
  if (hi_ < 0) return Sign::Negative;
  return Sign::Indeterminate;
}

Rational Enclosure::magnitude() const { return std::max(abs(lo_), abs(hi_)); }

Enclosure operator+(const Enclosure& u, const Enclosure& v) {
  return Enclosure(u.lo() + v.lo(), u.hi() + v.hi());
}

Enclosure operator-(const Enclosure& u, const Enclosure& v) {
  return Enclosure(u.lo() - v.hi(), u.hi() - v.lo());
}

Enclosure operator-(const Enclosure& u) { return Enclosure(-u.hi(), -u.lo()); }

Enclosure operator*(const Enclosure& u, const Enclosure& v) {
  const std::array<Rational, 4> products = {u.lo() * v.lo(), u.lo() * v.hi(), u.hi() * v.lo(),
                                            u.hi() * v.hi()};
  auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return Enclosure(*lo, *hi);
}

Enclosure enc_combine(EncOp op, const Enclosure& u, const Enclosure& v) {
  switch (op) {
    case EncOp::Add:
      return u + v;
    case EncOp::Sub:
      return u - v;
    case EncOp::Mul:
      return u * v;
    case EncOp::Neg:
      break;
  }
  return -u;
}

Enclosure round_outward(const Enclosure& u, unsigned budget) {
  if (budget < 1) budget = 1;
  const Rational scale = pow2(static_cast<long>(budget));
  return Enclosure(ratio(floor(u.lo() * scale), scale.get_num()),
                   ratio(ceil(u.hi() * scale), scale.get_num()));
}

const Enclosure& pi_half_bounds() {
  // floor and ceil of pi/2 * 10^40.
  static const Integer scale("1" + std::string(40, '0'));
  static const Enclosure bounds(ratio(Integer("15707963267948966192313216916397514420985"), scale),
                                ratio(Integer("15707963267948966192313216916397514420986"), scale));
  return bounds;
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << "[" << to_fraction_string(e.lo()) << ", " << to_fraction_string(e.hi()) << "]";
}

}  // namespace squeeze
