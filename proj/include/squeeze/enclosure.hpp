#pragma once

#include <cstddef>
#include <ostream>

#include "squeeze/rational.hpp"

namespace squeeze {

enum class Sign { Positive, Negative, Indeterminate };

const char* to_string(Sign sign);

/// Closed rational interval [lo, hi] known to contain some real quantity.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
  /// Throws DomainError when lo > hi.
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  /// Positive iff lo > 0, Negative iff hi < 0.
  Sign sign() const;

  /// Upper bound of |v| over the interval.
  Rational magnitude() const;

  friend bool operator==(const Enclosure& a, const Enclosure& b) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

Enclosure operator+(const Enclosure& u, const Enclosure& v);
Enclosure operator-(const Enclosure& u, const Enclosure& v);
Enclosure operator*(const Enclosure& u, const Enclosure& v);
Enclosure operator-(const Enclosure& u);

enum class EncOp { Add, Sub, Mul, Neg };

/// Tightest interval containing {x op y}; `v` is ignored for Neg.
Enclosure enc_combine(EncOp op, const Enclosure& u, const Enclosure& v);

/// Widens `u` to dyadic endpoints with denominator 2^budget.
/// The result contains `u` and is at most 2^(1-budget) wider.
Enclosure round_outward(const Enclosure& u, unsigned budget);

/// Hard-coded enclosure of pi/2, width 10^-40.
const Enclosure& pi_half_bounds();

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace squeeze
