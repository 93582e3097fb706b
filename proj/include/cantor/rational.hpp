#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cantor {

// Exact unbounded-precision fraction. GMP keeps values canonical
// (reduced, positive denominator) as long as raw num/den pairs are
// canonicalized on entry, which the helpers below do.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "num/den" or a plain integer string.
Rational parse_rational(const std::string& text);

// Always renders as "num/den", e.g. "0/1", "17/16384".
std::string to_fraction_string(const Rational& r);

// Fixed-point decimal, rounded half away from zero. places >= 0.
std::string to_decimal_string(const Rational& r, int places = 12);

// 2^-n and 4^-n as exact rationals.
Rational inv_pow2(unsigned long n);
Rational inv_pow4(unsigned long n);

// Smallest integer >= r, as an unsigned value. r must be >= 0.
std::uint64_t ceil_to_uint(const Rational& r);

// Certified enclosure [lo, hi] of a real value; all endpoints exact.
class RationalInterval {
 public:
  RationalInterval() : lo_(0), hi_(0) {}
  RationalInterval(Rational lo, Rational hi);
  static RationalInterval point(const Rational& v) { return {v, v}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  RationalInterval operator+(const RationalInterval& other) const;
  // Scaling by a nonnegative factor; all uses here have factor >= 0.
  RationalInterval scaled(const Rational& factor) const;
  static RationalInterval sum(std::span<const RationalInterval> parts);

  bool operator==(const RationalInterval& other) const = default;

 private:
  Rational lo_, hi_;
};

}  // namespace cantor
