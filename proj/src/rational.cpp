#include "cantor/rational.hpp"

#include <stdexcept>

namespace cantor {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  mpq_class r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int places) {
  if (places < 0) throw std::invalid_argument("decimal: negative places");
  mpz_class scaled_num = r.get_num();
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(places));
  scaled_num *= pow10;

  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
              r.get_den().get_mpz_t());
  // Round half away from zero.
  mpz_class rem2 = 2 * abs(rem);
  if (rem2 >= r.get_den()) q += (sgn(scaled_num) < 0) ? -1 : 1;

  bool negative = q < 0;
  std::string digits = abs(q).get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<size_t>(places));
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<size_t>(places));
  }
  return out;
}

Rational inv_pow2(unsigned long n) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, n);
  return Rational(mpz_class(1), d);
}

Rational inv_pow4(unsigned long n) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 4, n);
  return Rational(mpz_class(1), d);
}

std::uint64_t ceil_to_uint(const Rational& r) {
  if (r < 0) throw std::invalid_argument("ceil_to_uint: negative value");
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_ulong_p()) throw std::overflow_error("ceil_to_uint: too large");
  return static_cast<std::uint64_t>(q.get_ui());
}

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval: lo > hi");
}

RationalInterval RationalInterval::operator+(const RationalInterval& other) const {
  return {lo_ + other.lo_, hi_ + other.hi_};
}

RationalInterval RationalInterval::scaled(const Rational& factor) const {
  if (factor < 0) throw std::invalid_argument("interval: negative scale factor");
  return {lo_ * factor, hi_ * factor};
}

RationalInterval RationalInterval::sum(std::span<const RationalInterval> parts) {
  RationalInterval acc;
  for (const auto& p : parts) acc = acc + p;
  return acc;
}

}  // namespace cantor
