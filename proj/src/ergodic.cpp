#include "cantor/ergodic.hpp"

#include <stdexcept>

namespace cantor {

Rational ergodic_average(const PeriodicPoint& p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ergodic_average: n must be >= 1");
  // ones among the first n bits = full periods + a partial window
  auto period = static_cast<std::uint64_t>(p.period_length());
  std::uint64_t full = n / period, rest = n % period;
  auto ones = static_cast<std::uint64_t>(p.period().ones()) * full;
  for (std::uint64_t i = 0; i < rest; ++i)
    ones += static_cast<std::uint64_t>(p.bit(i));
  Rational r(static_cast<unsigned long>(ones), static_cast<unsigned long>(n));
  r.canonicalize();
  return r;
}

Rational ergodic_limit(const PeriodicPoint& p) { return p.ones_density(); }

LimitFunction limit_function(const FiniteSupportMeasure& m) {
  LimitFunction f;
  for (const auto& [point, mass] : m.atoms()) f[point] = ergodic_limit(point);
  return f;
}

Rational l1_error(const FiniteSupportMeasure& m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("l1_error: n must be >= 1");
  Rational total(0);
  for (const auto& [point, mass] : m.atoms())
    total += mass * abs(ergodic_average(point, n) - ergodic_limit(point));
  return total;
}

std::vector<Rational> l1_error_series(const FiniteSupportMeasure& m,
                                      std::uint64_t n_max) {
  std::vector<Rational> series(n_max, Rational(0));
  for (const auto& [point, mass] : m.atoms()) {
    Rational limit = ergodic_limit(point);
    std::uint64_t ones = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      ones += static_cast<std::uint64_t>(point.bit(n - 1));
      Rational avg(static_cast<unsigned long>(ones), static_cast<unsigned long>(n));
      avg.canonicalize();
      series[n - 1] += mass * abs(avg - limit);
    }
  }
  return series;
}

}  // namespace cantor
