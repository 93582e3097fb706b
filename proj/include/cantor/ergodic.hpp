#pragma once

#include <map>

#include "cantor/measure.hpp"
#include "cantor/periodic_point.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// Pointwise limit of the ergodic averages A_n 1_[1], represented on the
// atoms of a finite-support measure (which is everywhere the measure
// can see). The value at a periodic point is the ones-density of its
// period.
using LimitFunction = std::map<PeriodicPoint, Rational>;

// (A_n 1_[1])(p): the fraction of ones among the first n bits. n >= 1.
Rational ergodic_average(const PeriodicPoint& p, std::uint64_t n);

// lim_n A_n 1_[1] at p, exactly: ones(period) / length(period).
Rational ergodic_limit(const PeriodicPoint& p);

LimitFunction limit_function(const FiniteSupportMeasure& m);

// Exact L1 distance between A_n 1_[1] and its limit under m.
Rational l1_error(const FiniteSupportMeasure& m, std::uint64_t n);

// l1_error for n = 1..n_max, computed with one prefix sweep per atom.
std::vector<Rational> l1_error_series(const FiniteSupportMeasure& m,
                                      std::uint64_t n_max);

}  // namespace cantor
