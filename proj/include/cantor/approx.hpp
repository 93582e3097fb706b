#pragma once

#include <utility>

#include "cantor/ergodic.hpp"
#include "cantor/measure.hpp"
#include "cantor/rational.hpp"
#include "cantor/simple_function.hpp"

namespace cantor {

struct DeviationResult {
  Rational deviation;      // minimal m({ |f - g| > delta }) over B_k g
  SimpleFunction witness;  // a g attaining it
};

// Exact minimum over all B_k-measurable g of the mass where f deviates
// from g by more than delta (strict). Per cylinder, one value of g can
// cover exactly the atom values inside a closed window of width
// 2*delta; a sliding window over the sorted values finds the heaviest
// such subset. Witness values are leftmost-window midpoints clamped to
// [0,1]; cylinders without atoms get 0.
DeviationResult min_deviation(const FiniteSupportMeasure& m, const LimitFunction& f,
                              int k, const Rational& delta);

// Piecewise closed form of min_deviation for the halting-in-s-steps
// measure with its ergodic limit, valid for any 0 < delta < 1/4 (the
// two limit values 1/4 and 3/4 can never share a window):
//   1/4              for 1 <= k <= s+1
//   (2s - k + 1)/4s  for s+1 <= k <= 2s+1
//   0                for k >= 2s+1
Rational deviation_closed_form(std::uint64_t s, int k,
                               const Rational& delta = make_rational(1, 8));

// E[f | B_k] under m: the mass-weighted mean of f on each cylinder with
// positive mass, 0 elsewhere.
SimpleFunction conditional_expectation(const FiniteSupportMeasure& m,
                                       const LimitFunction& f, int k);

// Exact integral of |f - g| dm.
Rational l1_distance(const FiniteSupportMeasure& m, const LimitFunction& f,
                     const SimpleFunction& g);

// Minimum of l1_distance over all B_k g: per cylinder the weighted
// median is the L1 minimizer. Does not materialize a table, so it is
// cheap to scan over k.
Rational optimal_l1_distance(const FiniteSupportMeasure& m, const LimitFunction& f,
                             int k);

// The per-cylinder lower weighted medians as a simple function.
SimpleFunction l1_median_witness(const FiniteSupportMeasure& m,
                                 const LimitFunction& f, int k);

struct ComplexityBound {
  int k;
  SimpleFunction witness;  // achieves l1_distance < eps at complexity k
};

// Minimal k such that some B_k g approximates f to within eps in L1(m),
// found by scanning k upward with the optimal witness at each step.
// Always terminates: once every cylinder separates the finitely many
// atoms by f-value, the optimal distance is 0.
ComplexityBound complexity_bound(const FiniteSupportMeasure& m,
                                 const LimitFunction& f, const Rational& eps);

}  // namespace cantor
