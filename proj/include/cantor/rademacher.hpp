#pragma once

#include <vector>

#include "cantor/approx.hpp"
#include "cantor/rational.hpp"
#include "cantor/simple_function.hpp"
#include "cantor/word.hpp"

namespace cantor {

// Injective finite enumeration phi: {1..N} -> naturals. The stage i
// contributes the term 4^-phi(i) h_i to the series.
class PhiMap {
 public:
  explicit PhiMap(std::vector<unsigned long> values);

  int stages() const { return static_cast<int>(values_.size()); }  // N
  unsigned long at(int i) const;                                   // 1-based
  const std::vector<unsigned long>& values() const { return values_; }

  bool enumerated_by(unsigned long m, int n) const;  // m in phi({1..n})
  bool in_range(unsigned long m) const { return enumerated_by(m, stages()); }

 private:
  std::vector<unsigned long> values_;
};

// Fair product measure: every cylinder [sigma] has mass 2^-length.
Rational coinflip_cylinder(const Word& sigma);

// Partial series f_n = sum_{1 <= i <= n} 4^-phi(i) h_i, a simple
// function of complexity n (the empty sum is the zero constant).
SimpleFunction partial_series(const PhiMap& phi, int n);

struct TailBoundResult {
  bool applicable;              // phi(j) > m for every stage j > n
  std::vector<int> offenders;   // stages violating that premise
  Rational exact_sup_norm;      // ||f_N - f_n||_inf = sum_{j>n} 4^-phi(j)
  Rational stated_bound;        // 1/(3 * 4^m)
  bool stated_bound_holds;      // exact < stated (always, when applicable)
};

// Exact sup-norm of the series tail past stage n, checked against the
// 1/(3*4^m) envelope that applies when every late stage exceeds m.
TailBoundResult tail_bound(const PhiMap& phi, int n, unsigned long m);

// Exact minimum over B_k g of coinflip({ |g - f_N| > delta }): on each
// length-k cylinder the residual sum_{i>k} 4^-phi(i) h_i takes 2^(N-k)
// equally likely values, and the sliding window from the approx module
// picks the heaviest coverable set.
DeviationResult min_deviation_coinflip(const PhiMap& phi, int k,
                                       const Rational& delta);

struct RangeDecodeResult {
  bool passes;        // min deviation at complexity n is < 1/2
  Rational deviation;
  SimpleFunction witness;
  Rational delta;     // deviation level used (4^-(m+1) by default)
  bool premise_ok;    // phi(j) >= m for every stage j > n
  std::vector<int> premise_offenders;
  bool enumerated_by_n;  // m in phi({1..n})
  bool in_range;         // m in phi({1..N})
};

// The decoding test: accepts (passes = true) exactly when no stage
// after n contributes a term at level m, so that membership of m in
// range(phi) is settled by the finite list phi(1..n). The premise_ok
// flag marks the instances where that equivalence is provable.
RangeDecodeResult range_decode(const PhiMap& phi, int n, unsigned long m);
RangeDecodeResult range_decode(const PhiMap& phi, int n, unsigned long m,
                               const Rational& delta);

}  // namespace cantor
