#include "cantor/rademacher.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cantor {

PhiMap::PhiMap(std::vector<unsigned long> values) : values_(std::move(values)) {
  std::set<unsigned long> seen(values_.begin(), values_.end());
  if (seen.size() != values_.size())
    throw std::invalid_argument("phi: enumeration must be injective");
}

unsigned long PhiMap::at(int i) const {
  if (i < 1 || i > stages()) throw std::out_of_range("phi: stage out of range");
  return values_[static_cast<size_t>(i - 1)];
}

bool PhiMap::enumerated_by(unsigned long m, int n) const {
  for (int i = 1; i <= std::min(n, stages()); ++i)
    if (at(i) == m) return true;
  return false;
}

Rational coinflip_cylinder(const Word& sigma) {
  return inv_pow2(static_cast<unsigned long>(sigma.length()));
}

SimpleFunction partial_series(const PhiMap& phi, int n) {
  if (n < 0 || n > phi.stages())
    throw std::invalid_argument("partial_series: n out of range");
  if (n == 0) return SimpleFunction::constant(Rational(0));
  std::vector<std::pair<Rational, SimpleFunction>> terms;
  terms.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    terms.emplace_back(inv_pow4(phi.at(i)), SimpleFunction::rademacher(i));
  return linear_combination(terms);
}

TailBoundResult tail_bound(const PhiMap& phi, int n, unsigned long m) {
  if (n < 0 || n > phi.stages())
    throw std::invalid_argument("tail_bound: n out of range");
  TailBoundResult r;
  r.exact_sup_norm = Rational(0);
  for (int j = n + 1; j <= phi.stages(); ++j) {
    r.exact_sup_norm += inv_pow4(phi.at(j));
    if (phi.at(j) <= m) r.offenders.push_back(j);
  }
  r.applicable = r.offenders.empty();
  r.stated_bound = inv_pow4(m) / 3;
  r.stated_bound_holds = r.exact_sup_norm < r.stated_bound;
  return r;
}

DeviationResult min_deviation_coinflip(const PhiMap& phi, int k,
                                       const Rational& delta) {
  if (delta <= 0)
    throw std::invalid_argument("min_deviation_coinflip: delta must be > 0");
  int full_k = std::max(k, phi.stages());
  SimpleFunction f = partial_series(phi, phi.stages()).refined(full_k);

  // All residual patterns inside one cylinder are equally likely.
  std::uint64_t extensions = std::uint64_t{1} << (full_k - k);
  Rational point_mass = inv_pow2(static_cast<unsigned long>(full_k));
  Rational total_deviation(0);
  std::vector<std::pair<std::uint64_t, Rational>> witness_values;
  witness_values.reserve(std::uint64_t{1} << k);
  std::vector<Rational> values;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
    values.clear();
    for (std::uint64_t t = 0; t < extensions; ++t)
      values.push_back(f.value_at(c * extensions + t));
    std::sort(values.begin(), values.end());

    // Heaviest run of values inside a closed window of width 2*delta.
    std::uint64_t best = 0;
    Rational best_start = values.front();
    size_t hi = 0;
    for (size_t lo = 0; lo < values.size(); ++lo) {
      while (hi < values.size() && values[hi] - values[lo] <= 2 * delta) ++hi;
      if (hi - lo > best) {
        best = hi - lo;
        best_start = values[lo];
      }
    }
    total_deviation += point_mass * Rational(static_cast<unsigned long>(extensions - best));
    witness_values.emplace_back(c, best_start + delta);
  }
  return {std::move(total_deviation),
          SimpleFunction::from_sparse(k, Rational(0), witness_values)};
}

RangeDecodeResult range_decode(const PhiMap& phi, int n, unsigned long m) {
  return range_decode(phi, n, m, inv_pow4(m + 1));
}

RangeDecodeResult range_decode(const PhiMap& phi, int n, unsigned long m,
                               const Rational& delta) {
  if (n < 0 || n > phi.stages())
    throw std::invalid_argument("range_decode: n out of range");
  RangeDecodeResult r;
  r.delta = delta;
  for (int j = n + 1; j <= phi.stages(); ++j)
    if (phi.at(j) < m) r.premise_offenders.push_back(j);
  r.premise_ok = r.premise_offenders.empty();
  auto dev = min_deviation_coinflip(phi, n, delta);
  r.deviation = dev.deviation;
  r.witness = std::move(dev.witness);
  r.passes = r.deviation < make_rational(1, 2);
  r.enumerated_by_n = phi.enumerated_by(m, n);
  r.in_range = phi.in_range(m);
  return r;
}

}  // namespace cantor
