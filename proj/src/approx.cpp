#include "cantor/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

namespace {

struct ValueMass {
  Rational value;
  Rational mass;
};

// Atoms grouped by their length-k prefix, values sorted and merged.
// Keyed by the prefix word itself so that depths beyond 63 bits work.
std::map<Word, std::vector<ValueMass>> bucket_by_cylinder(
    const FiniteSupportMeasure& m, const LimitFunction& f, int k) {
  std::map<Word, std::map<Rational, Rational>> grouped;
  for (const auto& [point, mass] : m.atoms()) {
    auto it = f.find(point);
    if (it == f.end())
      throw std::invalid_argument("approx: limit function missing a measure atom");
    grouped[point.prefix(k)][it->second] += mass;
  }
  std::map<Word, std::vector<ValueMass>> buckets;
  for (auto& [prefix, values] : grouped) {
    auto& bucket = buckets[prefix];
    bucket.reserve(values.size());
    for (auto& [value, mass] : values) bucket.push_back({value, mass});
  }
  return buckets;
}

// Heaviest subset of values coverable by one closed window of width
// 2*delta, anchored at a value; returns (covered mass, window start).
std::pair<Rational, Rational> best_window(const std::vector<ValueMass>& bucket,
                                          const Rational& delta) {
  Rational best_mass(-1), best_start(0);
  const Rational window = 2 * delta;
  size_t hi = 0;
  Rational running(0);
  // hi never falls behind lo: the window always admits the value itself.
  for (size_t lo = 0; lo < bucket.size(); ++lo) {
    while (hi < bucket.size() && bucket[hi].value - bucket[lo].value <= window) {
      running += bucket[hi].mass;
      ++hi;
    }
    if (running > best_mass) {
      best_mass = running;
      best_start = bucket[lo].value;
    }
    running -= bucket[lo].mass;
  }
  return {best_mass, best_start};
}

Rational clamp_unit(const Rational& v) {
  if (v < 0) return Rational(0);
  if (v > 1) return Rational(1);
  return v;
}

}  // namespace

DeviationResult min_deviation(const FiniteSupportMeasure& m, const LimitFunction& f,
                              int k, const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("min_deviation: delta must be > 0");
  auto buckets = bucket_by_cylinder(m, f, k);
  Rational total_deviation(0);
  std::vector<std::pair<std::uint64_t, Rational>> witness_values;
  witness_values.reserve(buckets.size());
  for (const auto& [prefix, bucket] : buckets) {
    auto [covered, start] = best_window(bucket, delta);
    Rational cylinder_mass(0);
    for (const auto& vm : bucket) cylinder_mass += vm.mass;
    total_deviation += cylinder_mass - covered;
    witness_values.emplace_back(prefix.index(), clamp_unit(start + delta));
  }
  return {std::move(total_deviation),
          SimpleFunction::from_sparse(k, Rational(0), witness_values)};
}

Rational deviation_closed_form(std::uint64_t s, int k, const Rational& delta) {
  if (s < 1 || k < 1)
    throw std::invalid_argument("deviation_closed_form: need s >= 1 and k >= 1");
  if (delta <= 0 || delta >= make_rational(1, 4))
    throw std::invalid_argument("deviation_closed_form: stated only for 0 < delta < 1/4");
  auto ks = static_cast<std::uint64_t>(k);
  if (ks <= s + 1) return make_rational(1, 4);
  if (ks <= 2 * s + 1)
    return make_rational(static_cast<long>(2 * s - ks + 1), static_cast<long>(4 * s));
  return Rational(0);
}

SimpleFunction conditional_expectation(const FiniteSupportMeasure& m,
                                       const LimitFunction& f, int k) {
  auto buckets = bucket_by_cylinder(m, f, k);
  std::vector<std::pair<std::uint64_t, Rational>> values;
  values.reserve(buckets.size());
  for (const auto& [prefix, bucket] : buckets) {
    Rational mass(0), integral(0);
    for (const auto& vm : bucket) {
      mass += vm.mass;
      integral += vm.mass * vm.value;
    }
    values.emplace_back(prefix.index(), integral / mass);
  }
  return SimpleFunction::from_sparse(k, Rational(0), values);
}

Rational l1_distance(const FiniteSupportMeasure& m, const LimitFunction& f,
                     const SimpleFunction& g) {
  Rational total(0);
  for (const auto& [point, mass] : m.atoms()) {
    auto it = f.find(point);
    if (it == f.end())
      throw std::invalid_argument("approx: limit function missing a measure atom");
    total += mass * abs(it->second - g.eval(point));
  }
  return total;
}

namespace {

// Lower weighted median: least value whose cumulative mass reaches half.
Rational lower_median(const std::vector<ValueMass>& bucket) {
  Rational total(0);
  for (const auto& vm : bucket) total += vm.mass;
  Rational cum(0);
  for (const auto& vm : bucket) {
    cum += vm.mass;
    if (2 * cum >= total) return vm.value;
  }
  return bucket.back().value;
}

Rational bucket_l1_about(const std::vector<ValueMass>& bucket, const Rational& v) {
  Rational d(0);
  for (const auto& vm : bucket) d += vm.mass * abs(vm.value - v);
  return d;
}

}  // namespace

Rational optimal_l1_distance(const FiniteSupportMeasure& m, const LimitFunction& f,
                             int k) {
  Rational total(0);
  for (const auto& [prefix, bucket] : bucket_by_cylinder(m, f, k))
    total += bucket_l1_about(bucket, lower_median(bucket));
  return total;
}

SimpleFunction l1_median_witness(const FiniteSupportMeasure& m,
                                 const LimitFunction& f, int k) {
  std::vector<std::pair<std::uint64_t, Rational>> values;
  for (const auto& [prefix, bucket] : bucket_by_cylinder(m, f, k))
    values.emplace_back(prefix.index(), lower_median(bucket));
  return SimpleFunction::from_sparse(k, Rational(0), values);
}

ComplexityBound complexity_bound(const FiniteSupportMeasure& m,
                                 const LimitFunction& f, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("complexity_bound: eps must be > 0");
  // By Fine and Wilf, distinct periodic points differ within the sum of
  // their period lengths, so every cylinder at this depth holds a single
  // atom and the optimal distance is 0.
  int k_cap = 2 * m.max_period_length();
  for (int k = 0; k <= k_cap; ++k) {
    if (optimal_l1_distance(m, f, k) < eps)
      return {k, l1_median_witness(m, f, k)};
  }
  throw std::logic_error("complexity_bound: no witness up to the separation depth");
}

}  // namespace cantor
