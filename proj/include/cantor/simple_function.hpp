#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cantor/periodic_point.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

// A B_k-measurable rational-valued function: one value per length-k
// cylinder, indexed lexicographically (0 < 1). Immutable once built.
//
// The table is dense (2^k entries) but entries are indices into a pool
// of distinct values, so functions that take few values stay small even
// at large k.
class SimpleFunction {
 public:
  static constexpr int kMaxComplexity = 30;

  SimpleFunction();  // constant 0 with complexity 0
  SimpleFunction(int complexity, const std::vector<Rational>& values);

  static SimpleFunction constant(const Rational& v);
  // Indicator 1_[sigma] of a cylinder, complexity length(sigma).
  static SimpleFunction indicator(const Word& sigma);
  // All cylinders get `fill` except the listed (index, value) overrides.
  static SimpleFunction from_sparse(
      int complexity, const Rational& fill,
      const std::vector<std::pair<std::uint64_t, Rational>>& overrides);
  // The Rademacher function h_k, k >= 1: +1 on cylinders whose last bit
  // is 0 and -1 on last bit 1.
  static SimpleFunction rademacher(int k);

  int complexity() const { return complexity_; }
  std::uint64_t table_size() const { return std::uint64_t{1} << complexity_; }

  const Rational& value_at(std::uint64_t index) const { return pool_[table_[index]]; }
  const Rational& value_on(const Word& sigma) const;
  Rational eval(const PeriodicPoint& p) const;

  // Same function presented at complexity k2 >= complexity().
  SimpleFunction refined(int k2) const;

  nlohmann::json to_json() const;
  static SimpleFunction from_json(const nlohmann::json& j);

  bool operator==(const SimpleFunction& other) const;

 private:
  int complexity_ = 0;
  std::vector<Rational> pool_;
  std::vector<std::uint32_t> table_;  // 2^k entries into pool_
};

// Pointwise sum of coeff * function terms; complexity is the max of the
// inputs. The list must be nonempty.
SimpleFunction linear_combination(
    std::span<const std::pair<Rational, SimpleFunction>> terms);

}  // namespace cantor
