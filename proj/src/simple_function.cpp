#include "cantor/simple_function.hpp"

#include <stdexcept>

namespace cantor {

namespace {

void check_complexity(int k) {
  if (k < 0 || k > SimpleFunction::kMaxComplexity)
    throw std::invalid_argument("simple function: complexity out of range");
}

}  // namespace

SimpleFunction::SimpleFunction() : complexity_(0), pool_{Rational(0)}, table_{0} {}

SimpleFunction::SimpleFunction(int complexity, const std::vector<Rational>& values) {
  check_complexity(complexity);
  complexity_ = complexity;
  if (values.size() != (std::uint64_t{1} << complexity))
    throw std::invalid_argument("simple function: table size must be 2^k");
  table_.resize(values.size());
  std::map<Rational, std::uint32_t> seen;
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = seen.try_emplace(values[i], static_cast<std::uint32_t>(pool_.size()));
    if (inserted) pool_.push_back(values[i]);
    table_[i] = it->second;
  }
}

SimpleFunction SimpleFunction::constant(const Rational& v) {
  SimpleFunction f;
  f.pool_ = {v};
  return f;
}

SimpleFunction SimpleFunction::indicator(const Word& sigma) {
  return from_sparse(sigma.length(), Rational(0), {{sigma.index(), Rational(1)}});
}

SimpleFunction SimpleFunction::from_sparse(
    int complexity, const Rational& fill,
    const std::vector<std::pair<std::uint64_t, Rational>>& overrides) {
  check_complexity(complexity);
  SimpleFunction f;
  f.complexity_ = complexity;
  f.pool_ = {fill};
  f.table_.assign(std::uint64_t{1} << complexity, 0);
  std::map<Rational, std::uint32_t> seen{{fill, 0}};
  for (const auto& [index, value] : overrides) {
    if (index >= f.table_.size())
      throw std::invalid_argument("simple function: override index out of range");
    auto [it, inserted] = seen.try_emplace(value, static_cast<std::uint32_t>(f.pool_.size()));
    if (inserted) f.pool_.push_back(value);
    f.table_[index] = it->second;
  }
  return f;
}

SimpleFunction SimpleFunction::rademacher(int k) {
  if (k < 1) throw std::invalid_argument("rademacher: k must be >= 1");
  check_complexity(k);
  SimpleFunction f;
  f.complexity_ = k;
  f.pool_ = {Rational(1), Rational(-1)};
  f.table_.resize(std::uint64_t{1} << k);
  // Last bit of the cylinder word is the low bit of its index.
  for (std::uint64_t i = 0; i < f.table_.size(); ++i)
    f.table_[i] = static_cast<std::uint32_t>(i & 1);
  return f;
}

const Rational& SimpleFunction::value_on(const Word& sigma) const {
  if (sigma.length() != complexity_)
    throw std::invalid_argument("simple function: word length mismatch");
  return value_at(sigma.index());
}

Rational SimpleFunction::eval(const PeriodicPoint& p) const {
  return value_at(p.prefix(complexity_).index());
}

SimpleFunction SimpleFunction::refined(int k2) const {
  if (k2 < complexity_)
    throw std::invalid_argument("simple function: refinement must not lower complexity");
  check_complexity(k2);
  SimpleFunction f;
  f.complexity_ = k2;
  f.pool_ = pool_;
  f.table_.resize(std::uint64_t{1} << k2);
  int extra = k2 - complexity_;
  for (std::uint64_t i = 0; i < f.table_.size(); ++i) f.table_[i] = table_[i >> extra];
  return f;
}

nlohmann::json SimpleFunction::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (std::uint64_t i = 0; i < table_size(); ++i)
    values.push_back(to_fraction_string(value_at(i)));
  return nlohmann::json{{"k", complexity_}, {"values", std::move(values)}};
}

SimpleFunction SimpleFunction::from_json(const nlohmann::json& j) {
  int k = j.at("k").get<int>();
  std::vector<Rational> values;
  for (const auto& v : j.at("values")) values.push_back(parse_rational(v.get<std::string>()));
  return SimpleFunction(k, values);
}

bool SimpleFunction::operator==(const SimpleFunction& other) const {
  if (complexity_ != other.complexity_) return false;
  for (std::uint64_t i = 0; i < table_size(); ++i)
    if (value_at(i) != other.value_at(i)) return false;
  return true;
}

SimpleFunction linear_combination(
    std::span<const std::pair<Rational, SimpleFunction>> terms) {
  if (terms.empty())
    throw std::invalid_argument("linear_combination: empty term list");
  int k = 0;
  for (const auto& [c, g] : terms) k = std::max(k, g.complexity());
  std::vector<Rational> values(std::uint64_t{1} << k, Rational(0));
  for (const auto& [c, g] : terms) {
    int extra = k - g.complexity();
    for (std::uint64_t i = 0; i < values.size(); ++i)
      values[i] += c * g.value_at(i >> extra);
  }
  return SimpleFunction(k, values);
}

}  // namespace cantor
