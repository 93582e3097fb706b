#include "cantor/reduction.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

#include "cantor/ergodic.hpp"

namespace cantor {

Rational epsilon_for(std::size_t e) {
  return inv_pow2(static_cast<unsigned long>(e) + 7);  // 2^-(e+1) / 64
}

Verdict decide_halting(const BoundOracle& oracle, const Catalog& catalog,
                       std::size_t e) {
  if (e >= catalog.size())
    throw std::out_of_range("decide_halting: index beyond catalog");
  Verdict v;
  v.e = e;
  v.epsilon = epsilon_for(e);
  v.k = oracle(v.epsilon);
  if (v.k < 0) throw std::invalid_argument("decide_halting: oracle returned k < 0");
  v.budget = static_cast<std::uint64_t>(v.k);
  v.halts = run(catalog.at(e).machine, v.budget).halted;
  v.ground_truth = catalog.at(e).truth;
  return v;
}

BoundOracle cheating_bound_oracle(const Catalog& catalog) {
  struct State {
    FiniteSupportMeasure measure;
    LimitFunction f;
    int k_cap;
    std::vector<Rational> profile;  // optimal L1 distance per k, filled lazily
  };
  auto exact = exact_mixture_measure(catalog);
  auto state = std::make_shared<State>(
      State{exact, limit_function(exact), 2 * exact.max_period_length(), {}});

  return [state](const Rational& eps) -> int {
    if (eps <= 0) throw std::invalid_argument("bound oracle: eps must be > 0");
    for (int k = 0; k <= state->k_cap; ++k) {
      if (k == static_cast<int>(state->profile.size()))
        state->profile.push_back(optimal_l1_distance(state->measure, state->f, k));
      if (state->profile[static_cast<size_t>(k)] < eps) return k;
    }
    throw std::logic_error("bound oracle: no witness up to the separation depth");
  };
}

}  // namespace cantor
