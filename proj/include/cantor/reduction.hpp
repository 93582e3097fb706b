#pragma once

#include <functional>
#include <optional>

#include "cantor/approx.hpp"
#include "cantor/machine.hpp"
#include "cantor/measure.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// A complexity bound for the limit function f in L1(mu): bound(eps) is
// a k such that some B_k simple function approximates f to within eps.
// Nothing else is assumed about it; any such function works.
using BoundOracle = std::function<int(const Rational& eps)>;

// Precision requested from the oracle for machine index e. With
// ||f - g||_1 < 2^-(e+1)/64, Markov's inequality and the factor
// mu >= 2^-(e+1) mu_e give mu_e({|f - g| > 1/8}) < 1/8, which the
// deviation profile turns into a halting-time cutoff below k.
Rational epsilon_for(std::size_t e);

struct Verdict {
  std::size_t e = 0;
  Rational epsilon;
  int k = 0;                 // oracle's bound at epsilon
  std::uint64_t budget = 0;  // simulation steps actually allowed (= k)
  bool halts = false;        // decision
  std::optional<HaltingStatus> ground_truth;

  bool matches_truth() const {
    return ground_truth && ground_truth->halts == halts;
  }
};

// The decoder: ask the oracle for k at epsilon_for(e), run machine e
// for k steps, and report "halts" exactly when it halted. For any valid
// oracle, a machine halting in s steps forces s <= (2k-2)/3 < k, so the
// budget is always enough.
Verdict decide_halting(const BoundOracle& oracle, const Catalog& catalog,
                       std::size_t e);

// A genuine bound oracle computed from the answers: the minimal-k
// profile of optimal L1 approximations to f under the exact mixture
// measure of a fully annotated catalog. Useful as the validation
// stand-in for the uncomputable "real" oracle.
BoundOracle cheating_bound_oracle(const Catalog& catalog);

}  // namespace cantor
