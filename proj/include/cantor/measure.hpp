#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cantor/machine.hpp"
#include "cantor/periodic_point.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

// Probability measure supported on finitely many periodic points.
// Atoms are canonical; repeated points aggregate their mass. Total mass
// must be exactly 1.
class FiniteSupportMeasure {
 public:
  explicit FiniteSupportMeasure(
      const std::vector<std::pair<PeriodicPoint, Rational>>& atoms);

  const std::map<PeriodicPoint, Rational>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  int max_period_length() const;

  // Exact mass of the cylinder [sigma], by atom enumeration. This is
  // the brute-force reference every closed form is checked against.
  Rational cylinder_mass(const Word& sigma) const;

 private:
  std::map<PeriodicPoint, Rational> atoms_;
};

// The per-machine measure for a known halting status.
//
// Halting in s steps: mass 1/(8s) on each of the 4s shifts of
// (1^s 0^{3s})* and each of the 4s shifts of (1^{3s} 0^s)*.
// Never halting: mass 1/2 on 0* and 1/2 on 1*.
FiniteSupportMeasure support_mu_e(const HaltingStatus& status);

// Closed-form cylinder mass of the halting-in-s-steps measure, valid
// for length(sigma) < s:
//   constant sigma:           1/2 - (k-1)/(4s)
//   single alternation:       1/(4s)
//   two or more alternations: 0
// The empty word returns 1 (total mass). Lengths >= s are rejected;
// use cylinder_mass there.
Rational mu_e_closed_form(std::uint64_t s, const Word& sigma);

// Cylinder mass under the never-halting measure.
Rational mu_never_cylinder(const Word& sigma);

// Cylinder mass under the halting-in-s-steps measure, for any sigma,
// by counting matching rotations of the two period words directly.
// Agrees with support_mu_e(halted_at(s)).cylinder_mass(sigma) without
// building the measure.
Rational mu_halted_cylinder(std::uint64_t s, const Word& sigma);

// Step budget used by mu_e_eval: max(k+1, ceil(k / (4 eps))).
// If the machine has not halted after this many steps, every halting
// time s it could still have differs from the never-halting values by
// less than eps on length-k cylinders.
std::uint64_t mu_e_simulation_budget(int sigma_length, const Rational& eps);

// Certified evaluation of mu_e([sigma]) to width <= eps: simulate, and
// either pin the measure exactly (machine halted) or enclose the value
// around the never-halting case.
RationalInterval mu_e_eval(const MachineRef& machine, const Word& sigma,
                           const Rational& eps);

enum class TailMode {
  Unknown,  // machines beyond the catalog contribute [0, 2^-|catalog|]
  Never,    // machines beyond the catalog are taken as never halting
};

// Certified evaluation of the mixture sum_e 2^-(e+1) mu_e over the
// catalog, to width <= eps. With TailMode::Unknown the tail weight
// 2^-|catalog| must be < eps or the request is rejected.
RationalInterval mixture_eval(const Catalog& catalog, const Word& sigma,
                              const Rational& eps, TailMode tail);

// Exact mixture as a finite-support measure; needs every entry
// annotated. The tail beyond the catalog is folded in as never-halting.
FiniteSupportMeasure exact_mixture_measure(const Catalog& catalog);

// Mixture weight 2^-(e+1).
Rational mixture_weight(std::size_t e);

// True iff m([sigma]) = m([0 sigma]) + m([1 sigma]) for every sigma of
// length <= max_k, i.e. the measure is invariant under the shift as far
// as cylinders of that depth can see.
bool check_shift_invariance(const FiniteSupportMeasure& m, int max_k);

}  // namespace cantor
