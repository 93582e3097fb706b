#include "cantor/measure.hpp"

#include <stdexcept>
#include <string>

namespace cantor {

FiniteSupportMeasure::FiniteSupportMeasure(
    const std::vector<std::pair<PeriodicPoint, Rational>>& atoms) {
  Rational total(0);
  for (const auto& [point, mass] : atoms) {
    if (mass <= 0)
      throw std::invalid_argument("measure: atom masses must be positive");
    atoms_[point] += mass;
    total += mass;
  }
  if (total != 1)
    throw std::invalid_argument("measure: total mass must be exactly 1, got " +
                                to_fraction_string(total));
}

int FiniteSupportMeasure::max_period_length() const {
  int m = 0;
  for (const auto& [point, mass] : atoms_)
    m = std::max(m, point.period_length());
  return m;
}

Rational FiniteSupportMeasure::cylinder_mass(const Word& sigma) const {
  Rational total(0);
  for (const auto& [point, mass] : atoms_)
    if (point.in_cylinder(sigma)) total += mass;
  return total;
}

namespace {

Word run_word(int ones, int zeros) {
  std::string s;
  s.append(static_cast<size_t>(ones), '1');
  s.append(static_cast<size_t>(zeros), '0');
  return Word(s);
}

}  // namespace

FiniteSupportMeasure support_mu_e(const HaltingStatus& status) {
  if (!status.halts) {
    Rational half = make_rational(1, 2);
    return FiniteSupportMeasure(
        {{PeriodicPoint::zeros(), half}, {PeriodicPoint::ones(), half}});
  }
  if (status.steps < 1)
    throw std::invalid_argument("support_mu_e: halting time must be >= 1");
  auto s = static_cast<long>(status.steps);
  Rational mass = make_rational(1, 8 * s);
  std::vector<std::pair<PeriodicPoint, Rational>> atoms;
  atoms.reserve(static_cast<size_t>(8 * s));
  for (const auto& p : cyclic_shifts(run_word(static_cast<int>(s), static_cast<int>(3 * s))))
    atoms.emplace_back(p, mass);
  for (const auto& p : cyclic_shifts(run_word(static_cast<int>(3 * s), static_cast<int>(s))))
    atoms.emplace_back(p, mass);
  return FiniteSupportMeasure(atoms);
}

Rational mu_e_closed_form(std::uint64_t s, const Word& sigma) {
  if (s < 1) throw std::invalid_argument("mu_e_closed_form: s must be >= 1");
  long k = sigma.length();
  if (k == 0) return Rational(1);
  if (static_cast<std::uint64_t>(k) >= s)
    throw std::domain_error("mu_e_closed_form: only stated for length(sigma) < s");
  auto s_long = static_cast<long>(s);
  int alt = sigma.alternations();
  if (alt == 0) return make_rational(1, 2) - make_rational(k - 1, 4 * s_long);
  if (alt == 1) return make_rational(1, 4 * s_long);
  return Rational(0);
}

Rational mu_never_cylinder(const Word& sigma) {
  if (sigma.empty()) return Rational(1);
  return sigma.is_constant() ? make_rational(1, 2) : Rational(0);
}

namespace {

// Rotations j of w whose infinite repetition starts with sigma.
long matching_rotations(const Word& w, const Word& sigma) {
  long n = w.length(), count = 0;
  for (long j = 0; j < n; ++j) {
    bool match = true;
    for (int i = 0; i < sigma.length() && match; ++i)
      match = w.bit(static_cast<int>((j + i) % n)) == sigma.bit(i);
    if (match) ++count;
  }
  return count;
}

}  // namespace

Rational mu_halted_cylinder(std::uint64_t s, const Word& sigma) {
  if (s < 1) throw std::invalid_argument("mu_halted_cylinder: s must be >= 1");
  auto sl = static_cast<long>(s);
  long hits = matching_rotations(run_word(static_cast<int>(sl), static_cast<int>(3 * sl)), sigma) +
              matching_rotations(run_word(static_cast<int>(3 * sl), static_cast<int>(sl)), sigma);
  return make_rational(hits, 8 * sl);
}

std::uint64_t mu_e_simulation_budget(int sigma_length, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("mu_e_eval: eps must be > 0");
  std::uint64_t t = ceil_to_uint(Rational(sigma_length) / (4 * eps));
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(sigma_length) + 1, t);
}

RationalInterval mu_e_eval(const MachineRef& machine, const Word& sigma,
                           const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("mu_e_eval: eps must be > 0");
  if (sigma.empty()) return RationalInterval::point(Rational(1));

  std::uint64_t budget = mu_e_simulation_budget(sigma.length(), eps);
  RunResult result = run(machine, budget);
  if (result.halted)
    return RationalInterval::point(mu_halted_cylinder(result.steps, sigma));

  // Not halted within the budget: either it never halts (values exact)
  // or it halts at some s > budget, in which case the halting measure
  // sits within these one-sided enclosures of the never-halting values:
  //   constant sigma: 1/2 - (k-1)/(4s) in [1/2 - (k-1)/(4(budget+1)), 1/2]
  //   one alternation: 1/(4s)          in [0, 1/(4(budget+1))]
  //   else: exactly 0 either way.
  long k = sigma.length();
  Rational s_floor(static_cast<long>(budget) + 1);
  int alt = sigma.alternations();
  if (alt == 0) {
    Rational half = make_rational(1, 2);
    return {half - Rational(k - 1) / (4 * s_floor), half};
  }
  if (alt == 1) return {Rational(0), Rational(1) / (4 * s_floor)};
  return RationalInterval::point(Rational(0));
}

Rational mixture_weight(std::size_t e) {
  return inv_pow2(static_cast<unsigned long>(e) + 1);
}

RationalInterval mixture_eval(const Catalog& catalog, const Word& sigma,
                              const Rational& eps, TailMode tail) {
  if (eps <= 0) throw std::invalid_argument("mixture_eval: eps must be > 0");
  Rational tail_weight = inv_pow2(static_cast<unsigned long>(catalog.size()));

  RationalInterval tail_part;
  Rational term_eps = eps;
  if (tail == TailMode::Unknown) {
    if (tail_weight >= eps)
      throw std::runtime_error(
          "mixture_eval: tail weight " + to_fraction_string(tail_weight) +
          " leaves no precision budget within eps = " + to_fraction_string(eps) +
          "; extend the catalog or use the never-halting tail");
    tail_part = RationalInterval(Rational(0), tail_weight);
    term_eps = eps - tail_weight;
  } else {
    tail_part = RationalInterval::point(tail_weight * mu_never_cylinder(sigma));
  }

  // Each included term gets the full remaining budget; the weights sum
  // to less than 1, so the weighted widths stay under term_eps.
  RationalInterval acc = tail_part;
  for (std::size_t e = 0; e < catalog.size(); ++e)
    acc = acc + mu_e_eval(catalog.at(e).machine, sigma, term_eps).scaled(mixture_weight(e));
  return acc;
}

FiniteSupportMeasure exact_mixture_measure(const Catalog& catalog) {
  if (!catalog.fully_annotated())
    throw std::invalid_argument(
        "exact_mixture_measure: every catalog entry needs a ground-truth annotation");
  std::vector<std::pair<PeriodicPoint, Rational>> atoms;
  for (std::size_t e = 0; e < catalog.size(); ++e) {
    Rational w = mixture_weight(e);
    for (const auto& [point, mass] : support_mu_e(*catalog.at(e).truth).atoms())
      atoms.emplace_back(point, w * mass);
  }
  Rational tail_weight = inv_pow2(static_cast<unsigned long>(catalog.size()));
  atoms.emplace_back(PeriodicPoint::zeros(), tail_weight / 2);
  atoms.emplace_back(PeriodicPoint::ones(), tail_weight / 2);
  return FiniteSupportMeasure(atoms);
}

bool check_shift_invariance(const FiniteSupportMeasure& m, int max_k) {
  for (int k = 0; k <= max_k; ++k) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
      Word sigma = Word::from_index(i, k);
      Word zero_sigma = Word("0" + sigma.str());
      Word one_sigma = Word("1" + sigma.str());
      if (m.cylinder_mass(sigma) !=
          m.cylinder_mass(zero_sigma) + m.cylinder_mass(one_sigma))
        return false;
    }
  }
  return true;
}

}  // namespace cantor
