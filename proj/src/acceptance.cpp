#include "cantor/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "cantor/approx.hpp"
#include "cantor/cli.hpp"
#include "cantor/ergodic.hpp"
#include "cantor/machine.hpp"
#include "cantor/measure.hpp"
#include "cantor/rademacher.hpp"
#include "cantor/rational.hpp"
#include "cantor/reduction.hpp"

namespace cantor {

namespace {

struct Check {
  bool ok = true;
  long count = 0;
  std::string first_failure;

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first_failure = describe();
    }
  }
  void expect(bool cond, const std::string& what) {
    expect(cond, [&] { return what; });
  }
};

Word random_word(std::mt19937& rng, int length) {
  std::string bits(static_cast<size_t>(length), '0');
  for (auto& c : bits)
    if (rng() & 1u) c = '1';
  return Word(bits);
}

// ---- 1. closed form vs enumeration --------------------------------------

CriterionResult criterion_closed_form() {
  Check check;
  for (std::uint64_t s = 2; s <= 40; ++s) {
    auto m = support_mu_e(HaltingStatus::halted_at(s));
    for (int k = 1; static_cast<std::uint64_t>(k) < s; ++k) {
      auto compare = [&](const Word& sigma) {
        check.expect(mu_e_closed_form(s, sigma) == m.cylinder_mass(sigma), [&] {
          return "s=" + std::to_string(s) + " sigma=" + sigma.str();
        });
      };
      if (k <= 8) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i)
          compare(Word::from_index(i, k));
      } else {
        std::mt19937 rng(static_cast<unsigned>(1000 * s + static_cast<std::uint64_t>(k)));
        for (int t = 0; t < 200; ++t) compare(random_word(rng, k));
      }
    }
  }
  return {1, "closed-form cylinder masses match atom enumeration", check.ok,
          std::to_string(check.count) + " cylinders" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 2. measure axioms ---------------------------------------------------

Catalog make_catalog(const std::vector<HaltingStatus>& statuses) {
  Catalog c;
  for (const auto& st : statuses) {
    CatalogEntry entry;
    if (st.halts)
      entry.machine = ClockMachine{st.steps};
    else
      entry.machine = LoopMachine{};
    entry.truth = st;
    c.entries.push_back(std::move(entry));
  }
  return c;
}

std::vector<Catalog> fixture_catalogs() {
  auto h = [](std::uint64_t s) { return HaltingStatus::halted_at(s); };
  auto n = [] { return HaltingStatus::never(); };
  return {
      make_catalog({n()}),
      make_catalog({h(1)}),
      make_catalog({n(), h(3)}),
      make_catalog({h(2), h(5), n()}),
      make_catalog({h(7), n(), h(1), h(4)}),
  };
}

CriterionResult criterion_measure_axioms() {
  Check check;
  std::vector<std::pair<std::string, FiniteSupportMeasure>> measures;
  measures.emplace_back("never", support_mu_e(HaltingStatus::never()));
  for (std::uint64_t s = 1; s <= 20; ++s)
    measures.emplace_back("halted_at(" + std::to_string(s) + ")",
                          support_mu_e(HaltingStatus::halted_at(s)));
  int c = 0;
  for (const auto& catalog : fixture_catalogs())
    measures.emplace_back("mixture#" + std::to_string(c++),
                          exact_mixture_measure(catalog));

  for (const auto& [name, m] : measures) {
    check.expect(m.cylinder_mass(Word()) == 1, name + ": total mass");
    for (int k = 0; k <= 8; ++k) {
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
        Word sigma = Word::from_index(i, k);
        check.expect(m.cylinder_mass(sigma) == m.cylinder_mass(sigma.appended(0)) +
                                                   m.cylinder_mass(sigma.appended(1)),
                     name + ": additivity at " + sigma.str());
      }
    }
    check.expect(check_shift_invariance(m, 8), name + ": shift invariance");
  }
  return {2, "measure axioms and shift invariance", check.ok,
          std::to_string(check.count) + " checks over " +
              std::to_string(measures.size()) + " measures" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 3. oracle soundness -------------------------------------------------

CriterionResult criterion_oracle_soundness() {
  Check check;
  std::vector<Rational> epsilons = {make_rational(1, 4), make_rational(1, 16),
                                    make_rational(1, 256)};
  std::vector<std::pair<MachineRef, std::function<Rational(const Word&)>>> machines;
  for (std::uint64_t s = 1; s <= 40; ++s) {
    auto m = std::make_shared<FiniteSupportMeasure>(
        support_mu_e(HaltingStatus::halted_at(s)));
    machines.emplace_back(ClockMachine{s},
                          [m](const Word& w) { return m->cylinder_mass(w); });
  }
  machines.emplace_back(LoopMachine{},
                        [](const Word& w) { return mu_never_cylinder(w); });

  for (const auto& [machine, truth] : machines) {
    for (int k = 0; k <= 8; ++k) {
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
        Word sigma = Word::from_index(i, k);
        Rational true_value = truth(sigma);
        for (const auto& eps : epsilons) {
          auto interval = mu_e_eval(machine, sigma, eps);
          check.expect(interval.contains(true_value) && interval.width() <= eps, [&] {
            return machine_kind(machine) + " sigma=" + sigma.str() +
                   " eps=" + to_fraction_string(eps);
          });
        }
      }
    }
  }

  // The step-budget shortcut: a distant halting time is never reached.
  std::uint64_t budget = mu_e_simulation_budget(1, make_rational(1, 2));
  check.expect(budget < 1000, "shortcut budget must stay below the halting time");
  auto far = mu_e_eval(ClockMachine{1000}, Word("1"), make_rational(1, 2));
  check.expect(far.contains(make_rational(1, 2)) && far.width() <= make_rational(1, 2),
               "clock(1000) enclosure");
  return {3, "certified mu_e evaluation is sound and O(k/eps)-bounded", check.ok,
          std::to_string(check.count) + " evaluations" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 4. ergodic limits and the slow-convergence profile -------------------

Word run_word(int ones, int zeros) {
  std::string bits;
  bits.append(static_cast<size_t>(ones), '1');
  bits.append(static_cast<size_t>(zeros), '0');
  return Word(bits);
}

CriterionResult criterion_ergodic() {
  Check check;
  Rational quarter = make_rational(1, 4), three_quarters = make_rational(3, 4);
  for (int s = 1; s <= 20; ++s) {
    auto m = support_mu_e(HaltingStatus::halted_at(static_cast<std::uint64_t>(s)));
    auto f = limit_function(m);
    for (const auto& p : cyclic_shifts(run_word(s, 3 * s)))
      check.expect(f.at(p) == quarter, "limit 1/4 at s=" + std::to_string(s));
    for (const auto& p : cyclic_shifts(run_word(3 * s, s)))
      check.expect(f.at(p) == three_quarters, "limit 3/4 at s=" + std::to_string(s));

    auto series = l1_error_series(m, 500);
    for (std::uint64_t n = 1; n <= 500; ++n)
      check.expect(series[n - 1] <= make_rational(4 * s, static_cast<long>(n)),
                   "Cesaro bound s=" + std::to_string(s));
  }

  // Minimal n with l1 error < 1/8 grows with the halting time.
  Rational eighth = make_rational(1, 8);
  std::uint64_t previous = 0;
  for (int s = 4; s <= 40; ++s) {
    auto m = support_mu_e(HaltingStatus::halted_at(static_cast<std::uint64_t>(s)));
    auto series = l1_error_series(m, static_cast<std::uint64_t>(16 * s));
    std::uint64_t n_min = 0;
    for (std::uint64_t n = 1; n <= series.size(); ++n) {
      if (series[n - 1] < eighth) {
        n_min = n;
        break;
      }
    }
    check.expect(n_min > 0, "threshold reached, s=" + std::to_string(s));
    check.expect(2 * n_min >= static_cast<std::uint64_t>(s),
                 "n_min >= s/2, s=" + std::to_string(s));
    check.expect(n_min >= previous, "n_min nondecreasing, s=" + std::to_string(s));
    previous = n_min;
  }
  return {4, "ergodic limits 1/4 and 3/4; convergence slows with halting time",
          check.ok,
          std::to_string(check.count) + " checks" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 5. deviation profile -------------------------------------------------

// Independent exhaustive search: per cylinder, try every candidate value
// atom_value and atom_value +- delta and keep the best coverage.
Rational exhaustive_min_deviation(const FiniteSupportMeasure& m, const LimitFunction& f,
                                  int k, const Rational& delta) {
  std::map<std::uint64_t, std::vector<std::pair<Rational, Rational>>> buckets;
  for (const auto& [point, mass] : m.atoms())
    buckets[point.prefix(k).index()].emplace_back(f.at(point), mass);
  Rational total(0);
  for (const auto& [index, bucket] : buckets) {
    std::vector<Rational> candidates;
    for (const auto& [value, mass] : bucket) {
      candidates.push_back(value - delta);
      candidates.push_back(value);
      candidates.push_back(value + delta);
    }
    Rational best(-1);
    for (const auto& g : candidates) {
      Rational covered(0);
      for (const auto& [value, mass] : bucket)
        if (abs(value - g) <= delta) covered += mass;
      if (covered > best) best = covered;
    }
    Rational cylinder_mass(0);
    for (const auto& [value, mass] : bucket) cylinder_mass += mass;
    total += cylinder_mass - best;
  }
  return total;
}

CriterionResult criterion_deviation_profile() {
  Check check;
  Rational eighth = make_rational(1, 8), quarter = make_rational(1, 4);
  bool k_low_is_quarter = true;
  for (std::uint64_t s = 3; s <= 12; ++s) {
    auto m = support_mu_e(HaltingStatus::halted_at(s));
    auto f = limit_function(m);
    for (int k = 1; static_cast<std::uint64_t>(k) <= 2 * s + 2; ++k) {
      auto result = min_deviation(m, f, k, eighth);
      Rational closed = deviation_closed_form(s, k, eighth);
      check.expect(result.deviation == closed, [&] {
        return "piecewise form s=" + std::to_string(s) + " k=" + std::to_string(k);
      });
      check.expect(result.deviation == exhaustive_min_deviation(m, f, k, eighth), [&] {
        return "exhaustive cross-check s=" + std::to_string(s) + " k=" + std::to_string(k);
      });
      // The witness must attain the reported deviation exactly.
      Rational attained(0);
      for (const auto& [point, mass] : m.atoms())
        if (abs(f.at(point) - result.witness.eval(point)) > eighth) attained += mass;
      check.expect(attained == result.deviation, [&] {
        return "witness validity s=" + std::to_string(s) + " k=" + std::to_string(k);
      });
      if (static_cast<std::uint64_t>(k) <= s + 1 && result.deviation != quarter)
        k_low_is_quarter = false;
    }
  }
  check.expect(k_low_is_quarter, "D(k) = 1/4 on all k <= s+1");
  return {5, "optimal deviation profile: exactly 1/4 up to k = s+1, then linear to 0",
          check.ok,
          std::to_string(check.count) + " checks; low-k value is exactly 1/4: " +
              (k_low_is_quarter ? "yes" : "NO") +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 6. halting reduction end-to-end --------------------------------------

CriterionResult criterion_halting_reduction() {
  Check check;
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t size = 1 + rng() % 8;
    std::vector<HaltingStatus> statuses;
    for (std::size_t i = 0; i < size; ++i) {
      if (rng() % 3 == 0)
        statuses.push_back(HaltingStatus::never());
      else
        statuses.push_back(HaltingStatus::halted_at(1 + rng() % 30));
    }
    Catalog catalog = make_catalog(statuses);
    BoundOracle oracle = cheating_bound_oracle(catalog);
    BoundOracle padded = [&oracle](const Rational& eps) { return oracle(eps) + 7; };

    for (std::size_t e = 0; e < catalog.size(); ++e) {
      for (const auto* o : {&oracle, &padded}) {
        Verdict v = decide_halting(*o, catalog, e);
        check.expect(v.matches_truth(), [&] {
          return "trial " + std::to_string(trial) + " e=" + std::to_string(e);
        });
        if (statuses[e].halts) {
          // The derived halting-time cutoff: s <= (2k - 2)/3.
          auto s = static_cast<long long>(statuses[e].steps);
          check.expect(3 * s <= 2 * static_cast<long long>(v.k) - 2, [&] {
            return "cutoff trial " + std::to_string(trial) + " e=" + std::to_string(e);
          });
        }
      }
    }
  }
  return {6, "halting decoded from complexity bounds on every randomized catalog",
          check.ok,
          std::to_string(check.count) + " verdicts" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 7. Rademacher range decoding ------------------------------------------

// Direct evaluation of the full series on a length-N word, no
// SimpleFunction machinery involved.
Rational series_value_direct(const PhiMap& phi, const Word& w) {
  Rational v(0);
  for (int i = 1; i <= phi.stages(); ++i) {
    Rational term = inv_pow4(phi.at(i));
    v += (w.bit(i - 1) == 0) ? term : -term;
  }
  return v;
}

// Brute-force deviation minimum at complexity k: candidates value +- delta
// over the exact per-cylinder value multisets.
Rational brute_min_deviation_coinflip(const PhiMap& phi, int k, const Rational& delta) {
  int big = std::max(k, phi.stages());
  std::uint64_t extensions = std::uint64_t{1} << (big - k);
  Rational point_mass = inv_pow2(static_cast<unsigned long>(big));
  Rational total(0);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
    std::vector<Rational> values;
    for (std::uint64_t t = 0; t < extensions; ++t) {
      Word w = Word::from_index(c * extensions + t, big);
      values.push_back(series_value_direct(phi, w.prefix(phi.stages())));
    }
    std::vector<Rational> candidates;
    for (const auto& v : values) {
      candidates.push_back(v - delta);
      candidates.push_back(v);
      candidates.push_back(v + delta);
    }
    std::uint64_t best = 0;
    for (const auto& g : candidates) {
      std::uint64_t covered = 0;
      for (const auto& v : values)
        if (abs(v - g) <= delta) ++covered;
      best = std::max(best, covered);
    }
    total += point_mass * Rational(static_cast<unsigned long>(extensions - best));
  }
  return total;
}

CriterionResult criterion_rademacher() {
  Check check;
  std::mt19937 rng(777001);
  long kept = 0, filtered = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int stages = 1 + static_cast<int>(rng() % 6);
    std::vector<unsigned long> values;
    while (static_cast<int>(values.size()) < stages) {
      unsigned long v = rng() % 11;
      if (std::find(values.begin(), values.end(), v) == values.end())
        values.push_back(v);
    }
    PhiMap phi(values);

    for (int n = 0; n <= phi.stages(); ++n) {
      // Exact tail sup-norm, against a direct max over all words.
      SimpleFunction full = partial_series(phi, phi.stages());
      SimpleFunction partial = partial_series(phi, n).refined(phi.stages());
      Rational sup(0);
      for (std::uint64_t i = 0; i < full.table_size(); ++i)
        sup = std::max(sup, abs(full.value_at(i) - partial.value_at(i)));
      Rational tail_sum(0);
      for (int j = n + 1; j <= phi.stages(); ++j) tail_sum += inv_pow4(phi.at(j));
      check.expect(sup == tail_sum, "tail sup-norm, trial " + std::to_string(trial));

      for (unsigned long m = 0; m <= 10; ++m) {
        auto tb = tail_bound(phi, n, m);
        check.expect(tb.exact_sup_norm == tail_sum, "tail_bound exactness");
        if (tb.applicable)
          check.expect(tb.exact_sup_norm < inv_pow4(m) * make_rational(4, 3) &&
                           tb.stated_bound_holds,
                       "tail envelope, trial " + std::to_string(trial));

        auto r = range_decode(phi, n, m);
        if (!r.premise_ok) {
          ++filtered;
          continue;
        }
        ++kept;
        bool expected = phi.enumerated_by(m, n) || !phi.in_range(m);
        check.expect(r.passes == expected, [&] {
          return "decode trial " + std::to_string(trial) + " n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
        });
        check.expect(r.deviation == brute_min_deviation_coinflip(phi, n, r.delta), [&] {
          return "brute-force deviation, trial " + std::to_string(trial);
        });
      }
    }
  }
  return {7, "range decoding matches enumeration membership on all admissible cases",
          check.ok,
          std::to_string(kept) + " decoded, " + std::to_string(filtered) +
              " filtered by the separation premise" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

// ---- 8. reproducibility -----------------------------------------------------

CriterionResult criterion_reproducibility() {
  Check check;
  std::vector<std::vector<std::string>> invocations = {
      {"mu-eval", "--machine", "clock:5", "--sigma", "10", "--eps", "1/100"},
      {"mu-eval", "--json", "--machine", "loop", "--sigma", "01", "--eps", "1/10"},
      {"ergodic", "--point", "(1^5 0^15)*@0", "--n", "20"},
      {"ergodic", "--measure", "clock:3", "--series", "30"},
      {"best-approx", "--json", "--measure", "clock:5", "--k", "2"},
      {"rademacher", "--phi", "3,0,5", "--n", "2", "--m", "5"},
  };
  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    int code1 = dispatch(args, out1, err1);
    int code2 = dispatch(args, out2, err2);
    check.expect(code1 == 0, "exit code for " + args[0]);
    check.expect(code1 == code2 && out1.str() == out2.str() && err1.str() == err2.str(),
                 "byte-identical rerun of " + args[0]);
    check.expect(!out1.str().empty(), "output present for " + args[0]);
  }
  return {8, "identical invocations produce byte-identical output", check.ok,
          std::to_string(invocations.size()) + " command pairs" +
              (check.ok ? "" : "; first failure: " + check.first_failure)};
}

}  // namespace

std::vector<CriterionResult> run_selfcheck_collect(std::ostream& out) {
  std::vector<CriterionResult (*)()> suites = {
      criterion_closed_form,      criterion_measure_axioms,
      criterion_oracle_soundness, criterion_ergodic,
      criterion_deviation_profile, criterion_halting_reduction,
      criterion_rademacher,       criterion_reproducibility,
  };
  std::vector<CriterionResult> results;
  for (auto* suite : suites) {
    CriterionResult r = suite();
    out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name
        << " (" << r.detail << ")\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

bool run_selfcheck(std::ostream& out) {
  auto results = run_selfcheck_collect(out);
  bool all = std::all_of(results.begin(), results.end(),
                         [](const CriterionResult& r) { return r.passed; });
  out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all;
}

}  // namespace cantor
