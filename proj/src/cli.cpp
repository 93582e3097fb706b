#include "cantor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "cantor/acceptance.hpp"
#include "cantor/approx.hpp"
#include "cantor/ergodic.hpp"
#include "cantor/machine.hpp"
#include "cantor/measure.hpp"
#include "cantor/rademacher.hpp"
#include "cantor/reduction.hpp"

namespace cantor {

namespace {

// Usage-level problem with a flag value; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string two_column(const Rational& r) {
  return to_fraction_string(r) + "  " + to_decimal_string(r, 12);
}

void print_interval(std::ostream& out, const RationalInterval& iv, bool json) {
  if (json) {
    nlohmann::json j{{"lo", to_fraction_string(iv.lo())},
                     {"hi", to_fraction_string(iv.hi())}};
    out << j.dump() << "\n";
  } else {
    out << "lo = " << two_column(iv.lo()) << "\n"
        << "hi = " << two_column(iv.hi()) << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog load_catalog_file(const std::string& path) {
  return load_catalog(read_file(path));
}

Rational parse_positive_rational(const std::string& text, const std::string& flag) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (r <= 0) throw UsageError(flag + " must be > 0");
  return r;
}

// "clock:<s>" | "loop" | "file:<path>#<index>"
MachineRef parse_machine_spec(const std::string& spec) {
  if (spec == "loop") return LoopMachine{};
  if (spec.starts_with("clock:")) {
    long s = 0;
    try {
      s = std::stol(spec.substr(6));
    } catch (const std::exception&) {
      throw UsageError("--machine: bad clock step count in '" + spec + "'");
    }
    if (s < 1) throw UsageError("--machine: clock needs s >= 1");
    return ClockMachine{static_cast<std::uint64_t>(s)};
  }
  if (spec.starts_with("file:")) {
    auto hash = spec.rfind('#');
    if (hash == std::string::npos || hash < 5)
      throw UsageError("--machine: expected file:<path>#<index>");
    std::string path = spec.substr(5, hash - 5);
    std::size_t index = 0;
    try {
      index = std::stoul(spec.substr(hash + 1));
    } catch (const std::exception&) {
      throw UsageError("--machine: bad catalog index in '" + spec + "'");
    }
    Catalog catalog = load_catalog_file(path);
    if (index >= catalog.size())
      throw UsageError("--machine: index " + std::to_string(index) +
                       " beyond catalog of size " + std::to_string(catalog.size()));
    return catalog.at(index).machine;
  }
  throw UsageError("--machine: expected clock:<s>, loop, or file:<path>#<index>");
}

// "clock:<s>" | "never" | "catalog:<path>"
FiniteSupportMeasure parse_measure_spec(const std::string& spec) {
  if (spec == "never") return support_mu_e(HaltingStatus::never());
  if (spec.starts_with("clock:")) {
    long s = 0;
    try {
      s = std::stol(spec.substr(6));
    } catch (const std::exception&) {
      throw UsageError("--measure: bad clock step count in '" + spec + "'");
    }
    if (s < 1) throw UsageError("--measure: clock needs s >= 1");
    return support_mu_e(HaltingStatus::halted_at(static_cast<std::uint64_t>(s)));
  }
  if (spec.starts_with("catalog:"))
    return exact_mixture_measure(load_catalog_file(spec.substr(8)));
  throw UsageError("--measure: expected clock:<s>, never, or catalog:<path>");
}

std::vector<unsigned long> parse_phi_list(const std::string& text) {
  std::vector<unsigned long> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("--phi: bad value '" + item + "'");
    }
  }
  if (values.empty()) throw UsageError("--phi: empty list");
  return values;
}

struct Options {
  bool json = false;

  std::string machine_spec;
  std::string sigma_text;
  std::string eps_text;

  std::string catalog_path;
  std::string tail_mode = "unknown";

  std::string point_text;
  std::uint64_t n = 0;
  std::string measure_spec;
  std::uint64_t series_max = 0;

  int k = 0;
  std::string delta_text;

  std::string phi_text;
  int phi_n = 0;
  unsigned long phi_m = 0;
};

void cmd_mu_eval(const Options& opt, std::ostream& out) {
  MachineRef machine = parse_machine_spec(opt.machine_spec);
  Word sigma = parse_word(opt.sigma_text);
  Rational eps = parse_positive_rational(opt.eps_text, "--eps");
  print_interval(out, mu_e_eval(machine, sigma, eps), opt.json);
}

void cmd_mixture_eval(const Options& opt, std::ostream& out) {
  Catalog catalog = load_catalog_file(opt.catalog_path);
  Word sigma = parse_word(opt.sigma_text);
  Rational eps = parse_positive_rational(opt.eps_text, "--eps");
  TailMode tail = opt.tail_mode == "never" ? TailMode::Never : TailMode::Unknown;
  print_interval(out, mixture_eval(catalog, sigma, eps, tail), opt.json);
}

void cmd_ergodic(const Options& opt, std::ostream& out) {
  if (!opt.point_text.empty()) {
    if (opt.n == 0) throw UsageError("ergodic: --n must be >= 1");
    PeriodicPoint p = parse_periodic_point(opt.point_text);
    Rational avg = ergodic_average(p, opt.n);
    if (opt.json) {
      nlohmann::json j{{"point", p.str()},
                       {"n", opt.n},
                       {"average", to_fraction_string(avg)},
                       {"limit", to_fraction_string(ergodic_limit(p))}};
      out << j.dump() << "\n";
    } else {
      out << two_column(avg) << "\n";
    }
    return;
  }
  if (opt.measure_spec.empty())
    throw UsageError("ergodic: need either --point with --n or --measure with --series");
  if (opt.series_max == 0) throw UsageError("ergodic: --series must be >= 1");
  FiniteSupportMeasure m = parse_measure_spec(opt.measure_spec);
  auto series = l1_error_series(m, opt.series_max);
  if (opt.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = 1; n <= opt.series_max; ++n)
      rows.push_back({{"n", n}, {"error", to_fraction_string(series[n - 1])}});
    out << rows.dump() << "\n";
  } else {
    out << "n,error,exact\n";
    for (std::uint64_t n = 1; n <= opt.series_max; ++n)
      out << n << "," << to_decimal_string(series[n - 1], 12) << ","
          << to_fraction_string(series[n - 1]) << "\n";
  }
}

void cmd_best_approx(const Options& opt, std::ostream& out) {
  FiniteSupportMeasure m = parse_measure_spec(opt.measure_spec);
  Rational delta = opt.delta_text.empty()
                       ? make_rational(1, 8)
                       : parse_positive_rational(opt.delta_text, "--delta");
  auto f = limit_function(m);
  auto result = min_deviation(m, f, opt.k, delta);
  nlohmann::json j{{"k", opt.k},
                   {"delta", to_fraction_string(delta)},
                   {"deviation", to_fraction_string(result.deviation)},
                   {"witness", result.witness.to_json()}};
  if (opt.json) {
    out << j.dump() << "\n";
  } else {
    out << "k         = " << opt.k << "\n"
        << "delta     = " << two_column(delta) << "\n"
        << "deviation = " << two_column(result.deviation) << "\n"
        << "witness   = " << j["witness"].dump() << "\n";
  }
}

void cmd_halting_demo(const Options& opt, std::ostream& out) {
  Catalog catalog = load_catalog_file(opt.catalog_path);
  if (!catalog.fully_annotated())
    throw std::runtime_error("halting-demo: catalog must carry ground-truth annotations");
  BoundOracle oracle = cheating_bound_oracle(catalog);

  bool all_match = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << std::left << std::setw(4) << "e" << std::setw(12) << "kind"
        << std::setw(12) << "epsilon_e" << std::setw(6) << "k_e" << std::setw(8)
        << "budget" << std::setw(8) << "decision" << std::setw(14)
        << "ground_truth" << "match\n";
  for (std::size_t e = 0; e < catalog.size(); ++e) {
    Verdict v = decide_halting(oracle, catalog, e);
    bool match = v.matches_truth();
    all_match = all_match && match;
    std::string truth = v.ground_truth->halts
                            ? "halts_at(" + std::to_string(v.ground_truth->steps) + ")"
                            : "never";
    std::string decision = v.halts ? "halts" : "never";
    if (opt.json) {
      rows.push_back({{"e", e},
                      {"kind", machine_kind(catalog.at(e).machine)},
                      {"epsilon", to_fraction_string(v.epsilon)},
                      {"k", v.k},
                      {"budget", v.budget},
                      {"decision", decision},
                      {"ground_truth", truth},
                      {"match", match}});
    } else {
      table << std::left << std::setw(4) << e << std::setw(12)
            << machine_kind(catalog.at(e).machine) << std::setw(12)
            << to_fraction_string(v.epsilon) << std::setw(6) << v.k << std::setw(8)
            << v.budget << std::setw(8) << decision << std::setw(14) << truth
            << (match ? "yes" : "NO") << "\n";
    }
  }
  if (opt.json)
    out << rows.dump() << "\n";
  else
    out << table.str();
  if (!all_match) throw std::runtime_error("halting-demo: decision mismatch");
}

void cmd_rademacher(const Options& opt, std::ostream& out) {
  PhiMap phi(parse_phi_list(opt.phi_text));
  if (opt.phi_n < 0 || opt.phi_n > phi.stages())
    throw UsageError("--n must be between 0 and the number of phi stages");
  RangeDecodeResult r =
      opt.delta_text.empty()
          ? range_decode(phi, opt.phi_n, opt.phi_m)
          : range_decode(phi, opt.phi_n, opt.phi_m,
                         parse_positive_rational(opt.delta_text, "--delta"));
  if (opt.json) {
    nlohmann::json j{{"passes", r.passes},
                     {"deviation", to_fraction_string(r.deviation)},
                     {"delta", to_fraction_string(r.delta)},
                     {"premise_ok", r.premise_ok},
                     {"premise_offenders", r.premise_offenders},
                     {"enumerated_by_n", r.enumerated_by_n},
                     {"in_range", r.in_range},
                     {"witness", r.witness.to_json()}};
    out << j.dump() << "\n";
  } else {
    out << "decode    = " << (r.passes ? "pass" : "fail")
        << "  (every occurrence of m is by stage n: " << (r.passes ? "yes" : "no")
        << ")\n"
        << "deviation = " << two_column(r.deviation) << "\n"
        << "delta     = " << two_column(r.delta) << "\n"
        << "premise   = " << (r.premise_ok ? "ok" : "violated") << "\n"
        << "m in phi(1..n) = " << (r.enumerated_by_n ? "yes" : "no")
        << ", m in range(phi) = " << (r.in_range ? "yes" : "no") << "\n"
        << "witness   = " << r.witness.to_json().dump() << "\n";
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Computable shift-invariant measures on Cantor space: exact "
               "ergodic averages, simple-function approximation, and the "
               "halting/range decoders built on them"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of text");

  auto* mu = app.add_subcommand("mu-eval",
                                "evaluate mu_e([sigma]) to a certified interval");
  mu->add_option("--machine", opt.machine_spec, "clock:<s> | loop | file:<path>#<i>")
      ->required();
  mu->add_option("--sigma", opt.sigma_text, "cylinder word, e.g. 10 or 1^5 0^15")
      ->required();
  mu->add_option("--eps", opt.eps_text, "precision, e.g. 1/100")->required();

  auto* mix = app.add_subcommand("mixture-eval",
                                 "evaluate the catalog mixture on a cylinder");
  mix->add_option("--catalog", opt.catalog_path, "catalog JSON path")->required();
  mix->add_option("--tail", opt.tail_mode, "never | unknown (default unknown)")
      ->check(CLI::IsMember({"never", "unknown"}));
  mix->add_option("--sigma", opt.sigma_text, "cylinder word")->required();
  mix->add_option("--eps", opt.eps_text, "precision")->required();

  auto* erg = app.add_subcommand("ergodic",
                                 "ergodic averages and L1 error series");
  erg->add_option("--point", opt.point_text, "periodic point, e.g. (1^5 0^15)*@0");
  erg->add_option("--n", opt.n, "average over the first n bits");
  erg->add_option("--measure", opt.measure_spec, "clock:<s> | never | catalog:<path>");
  erg->add_option("--series", opt.series_max, "emit l1 error for n = 1..series");

  auto* best = app.add_subcommand("best-approx",
                                  "optimal bounded-complexity approximation of the "
                                  "ergodic limit");
  best->add_option("--measure", opt.measure_spec, "clock:<s> | never | catalog:<path>")
      ->required();
  best->add_option("--k", opt.k, "complexity bound")->required()
      ->check(CLI::Range(0, SimpleFunction::kMaxComplexity));
  best->add_option("--delta", opt.delta_text, "deviation threshold (default 1/8)");

  auto* halt = app.add_subcommand("halting-demo",
                                  "decide halting for an annotated catalog from a "
                                  "complexity-bound oracle");
  halt->add_option("--catalog", opt.catalog_path, "annotated catalog JSON path")
      ->required();

  auto* rad = app.add_subcommand("rademacher",
                                 "range decoding for the lacunary Rademacher series");
  rad->add_option("--phi", opt.phi_text, "comma list: phi(1),phi(2),...")->required();
  rad->add_option("--n", opt.phi_n, "stage cutoff")->required();
  rad->add_option("--m", opt.phi_m, "value to decode")->required();
  rad->add_option("--delta", opt.delta_text, "deviation level (default 4^-(m+1))");

  app.add_subcommand("selfcheck", "run the full verification suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("mu-eval")) cmd_mu_eval(opt, out);
    else if (app.got_subcommand("mixture-eval")) cmd_mixture_eval(opt, out);
    else if (app.got_subcommand("ergodic")) cmd_ergodic(opt, out);
    else if (app.got_subcommand("best-approx")) cmd_best_approx(opt, out);
    else if (app.got_subcommand("halting-demo")) cmd_halting_demo(opt, out);
    else if (app.got_subcommand("rademacher")) cmd_rademacher(opt, out);
    else if (app.got_subcommand("selfcheck")) {
      if (!run_selfcheck(out)) return 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cantor
