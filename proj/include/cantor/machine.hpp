#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cantor {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : std::uint8_t { Left, Right };

// Next-state value; kHaltState marks a halting transition.
inline constexpr int kHaltState = -1;

struct Transition {
  Symbol write;
  Move move;
  int next;  // state id or kHaltState
  bool operator==(const Transition&) const = default;
};

// Deterministic single-tape machine started in `start` on an all-blank
// two-way-infinite tape. Taking no input matches how the measures here
// consume machines: only the halting step count matters.
struct TuringMachine {
  int start = 0;
  std::map<std::pair<int, Symbol>, Transition> transitions;
  bool operator==(const TuringMachine&) const = default;
};

// Halts after exactly `steps` transition applications (steps >= 1).
struct ClockMachine {
  std::uint64_t steps;
  bool operator==(const ClockMachine&) const = default;
};

// Never halts.
struct LoopMachine {
  bool operator==(const LoopMachine&) const = default;
};

using MachineRef = std::variant<ClockMachine, LoopMachine, TuringMachine>;

struct RunResult {
  bool halted;
  std::uint64_t steps;  // halting step if halted, else the budget spent

  static RunResult halted_at(std::uint64_t s) { return {true, s}; }
  static RunResult still_running_after(std::uint64_t t) { return {false, t}; }
  bool operator==(const RunResult&) const = default;
};

// Applies at most `budget` steps. A step is one transition application;
// the machine halts on the step that enters the halt state, or on the
// step whose transition is undefined.
RunResult run(const MachineRef& machine, std::uint64_t budget);

// Known halting behaviour, used both as catalog ground truth and as the
// case selector for the per-machine measures.
struct HaltingStatus {
  bool halts;
  std::uint64_t steps;  // meaningful when halts

  static HaltingStatus halted_at(std::uint64_t s) { return {true, s}; }
  static HaltingStatus never() { return {false, 0}; }
  bool operator==(const HaltingStatus&) const = default;
};

struct CatalogEntry {
  MachineRef machine;
  std::optional<HaltingStatus> truth;
};

// Ordered machine list; the position is the enumeration index e.
struct Catalog {
  std::vector<CatalogEntry> entries;

  std::size_t size() const { return entries.size(); }
  const CatalogEntry& at(std::size_t e) const { return entries.at(e); }
  bool fully_annotated() const;
};

Catalog load_catalog(const std::string& text);
std::string save_catalog(const Catalog& catalog);

// One-line description ("clock(5)", "loop", "table[3 rules]").
std::string machine_kind(const MachineRef& machine);

}  // namespace cantor
