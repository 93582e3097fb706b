#include "cantor/machine.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cantor {

namespace {

// Two-sided tape grown on demand; cell 0 is where the head starts.
class Tape {
 public:
  Symbol read(long long pos) const {
    const auto& side = pos >= 0 ? right_ : left_;
    auto i = static_cast<std::size_t>(pos >= 0 ? pos : -pos - 1);
    return i < side.size() ? side[i] : Symbol::Blank;
  }
  void write(long long pos, Symbol s) {
    auto& side = pos >= 0 ? right_ : left_;
    auto i = static_cast<std::size_t>(pos >= 0 ? pos : -pos - 1);
    if (i >= side.size()) side.resize(i + 1, Symbol::Blank);
    side[i] = s;
  }

 private:
  std::vector<Symbol> right_, left_;
};

RunResult run_table(const TuringMachine& tm, std::uint64_t budget) {
  Tape tape;
  long long head = 0;
  int state = tm.start;
  for (std::uint64_t step = 1; step <= budget; ++step) {
    auto it = tm.transitions.find({state, tape.read(head)});
    if (it == tm.transitions.end()) return RunResult::halted_at(step);
    const Transition& t = it->second;
    tape.write(head, t.write);
    head += (t.move == Move::Right) ? 1 : -1;
    if (t.next == kHaltState) return RunResult::halted_at(step);
    state = t.next;
  }
  return RunResult::still_running_after(budget);
}

Symbol parse_symbol(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (v == 0) return Symbol::Zero;
    if (v == 1) return Symbol::One;
  } else if (j.is_string() && j.get<std::string>() == "B") {
    return Symbol::Blank;
  }
  throw std::runtime_error("catalog: bad symbol in " + where);
}

nlohmann::json symbol_to_json(Symbol s) {
  switch (s) {
    case Symbol::Zero: return 0;
    case Symbol::One: return 1;
    default: return "B";
  }
}

char symbol_key_char(Symbol s) {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    default: return 'B';
  }
}

MachineRef parse_machine(const nlohmann::json& j, const std::string& where) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "clock") {
    auto s = j.at("s").get<long long>();
    if (s < 1) throw std::runtime_error("catalog: clock needs s >= 1 in " + where);
    return ClockMachine{static_cast<std::uint64_t>(s)};
  }
  if (kind == "loop") return LoopMachine{};
  if (kind == "table") {
    TuringMachine tm;
    tm.start = j.at("start").get<int>();
    for (const auto& [key, value] : j.at("transitions").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw std::runtime_error("catalog: bad transition key '" + key + "' in " + where);
      int state = std::stoi(key.substr(0, comma));
      std::string sym = key.substr(comma + 1);
      Symbol read = sym == "B"   ? Symbol::Blank
                    : sym == "0" ? Symbol::Zero
                    : sym == "1" ? Symbol::One
                                 : throw std::runtime_error("catalog: bad symbol '" + sym +
                                                            "' in " + where);
      if (!value.is_array() || value.size() != 3)
        throw std::runtime_error("catalog: transition must be [write, move, next] in " + where);
      Transition t;
      t.write = parse_symbol(value[0], where);
      std::string move = value[1].get<std::string>();
      if (move != "L" && move != "R")
        throw std::runtime_error("catalog: move must be L or R in " + where);
      t.move = move == "L" ? Move::Left : Move::Right;
      if (value[2].is_string() && value[2].get<std::string>() == "HALT")
        t.next = kHaltState;
      else
        t.next = value[2].get<int>();
      tm.transitions[{state, read}] = t;
    }
    return tm;
  }
  throw std::runtime_error("catalog: unknown machine kind '" + kind + "' in " + where);
}

nlohmann::json machine_to_json(const MachineRef& machine) {
  nlohmann::json j;
  if (const auto* clock = std::get_if<ClockMachine>(&machine)) {
    j["kind"] = "clock";
    j["s"] = clock->steps;
  } else if (std::holds_alternative<LoopMachine>(machine)) {
    j["kind"] = "loop";
  } else {
    const auto& tm = std::get<TuringMachine>(machine);
    j["kind"] = "table";
    j["start"] = tm.start;
    nlohmann::json trans = nlohmann::json::object();
    for (const auto& [key, t] : tm.transitions) {
      std::string k = std::to_string(key.first) + "," + symbol_key_char(key.second);
      nlohmann::json next;
      if (t.next == kHaltState)
        next = "HALT";
      else
        next = t.next;
      trans[k] = nlohmann::json::array(
          {symbol_to_json(t.write), t.move == Move::Left ? "L" : "R", next});
    }
    j["transitions"] = std::move(trans);
  }
  return j;
}

}  // namespace

RunResult run(const MachineRef& machine, std::uint64_t budget) {
  if (const auto* clock = std::get_if<ClockMachine>(&machine)) {
    if (clock->steps <= budget) return RunResult::halted_at(clock->steps);
    return RunResult::still_running_after(budget);
  }
  if (std::holds_alternative<LoopMachine>(machine))
    return RunResult::still_running_after(budget);
  return run_table(std::get<TuringMachine>(machine), budget);
}

bool Catalog::fully_annotated() const {
  for (const auto& entry : entries)
    if (!entry.truth) return false;
  return true;
}

Catalog load_catalog(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("catalog: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error("catalog: top level must be an array");
  Catalog catalog;
  for (std::size_t e = 0; e < doc.size(); ++e) {
    std::string where = "entry " + std::to_string(e);
    try {
      CatalogEntry entry;
      entry.machine = parse_machine(doc[e], where);
      if (doc[e].contains("truth")) {
        const auto& t = doc[e]["truth"];
        if (t.contains("halts_at")) {
          auto s = t["halts_at"].get<long long>();
          if (s < 1) throw std::runtime_error("catalog: halts_at needs s >= 1 in " + where);
          entry.truth = HaltingStatus::halted_at(static_cast<std::uint64_t>(s));
        } else if (t.contains("never") && t["never"].get<bool>()) {
          entry.truth = HaltingStatus::never();
        } else {
          throw std::runtime_error("catalog: bad truth annotation in " + where);
        }
      }
      catalog.entries.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& e2) {
      throw std::runtime_error("catalog: malformed " + where + ": " + e2.what());
    }
  }
  return catalog;
}

std::string save_catalog(const Catalog& catalog) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& entry : catalog.entries) {
    nlohmann::json j = machine_to_json(entry.machine);
    if (entry.truth) {
      if (entry.truth->halts)
        j["truth"] = nlohmann::json{{"halts_at", entry.truth->steps}};
      else
        j["truth"] = nlohmann::json{{"never", true}};
    }
    doc.push_back(std::move(j));
  }
  return doc.dump(2);
}

std::string machine_kind(const MachineRef& machine) {
  if (const auto* clock = std::get_if<ClockMachine>(&machine))
    return "clock(" + std::to_string(clock->steps) + ")";
  if (std::holds_alternative<LoopMachine>(machine)) return "loop";
  const auto& tm = std::get<TuringMachine>(machine);
  return "table[" + std::to_string(tm.transitions.size()) + " rules]";
}

}  // namespace cantor
