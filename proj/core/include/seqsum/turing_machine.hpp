#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqsum/symbol.hpp"
#include "seqsum/tape.hpp"

namespace seqsum {

using StateId = std::uint16_t;

enum class TapeId : std::uint8_t { x, y };

/// What the finite control sees: the symbol under each head and whether each
/// head sits on the rightmost cell (position 0).
struct Reading {
  Symbol x;
  Symbol y;
  bool x_at_end = false;
  bool y_at_end = false;

  friend bool operator==(const Reading&, const Reading&) = default;
};

struct Action {
  std::optional<Symbol> write_x = std::nullopt;  // nullopt leaves the cell as is
  std::optional<Symbol> write_y = std::nullopt;
  Move move_x = Move::stay;
  Move move_y = Move::stay;
  StateId next = 0;
  // Whether the rule's choice depends on the tape's symbol or edge flag.
  // Used only for access accounting in cost models.
  bool senses_x = false;
  bool senses_y = false;
};

class MissingRule : public std::logic_error {
public:
  MissingRule(StateId state, std::string state_name, Reading reading);
  StateId state() const noexcept { return state_; }
  const Reading& reading() const noexcept { return reading_; }

private:
  StateId state_;
  Reading reading_;
};

/// Finite control of a two-tape machine. Immutable once built and shared
/// between runs.
class TransitionTable {
public:
  TransitionTable(int base, std::vector<std::string> state_names, StateId start, StateId halt);

  int base() const noexcept { return base_; }
  StateId start() const noexcept { return start_; }
  StateId halt() const noexcept { return halt_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }

  /// Throws std::invalid_argument for rules out of the halt state or
  /// symbols outside the alphabet.
  void set(StateId state, const Reading& reading, const Action& action);

  /// Calls `rule(reading)` for every possible reading in `state` and stores
  /// each returned action.
  template <class F>
    requires std::invocable<F&, const Reading&>
  void define(StateId state, F&& rule) {
    const int a = alphabet_size(base_);
    for (int xi = 0; xi < a; ++xi)
      for (int yi = 0; yi < a; ++yi)
        for (int edges = 0; edges < 4; ++edges) {
          const Reading r{symbol_from_index(xi, base_), symbol_from_index(yi, base_),
                          (edges & 1) != 0, (edges & 2) != 0};
          if (std::optional<Action> act = rule(r)) set(state, r, *act);
        }
  }

  const Action* find(StateId state, const Reading& reading) const noexcept;
  std::size_t rule_count() const noexcept;

private:
  std::size_t slot(StateId state, const Reading& reading) const noexcept;

  int base_;
  std::vector<std::string> names_;
  StateId start_;
  StateId halt_;
  std::vector<std::optional<Action>> rules_;
};

struct MachineConfig {
  std::shared_ptr<const TransitionTable> table;
  StateId state;
  Tape x;
  Tape y;
  std::uint64_t steps = 0;

  MachineConfig(std::shared_ptr<const TransitionTable> t, Tape input, Tape accumulator)
      : table(std::move(t)), state(table->start()), x(std::move(input)), y(std::move(accumulator)) {}

  bool halted() const noexcept { return state == table->halt(); }
  Reading reading() const noexcept { return {x.read(), y.read(), x.at_right_end(), y.at_right_end()}; }
};

struct TraceEvent {
  std::uint64_t step = 0;  // 0-based index of this transition
  StateId state_before = 0;
  StateId state_after = 0;

  std::size_t x_pos = 0;
  Symbol x_read;
  Symbol x_write;
  Move x_move = Move::stay;

  std::size_t y_pos = 0;
  Symbol y_read;
  Symbol y_write;
  Move y_move = Move::stay;
  bool y_at_end = false;

  bool x_accessed = false;
  bool y_accessed = false;
  bool zero_to_nonzero = false;  // on Y
  bool nonzero_to_zero = false;  // on Y

  std::size_t pos_after(TapeId tape) const noexcept;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Applies one transition in place. Throws MissingRule, or std::logic_error
/// when called on a halted configuration.
TraceEvent step(MachineConfig& config);

template <class T>
concept StepObserver = requires(T& obs, const TraceEvent& ev) { obs.on_step(ev); };

struct NullObserver {
  void on_step(const TraceEvent&) noexcept {}
};

struct TraceRecorder {
  std::vector<TraceEvent> events;
  void on_step(const TraceEvent& ev) { events.push_back(ev); }
};

enum class RunStatus { halted, fuel_exhausted };

/// Runs until halt or until `fuel` transitions have been applied, reporting
/// every transition to the observer.
template <StepObserver Observer>
RunStatus run(MachineConfig& config, std::uint64_t fuel, Observer& observer) {
  if (fuel == 0) throw std::invalid_argument("run: fuel must be at least 1");
  std::uint64_t used = 0;
  while (!config.halted()) {
    if (used == fuel) return RunStatus::fuel_exhausted;
    observer.on_step(step(config));
    ++used;
  }
  return RunStatus::halted;
}

struct RunOutcome {
  RunStatus status;
  std::uint64_t steps;
  std::vector<TraceEvent> trace;  // empty unless requested
};

RunOutcome run(MachineConfig& config, std::uint64_t fuel, bool keep_trace = true);

/// Largest position the given head occupied over the trace slice, counting
/// both the position before and after each transition. 0 for an empty slice.
std::size_t max_head_position(std::span<const TraceEvent> trace, TapeId tape) noexcept;

}  // namespace seqsum
