#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqsum/instance.hpp"
#include "seqsum/tape.hpp"
#include "seqsum/turing_machine.hpp"

namespace seqsum {

enum class StateRole : std::uint8_t { loop_test, addition, carry_propagation, rewind, halt };

struct StateInfo {
  StateRole role;
  int carry;  // carry bit held in the finite control
};

/// Where a transition's cost is attributed in cost breakdowns.
enum class Phase : std::uint8_t { addition, carry, rewind, control };
inline constexpr std::size_t kPhaseCount = 4;
const char* phase_name(Phase p) noexcept;

/// The accumulator machine: tape X holds the input terms, tape Y the running
/// total. Each term costs exactly 2(t_i + 1) steps, plus one final step into
/// the halt state.
///
/// States:
///   test    outer loop guard; halts on blank, otherwise enters add0 (carry := 0)
///   add0/1  one step per input digit: Y := (x + y + c) mod b, both heads left;
///           on the separator (or the trailing blank) the X head skips it and
///           add0 starts rewinding Y while add1 performs the first carry step
///   carry   Y digit b-1 becomes 0 and the head moves on; any smaller digit
///           absorbs the carry and the head turns right into rewind
///   rewind  moves Y right until it senses the right end, then returns to test
class SeqSumMachine {
public:
  struct States {
    StateId test, add0, add1, carry, rewind, halt;
  };

  int base() const noexcept { return table_->base(); }
  const TransitionTable& table() const noexcept { return *table_; }
  const std::shared_ptr<const TransitionTable>& shared_table() const noexcept { return table_; }
  const States& states() const noexcept { return states_; }
  const StateInfo& info(StateId s) const { return info_.at(s); }

  Phase phase_of(const TraceEvent& ev) const noexcept;

private:
  friend SeqSumMachine build_machine(int base);
  SeqSumMachine(std::shared_ptr<const TransitionTable> table, States states,
                std::vector<StateInfo> info)
      : table_(std::move(table)), states_(states), info_(std::move(info)) {}

  std::shared_ptr<const TransitionTable> table_;
  States states_;
  std::vector<StateInfo> info_;
};

/// Throws UnsupportedBase outside 2..36.
SeqSumMachine build_machine(int base);

/// Lays out X_0 LSB-first from position 0, then a separator, X_1, ... Throws
/// DigitOutOfRange for an invalid instance.
Tape encode_instance(const Instance& instance);

/// Empty accumulator tape: unwritten cells read as digit 0.
Tape fresh_accumulator();

/// MSB-first digits of Y with leading zeros stripped; "0" for a zero tape.
std::string decode_accumulator(const Tape& tape, int base);

struct IterationRecord {
  std::size_t index = 0;
  std::size_t n_i = 0;  // digits of X_i as written
  std::size_t t_i = 0;  // n_i without carry, else position of the carry-absorbing write
  std::uint64_t steps_i = 0;
  bool carry_occurred = false;
  std::uint64_t first_step = 0;  // trace index of the iteration's first transition
};

/// Y-tape digit transitions per position; positions >= kTracked share one bucket.
struct WriteHistogram {
  static constexpr std::size_t kTracked = 64;
  std::array<std::uint64_t, kTracked> zero_to_nonzero{};
  std::array<std::uint64_t, kTracked> nonzero_to_zero{};
  std::uint64_t overflow_zero_to_nonzero = 0;
  std::uint64_t overflow_nonzero_to_zero = 0;
};

/// Head-access counts by phase, tape and position: the input for log-cost
/// accounting when no trace is kept.
struct AccessProfile {
  std::array<std::array<std::vector<std::uint64_t>, 2>, kPhaseCount> counts;

  void record(Phase phase, TapeId tape, std::size_t pos);
  const std::vector<std::uint64_t>& at(Phase phase, TapeId tape) const {
    return counts[static_cast<std::size_t>(phase)][static_cast<std::size_t>(tape)];
  }
};

struct RunReport {
  Instance instance;
  int base = 2;
  SizeParams size;
  std::uint64_t total_steps = 0;
  std::vector<IterationRecord> iterations;
  std::vector<std::uint64_t> phi;                  // Phi_0..Phi_k, digit sum of Y_i
  std::vector<std::size_t> accumulator_lengths;    // m_0..m_k, 0 for a zero accumulator
  std::string final_digits;
  WriteHistogram write_histogram;
  std::vector<std::uint64_t> iteration_writes;     // per position: iterations that write it
  bool single_write_per_iteration = true;
  std::array<std::uint64_t, kPhaseCount> phase_steps{};
  AccessProfile access;
  std::optional<std::vector<TraceEvent>> trace;    // kept only for small n
};

struct RunOptions {
  std::uint64_t trace_threshold = 10'000;  // keep the full trace iff n <= threshold
  std::optional<std::uint64_t> fuel;       // default 10 * (4n + 1)
};

class FuelExhausted : public std::runtime_error {
public:
  explicit FuelExhausted(std::uint64_t fuel);
};

class TraceUnavailable : public std::runtime_error {
public:
  TraceUnavailable() : std::runtime_error("run was not traced (n above the trace threshold)") {}
};

std::uint64_t default_fuel(std::uint64_t n) noexcept;

/// Throws std::invalid_argument when the instance base differs from the
/// machine's, plus anything encode_instance or the executor throws.
RunReport run_seqsum(const SeqSumMachine& machine, const Instance& instance,
                     const RunOptions& options = {});
RunReport run_seqsum(const Instance& instance, const RunOptions& options = {});

}  // namespace seqsum
