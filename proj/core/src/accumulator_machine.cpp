#include "seqsum/accumulator_machine.hpp"

#include <algorithm>

#include "seqsum/symbol.hpp"

namespace seqsum {

const char* phase_name(Phase p) noexcept {
  switch (p) {
    case Phase::addition:
      return "addition";
    case Phase::carry:
      return "carry";
    case Phase::rewind:
      return "rewind";
    case Phase::control:
      break;
  }
  return "control";
}

SeqSumMachine build_machine(int base) {
  require_base(base);

  const SeqSumMachine::States st{0, 1, 2, 3, 4, 5};
  std::vector<std::string> names{"test", "add0", "add1", "carry", "rewind", "halt"};
  std::vector<StateInfo> info{{StateRole::loop_test, 0},         {StateRole::addition, 0},
                              {StateRole::addition, 1},          {StateRole::carry_propagation, 1},
                              {StateRole::rewind, 0},            {StateRole::halt, 0}};
  auto table = std::make_shared<TransitionTable>(base, std::move(names), st.test, st.halt);

  const int top = base - 1;

  table->define(st.test, [&](const Reading& r) -> std::optional<Action> {
    if (r.x.is_blank()) return Action{.next = st.halt, .senses_x = true};
    if (r.x.is_digit()) return Action{.next = st.add0, .senses_x = true};
    return std::nullopt;
  });

  for (const int c : {0, 1}) {
    const StateId self = c == 0 ? st.add0 : st.add1;
    table->define(self, [&, c](const Reading& r) -> std::optional<Action> {
      if (!r.y.is_digit()) return std::nullopt;
      const int y = r.y.value();
      if (r.x.is_digit()) {
        const int s = r.x.value() + y + c;
        return Action{.write_y = Symbol::digit(s % base),
                      .move_x = Move::left,
                      .move_y = Move::left,
                      .next = s >= base ? st.add1 : st.add0,
                      .senses_x = true,
                      .senses_y = true};
      }
      // End of the term: the X head skips the separator in the same step.
      if (r.y_at_end) return std::nullopt;  // terms are nonempty, so Y has moved
      if (c == 0)
        return Action{.move_x = Move::left, .move_y = Move::right, .next = st.rewind,
                      .senses_x = true};
      if (y == top)
        return Action{.write_y = Symbol::digit(0), .move_x = Move::left, .move_y = Move::left,
                      .next = st.carry, .senses_x = true, .senses_y = true};
      return Action{.write_y = Symbol::digit(y + 1), .move_x = Move::left, .move_y = Move::right,
                    .next = st.rewind, .senses_x = true, .senses_y = true};
    });
  }

  table->define(st.carry, [&](const Reading& r) -> std::optional<Action> {
    if (!r.y.is_digit() || r.y_at_end) return std::nullopt;
    const int y = r.y.value();
    if (y == top)
      return Action{.write_y = Symbol::digit(0), .move_y = Move::left, .next = st.carry,
                    .senses_y = true};
    return Action{.write_y = Symbol::digit(y + 1), .move_y = Move::right, .next = st.rewind,
                  .senses_y = true};
  });

  table->define(st.rewind, [&](const Reading& r) -> std::optional<Action> {
    if (r.y_at_end) return Action{.next = st.test, .senses_y = true};
    return Action{.move_y = Move::right, .next = st.rewind, .senses_y = true};
  });

  return SeqSumMachine(std::move(table), st, std::move(info));
}

Phase SeqSumMachine::phase_of(const TraceEvent& ev) const noexcept {
  const StateInfo& si = info_[ev.state_before];
  switch (si.role) {
    case StateRole::addition:
      if (ev.x_read.is_digit()) return Phase::addition;
      return si.carry == 1 ? Phase::carry : Phase::rewind;
    case StateRole::carry_propagation:
      return Phase::carry;
    case StateRole::rewind:
      return ev.y_at_end ? Phase::control : Phase::rewind;
    case StateRole::loop_test:
    case StateRole::halt:
      break;
  }
  return Phase::control;
}

Tape encode_instance(const Instance& instance) {
  validate(instance);
  Tape tape(Symbol::blank());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < instance.terms.size(); ++i) {
    if (i > 0) tape.write_at(pos++, Symbol::separator());
    const std::string& term = instance.terms[i];
    for (auto it = term.rbegin(); it != term.rend(); ++it)
      tape.write_at(pos++, Symbol::digit(*digit_value(*it)));
  }
  return tape;
}

Tape fresh_accumulator() { return Tape(Symbol::digit(0)); }

std::string decode_accumulator(const Tape& tape, int base) {
  require_base(base);
  std::string out;
  for (std::size_t pos = tape.extent(); pos-- > 0;) {
    const Symbol s = tape.read_at(pos);
    const int v = s.is_digit() ? s.value() : 0;
    if (out.empty() && v == 0) continue;
    out.push_back(digit_char(v));
  }
  return out.empty() ? "0" : out;
}

void AccessProfile::record(Phase phase, TapeId tape, std::size_t pos) {
  auto& v = counts[static_cast<std::size_t>(phase)][static_cast<std::size_t>(tape)];
  if (pos >= v.size()) v.resize(std::max(pos + 1, v.size() * 2), 0);
  ++v[pos];
}

FuelExhausted::FuelExhausted(std::uint64_t fuel)
    : std::runtime_error("machine did not halt within " + std::to_string(fuel) + " steps") {}

std::uint64_t default_fuel(std::uint64_t n) noexcept { return 10 * (4 * n + 1); }

namespace {

// Builds the RunReport aggregates online from the transition stream.
class ReportBuilder {
public:
  ReportBuilder(const SeqSumMachine& machine, RunReport& report, bool keep_trace)
      : m_(machine), st_(machine.states()), r_(report) {
    if (keep_trace) r_.trace.emplace();
  }

  void on_step(const TraceEvent& ev) {
    const Phase phase = m_.phase_of(ev);
    ++r_.phase_steps[static_cast<std::size_t>(phase)];
    if (ev.x_accessed) r_.access.record(phase, TapeId::x, ev.x_pos);
    if (ev.y_accessed) r_.access.record(phase, TapeId::y, ev.y_pos);

    const int before = ev.y_read.is_digit() ? ev.y_read.value() : 0;
    const int after = ev.y_write.is_digit() ? ev.y_write.value() : 0;
    phi_ += static_cast<std::int64_t>(after) - before;
    if (after != 0) length_ = std::max(length_, ev.y_pos + 1);
    if (ev.zero_to_nonzero) {
      if (ev.y_pos < WriteHistogram::kTracked)
        ++r_.write_histogram.zero_to_nonzero[ev.y_pos];
      else
        ++r_.write_histogram.overflow_zero_to_nonzero;
    }
    if (ev.nonzero_to_zero) {
      if (ev.y_pos < WriteHistogram::kTracked)
        ++r_.write_histogram.nonzero_to_zero[ev.y_pos];
      else
        ++r_.write_histogram.overflow_nonzero_to_zero;
    }

    const StateInfo& si = m_.info(ev.state_before);
    switch (si.role) {
      case StateRole::loop_test:
        snapshot();
        if (ev.state_after == st_.add0) {
          cur_ = IterationRecord{};
          cur_.index = r_.iterations.size();
          cur_.first_step = ev.step;
        }
        break;
      case StateRole::addition:
        if (ev.x_read.is_digit()) {
          ++cur_.n_i;
          mark_write(ev.y_pos);
        } else if (si.carry == 1) {
          cur_.carry_occurred = true;
          mark_write(ev.y_pos);
          if (ev.state_after == st_.rewind) cur_.t_i = ev.y_pos;
        } else {
          cur_.t_i = cur_.n_i;
        }
        break;
      case StateRole::carry_propagation:
        mark_write(ev.y_pos);
        if (ev.state_after == st_.rewind) cur_.t_i = ev.y_pos;
        break;
      case StateRole::rewind:
        if (ev.state_after == st_.test) {
          cur_.steps_i = ev.step - cur_.first_step + 1;
          r_.iterations.push_back(cur_);
        }
        break;
      case StateRole::halt:
        break;
    }

    if (r_.trace) r_.trace->push_back(ev);
  }

private:
  void snapshot() {
    r_.phi.push_back(static_cast<std::uint64_t>(phi_));
    r_.accumulator_lengths.push_back(length_);
  }

  void mark_write(std::size_t pos) {
    if (pos >= r_.iteration_writes.size()) {
      r_.iteration_writes.resize(pos + 1, 0);
      stamp_.resize(pos + 1, 0);
    }
    const std::uint64_t tag = cur_.index + 1;
    if (stamp_[pos] == tag) {
      r_.single_write_per_iteration = false;
      return;
    }
    stamp_[pos] = tag;
    ++r_.iteration_writes[pos];
  }

  const SeqSumMachine& m_;
  const SeqSumMachine::States st_;
  RunReport& r_;
  IterationRecord cur_;
  std::int64_t phi_ = 0;
  std::size_t length_ = 0;
  std::vector<std::uint64_t> stamp_;
};

}  // namespace

RunReport run_seqsum(const SeqSumMachine& machine, const Instance& instance,
                     const RunOptions& options) {
  if (instance.base != machine.base())
    throw std::invalid_argument("instance base " + std::to_string(instance.base) +
                                " does not match machine base " + std::to_string(machine.base()));
  RunReport report;
  report.instance = instance;
  report.base = machine.base();
  report.size = size_params(instance);

  MachineConfig config(machine.shared_table(), encode_instance(instance), fresh_accumulator());
  const std::uint64_t fuel = options.fuel.value_or(default_fuel(report.size.n));
  ReportBuilder builder(machine, report, report.size.n <= options.trace_threshold);
  if (run(config, fuel, builder) == RunStatus::fuel_exhausted) throw FuelExhausted(fuel);

  // The halting transition comes from the loop test, which already took the
  // final snapshot.
  report.total_steps = config.steps;
  report.final_digits = decode_accumulator(config.y, machine.base());
  return report;
}

RunReport run_seqsum(const Instance& instance, const RunOptions& options) {
  return run_seqsum(build_machine(instance.base), instance, options);
}

}  // namespace seqsum
