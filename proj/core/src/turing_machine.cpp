#include "seqsum/turing_machine.hpp"

#include <algorithm>

namespace seqsum {

namespace {

std::string describe(const Reading& r) {
  std::string s = "(x='";
  s += r.x.to_char();
  s += "', y='";
  s += r.y.to_char();
  s += "'";
  if (r.x_at_end) s += ", x at end";
  if (r.y_at_end) s += ", y at end";
  s += ")";
  return s;
}

bool valid_symbol(Symbol s, int base) noexcept { return !s.is_digit() || s.value() < base; }

}  // namespace

MissingRule::MissingRule(StateId state, std::string state_name, Reading reading)
    : std::logic_error("no transition from state " + state_name + " on " + describe(reading)),
      state_(state),
      reading_(reading) {}

TransitionTable::TransitionTable(int base, std::vector<std::string> state_names, StateId start,
                                 StateId halt)
    : base_(base), names_(std::move(state_names)), start_(start), halt_(halt) {
  require_base(base);
  if (start >= names_.size() || halt >= names_.size())
    throw std::invalid_argument("start/halt state out of range");
  const std::size_t a = static_cast<std::size_t>(alphabet_size(base));
  rules_.resize(names_.size() * a * a * 4);
}

std::size_t TransitionTable::slot(StateId state, const Reading& r) const noexcept {
  const std::size_t a = static_cast<std::size_t>(alphabet_size(base_));
  std::size_t i = state;
  i = i * a + static_cast<std::size_t>(r.x.index(base_));
  i = i * a + static_cast<std::size_t>(r.y.index(base_));
  return i * 4 + (r.x_at_end ? 1U : 0U) + (r.y_at_end ? 2U : 0U);
}

void TransitionTable::set(StateId state, const Reading& reading, const Action& action) {
  if (state >= names_.size() || action.next >= names_.size())
    throw std::invalid_argument("state out of range");
  if (state == halt_) throw std::invalid_argument("the halt state has no outgoing rules");
  if (!valid_symbol(reading.x, base_) || !valid_symbol(reading.y, base_) ||
      (action.write_x && !valid_symbol(*action.write_x, base_)) ||
      (action.write_y && !valid_symbol(*action.write_y, base_)))
    throw std::invalid_argument("symbol outside the alphabet");
  rules_[slot(state, reading)] = action;
}

const Action* TransitionTable::find(StateId state, const Reading& reading) const noexcept {
  if (state >= names_.size() || !valid_symbol(reading.x, base_) || !valid_symbol(reading.y, base_))
    return nullptr;
  const auto& rule = rules_[slot(state, reading)];
  return rule ? &*rule : nullptr;
}

std::size_t TransitionTable::rule_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rules_.begin(), rules_.end(), [](const auto& r) { return r.has_value(); }));
}

std::size_t TraceEvent::pos_after(TapeId tape) const noexcept {
  const std::size_t pos = tape == TapeId::x ? x_pos : y_pos;
  switch (tape == TapeId::x ? x_move : y_move) {
    case Move::left:
      return pos + 1;
    case Move::right:
      return pos - 1;
    case Move::stay:
      break;
  }
  return pos;
}

TraceEvent step(MachineConfig& config) {
  if (config.halted()) throw std::logic_error("step: machine already halted");
  const Reading reading = config.reading();
  const Action* act = config.table->find(config.state, reading);
  if (act == nullptr) throw MissingRule(config.state, config.table->name(config.state), reading);

  // Validate both moves before touching anything so a bad rule leaves the
  // configuration unchanged.
  if ((act->move_x == Move::right && reading.x_at_end) ||
      (act->move_y == Move::right && reading.y_at_end))
    throw HeadUnderflow();

  TraceEvent ev;
  ev.step = config.steps;
  ev.state_before = config.state;
  ev.state_after = act->next;
  ev.x_pos = config.x.head();
  ev.x_read = reading.x;
  ev.x_write = act->write_x.value_or(reading.x);
  ev.x_move = act->move_x;
  ev.y_pos = config.y.head();
  ev.y_read = reading.y;
  ev.y_write = act->write_y.value_or(reading.y);
  ev.y_move = act->move_y;
  ev.y_at_end = reading.y_at_end;
  ev.x_accessed = act->senses_x || ev.x_write != ev.x_read || ev.x_move != Move::stay;
  ev.y_accessed = act->senses_y || ev.y_write != ev.y_read || ev.y_move != Move::stay;
  const bool read_zero = ev.y_read.is_digit() && ev.y_read.value() == 0;
  const bool write_zero = ev.y_write.is_digit() && ev.y_write.value() == 0;
  ev.zero_to_nonzero = read_zero && ev.y_write.is_digit() && !write_zero;
  ev.nonzero_to_zero = ev.y_read.is_digit() && !read_zero && write_zero;

  if (act->write_x) config.x.write(*act->write_x);
  if (act->write_y) config.y.write(*act->write_y);
  config.x.move(act->move_x);
  config.y.move(act->move_y);
  config.state = act->next;
  ++config.steps;
  return ev;
}

RunOutcome run(MachineConfig& config, std::uint64_t fuel, bool keep_trace) {
  const std::uint64_t before = config.steps;
  RunStatus status;
  std::vector<TraceEvent> trace;
  if (keep_trace) {
    TraceRecorder rec;
    status = run(config, fuel, rec);
    trace = std::move(rec.events);
  } else {
    NullObserver null;
    status = run(config, fuel, null);
  }
  return {status, config.steps - before, std::move(trace)};
}

std::size_t max_head_position(std::span<const TraceEvent> trace, TapeId tape) noexcept {
  std::size_t best = 0;
  for (const TraceEvent& ev : trace) {
    const std::size_t before = tape == TapeId::x ? ev.x_pos : ev.y_pos;
    best = std::max({best, before, ev.pos_after(tape)});
  }
  return best;
}

}  // namespace seqsum
