#include "seqsum/amortized.hpp"

#include <algorithm>
#include <string>

namespace seqsum {

bool AmortizedVerdict::pass() const noexcept {
  const bool potential_part =
      !potential_claims_asserted() || (sharpened_holds && potential_holds);
  return identity_holds && bound_holds && carry_excess_ok && potential_part &&
         ledger_ok.value_or(true);
}

std::vector<IterationCheck> check_potential(const RunReport& report) {
  std::vector<IterationCheck> out;
  out.reserve(report.iterations.size());
  for (const IterationRecord& it : report.iterations) {
    IterationCheck c;
    c.i = it.index;
    c.n_i = it.n_i;
    c.t_i = it.t_i;
    c.steps_i = it.steps_i;
    c.phi_before = report.phi.at(it.index);
    c.phi_after = report.phi.at(it.index + 1);
    c.potential_lhs = static_cast<std::int64_t>(it.t_i) + 1;
    c.potential_rhs = 2 * (static_cast<std::int64_t>(it.n_i) + 1) +
                      static_cast<std::int64_t>(c.phi_before) -
                      static_cast<std::int64_t>(c.phi_after);
    c.potential_ok = c.potential_lhs <= c.potential_rhs;
    c.steps_ok = it.steps_i == 2 * (static_cast<std::uint64_t>(it.t_i) + 1);
    out.push_back(c);
  }
  return out;
}

AmortizedVerdict check_theorem1(const RunReport& report) {
  AmortizedVerdict v;
  v.base = report.base;
  v.t = report.total_steps;
  v.n = report.size.n;
  v.bound = 4 * v.n + 1;
  v.bound_holds = v.t <= v.bound;

  v.per_iteration = check_potential(report);
  std::uint64_t sum = 0;
  bool steps_ok = v.per_iteration.size() == report.size.k;
  v.potential_holds = true;
  for (const IterationCheck& c : v.per_iteration) {
    sum += c.t_i + 1;
    steps_ok = steps_ok && c.steps_ok;
    v.carry_excess += c.t_i >= c.n_i ? c.t_i - c.n_i : 0;
    if (!c.potential_ok && v.potential_holds) {
      v.potential_holds = false;
      v.first_potential_violation = c.i;
    }
  }
  v.identity_lhs = v.t;
  v.identity_rhs = 2 * sum + 1;
  v.identity_holds = steps_ok && v.identity_lhs == v.identity_rhs;
  v.carry_excess_ok = v.carry_excess <= v.n;

  v.phi_final = report.phi.empty() ? 0 : report.phi.back();
  v.sharpened_rhs = 4 * static_cast<std::int64_t>(v.n) - 2 * static_cast<std::int64_t>(v.phi_final) + 1;
  v.sharpened_holds = static_cast<std::int64_t>(v.t) <= v.sharpened_rhs;

  if (report.trace) {
    try {
      run_credit_ledger(report);
      v.ledger_ok = true;
    } catch (const LedgerViolation&) {
      v.ledger_ok = false;
    }
  }
  v.naive_bound = naive_bound(report);
  return v;
}

LedgerViolation::LedgerViolation(std::uint64_t step, std::size_t position, const std::string& what)
    : std::runtime_error("credit ledger violation at step " + std::to_string(step) +
                         ", position " + std::to_string(position) + ": " + what),
      step_(step),
      position_(position) {}

CreditLedger run_credit_ledger(std::span<const TraceEvent> trace,
                               std::span<const IterationRecord> iterations) {
  CreditLedger ledger;
  ledger.deposits_per_iteration.assign(iterations.size(), 0);
  std::size_t iter = 0;
  for (const TraceEvent& ev : trace) {
    while (iter + 1 < iterations.size() && ev.step >= iterations[iter + 1].first_step) ++iter;
    if (!ev.zero_to_nonzero && !ev.nonzero_to_zero) continue;
    if (iterations.empty() || ev.step < iterations[iter].first_step ||
        ev.step >= iterations[iter].first_step + iterations[iter].steps_i)
      throw LedgerViolation(ev.step, ev.y_pos, "write outside any iteration");
    if (ev.y_pos >= ledger.balance.size()) ledger.balance.resize(ev.y_pos + 1, 0);
    std::uint64_t& cell = ledger.balance[ev.y_pos];
    if (ev.zero_to_nonzero) {
      ++cell;
      ++ledger.deposits;
      if (++ledger.deposits_per_iteration[iter] > iterations[iter].n_i + 1)
        throw LedgerViolation(ev.step, ev.y_pos,
                              "iteration " + std::to_string(iter) + " deposits more than n_i + 1");
      ledger.log.push_back({ev.step, ev.y_pos, iter, LedgerEntry::Kind::deposit});
    } else {
      if (cell == 0) throw LedgerViolation(ev.step, ev.y_pos, "withdrawal from an empty cell");
      --cell;
      ++ledger.withdrawals;
      ledger.log.push_back({ev.step, ev.y_pos, iter, LedgerEntry::Kind::withdrawal});
    }
  }
  return ledger;
}

CreditLedger run_credit_ledger(const RunReport& report) {
  if (!report.trace) throw TraceUnavailable();
  return run_credit_ledger(*report.trace, report.iterations);
}

std::vector<std::uint64_t> bit_access_histogram(const RunReport& report) {
  return report.iteration_writes;
}

std::uint64_t naive_bound(const RunReport& report) {
  std::uint64_t total = 1;
  for (const IterationRecord& it : report.iterations) {
    const std::size_t m = report.accumulator_lengths.at(it.index);
    total += 2 * (static_cast<std::uint64_t>(std::max(it.n_i, m)) + 1);
  }
  return total;
}

nlohmann::json to_json(const AmortizedVerdict& v) {
  nlohmann::json per = nlohmann::json::array();
  for (const IterationCheck& c : v.per_iteration)
    per.push_back({{"i", c.i},
                   {"n_i", c.n_i},
                   {"t_i", c.t_i},
                   {"steps_i", c.steps_i},
                   {"phi_before", c.phi_before},
                   {"phi_after", c.phi_after},
                   {"potential_ok", c.potential_ok}});
  nlohmann::json j = {{"t", v.t},
                      {"n", v.n},
                      {"bound", v.bound},
                      {"identity_lhs", v.identity_lhs},
                      {"identity_rhs", v.identity_rhs},
                      {"sharpened_rhs", v.sharpened_rhs},
                      {"phi_final", v.phi_final},
                      {"per_iteration", std::move(per)},
                      {"naive_bound", v.naive_bound},
                      {"base", v.base},
                      {"pass", v.pass()}};
  j["ledger_ok"] = v.ledger_ok ? nlohmann::json(*v.ledger_ok) : nlohmann::json(nullptr);
  return j;
}

}  // namespace seqsum
