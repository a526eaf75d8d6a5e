#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "seqsum/accumulator_machine.hpp"

namespace seqsum {

/// Per-iteration potential check: t_i + 1 <= 2(n_i + 1) + Phi_i - Phi_{i+1}.
struct IterationCheck {
  std::size_t i = 0;
  std::size_t n_i = 0;
  std::size_t t_i = 0;
  std::uint64_t steps_i = 0;
  std::uint64_t phi_before = 0;
  std::uint64_t phi_after = 0;
  std::int64_t potential_lhs = 0;
  std::int64_t potential_rhs = 0;
  bool potential_ok = false;
  bool steps_ok = false;  // steps_i == 2(t_i + 1)
};

struct AmortizedVerdict {
  int base = 2;
  std::uint64_t t = 0;
  std::uint64_t n = 0;
  std::uint64_t bound = 0;  // 4n + 1

  std::uint64_t identity_lhs = 0;  // t
  std::uint64_t identity_rhs = 0;  // 2 sum(t_i + 1) + 1
  bool identity_holds = false;     // also requires steps_ok on every iteration
  bool bound_holds = false;

  std::uint64_t phi_final = 0;
  std::int64_t sharpened_rhs = 0;  // 4n - 2 Phi_k + 1
  bool sharpened_holds = false;

  std::vector<IterationCheck> per_iteration;
  bool potential_holds = false;
  std::optional<std::size_t> first_potential_violation;

  // sum(t_i - n_i) <= sum(n_j + 1) = n
  std::uint64_t carry_excess = 0;
  bool carry_excess_ok = false;

  std::optional<bool> ledger_ok;  // nullopt when the run kept no trace
  std::uint64_t naive_bound = 0;

  /// The sharpened bound and the potential inequality use the digit-sum
  /// potential, which is only a theorem for base 2. In other bases they are
  /// reported but not part of pass().
  bool potential_claims_asserted() const noexcept { return base == 2; }
  bool pass() const noexcept;
};

AmortizedVerdict check_theorem1(const RunReport& report);
std::vector<IterationCheck> check_potential(const RunReport& report);

class LedgerViolation : public std::runtime_error {
public:
  LedgerViolation(std::uint64_t step, std::size_t position, const std::string& what);
  std::uint64_t step() const noexcept { return step_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::uint64_t step_;
  std::size_t position_;
};

struct LedgerEntry {
  enum class Kind : std::uint8_t { deposit, withdrawal };
  std::uint64_t step;
  std::size_t position;
  std::size_t iteration;
  Kind kind;
};

/// Two coins per zero-to-nonzero write on Y: one pays for the write, one is
/// left on the cell. A nonzero-to-zero write spends the cell's coin.
struct CreditLedger {
  std::vector<std::uint64_t> balance;  // per Y position
  std::vector<LedgerEntry> log;
  std::vector<std::uint64_t> deposits_per_iteration;
  std::uint64_t deposits = 0;
  std::uint64_t withdrawals = 0;

  std::uint64_t outstanding() const noexcept { return deposits - withdrawals; }
};

/// Replays the trace. Throws LedgerViolation when a balance would go negative
/// or iteration i deposits more than n_i + 1 coins.
CreditLedger run_credit_ledger(std::span<const TraceEvent> trace,
                               std::span<const IterationRecord> iterations);
/// Throws TraceUnavailable for untraced runs.
CreditLedger run_credit_ledger(const RunReport& report);

/// Per Y position, number of iterations that write it.
std::vector<std::uint64_t> bit_access_histogram(const RunReport& report);

/// sum 2(max(n_i, m_i) + 1) + 1, where m_i is the accumulator length before
/// iteration i.
std::uint64_t naive_bound(const RunReport& report);

nlohmann::json to_json(const AmortizedVerdict& verdict);

}  // namespace seqsum
