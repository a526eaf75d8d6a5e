#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "seqsum/accumulator_machine.hpp"

namespace seqsum {

enum class CostModel : std::uint8_t { tm_steps, word_ram_unit, log_cost_indexing };
const char* cost_model_name(CostModel m) noexcept;

struct CostBreakdown {
  CostModel model = CostModel::tm_steps;
  std::uint64_t total = 0;
  std::array<std::uint64_t, kPhaseCount> phases{};  // indexed by Phase
  std::uint64_t input_scan = 0;                     // log-cost of X-tape accesses
  double ratio = 0.0;                               // total / (n log2(n + 2))

  std::uint64_t phase(Phase p) const noexcept { return phases[static_cast<std::size_t>(p)]; }
};

/// Cost of touching array index r in the log-cost model: ceil(log2(r + 2)).
constexpr std::uint64_t index_cost(std::uint64_t r) noexcept {
  std::uint64_t v = r + 1;
  std::uint64_t bits = 0;
  for (; v != 0; v >>= 1) ++bits;
  return bits;
}

/// n log2(n + 2), the normaliser for log-cost scaling ratios.
double nlogn(std::uint64_t n) noexcept;

CostBreakdown tm_step_cost(const RunReport& report);

/// Each step touches O(1) array cells at unit cost, so the total is t.
CostBreakdown word_ram_cost(const RunReport& report);

/// Sums index_cost over every head access. A tape is accessed in a step when
/// the rule senses it, rewrites its cell, or moves its head.
CostBreakdown log_cost(const RunReport& report);

/// Same model computed directly from a full trace.
CostBreakdown log_cost(std::span<const TraceEvent> trace, const SeqSumMachine& machine,
                       std::uint64_t n);

struct CostRow {
  std::string instance_id;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t word_ram = 0;
  std::uint64_t log_cost = 0;
  double log_cost_over_nlogn = 0.0;
};

CostRow cost_row(std::string instance_id, const RunReport& report);

/// instance_id,n,t,word_ram,log_cost,log_cost_over_nlogn
void write_cost_table(std::ostream& out, std::span<const CostRow> rows);

}  // namespace seqsum
