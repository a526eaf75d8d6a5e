#include "seqsum/cost_model.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace seqsum {

const char* cost_model_name(CostModel m) noexcept {
  switch (m) {
    case CostModel::tm_steps:
      return "tm-steps";
    case CostModel::word_ram_unit:
      return "word-ram-unit";
    case CostModel::log_cost_indexing:
      break;
  }
  return "log-cost-indexing";
}

double nlogn(std::uint64_t n) noexcept {
  const double x = static_cast<double>(n);
  return x * std::log2(x + 2.0);
}

namespace {

double ratio_of(std::uint64_t total, std::uint64_t n) noexcept {
  return n == 0 ? 0.0 : static_cast<double>(total) / nlogn(n);
}

}  // namespace

CostBreakdown tm_step_cost(const RunReport& report) {
  CostBreakdown c;
  c.model = CostModel::tm_steps;
  c.phases = report.phase_steps;
  for (std::uint64_t p : c.phases) c.total += p;
  c.ratio = ratio_of(c.total, report.size.n);
  return c;
}

CostBreakdown word_ram_cost(const RunReport& report) {
  CostBreakdown c = tm_step_cost(report);
  c.model = CostModel::word_ram_unit;
  return c;
}

CostBreakdown log_cost(const RunReport& report) {
  CostBreakdown c;
  c.model = CostModel::log_cost_indexing;
  for (std::size_t p = 0; p < kPhaseCount; ++p) {
    for (const TapeId tape : {TapeId::x, TapeId::y}) {
      const auto& counts = report.access.at(static_cast<Phase>(p), tape);
      std::uint64_t sum = 0;
      for (std::size_t r = 0; r < counts.size(); ++r) sum += counts[r] * index_cost(r);
      c.phases[p] += sum;
      if (tape == TapeId::x) c.input_scan += sum;
    }
    c.total += c.phases[p];
  }
  c.ratio = ratio_of(c.total, report.size.n);
  return c;
}

CostBreakdown log_cost(std::span<const TraceEvent> trace, const SeqSumMachine& machine,
                       std::uint64_t n) {
  CostBreakdown c;
  c.model = CostModel::log_cost_indexing;
  for (const TraceEvent& ev : trace) {
    const auto p = static_cast<std::size_t>(machine.phase_of(ev));
    if (ev.x_accessed) {
      c.phases[p] += index_cost(ev.x_pos);
      c.input_scan += index_cost(ev.x_pos);
    }
    if (ev.y_accessed) c.phases[p] += index_cost(ev.y_pos);
  }
  for (std::uint64_t v : c.phases) c.total += v;
  c.ratio = ratio_of(c.total, n);
  return c;
}

CostRow cost_row(std::string instance_id, const RunReport& report) {
  const CostBreakdown lc = log_cost(report);
  return {std::move(instance_id), report.size.n, report.total_steps,
          word_ram_cost(report).total, lc.total, lc.ratio};
}

void write_cost_table(std::ostream& out, std::span<const CostRow> rows) {
  out << "instance_id,n,t,word_ram,log_cost,log_cost_over_nlogn\n";
  for (const CostRow& r : rows)
    out << r.instance_id << ',' << r.n << ',' << r.t << ',' << r.word_ram << ',' << r.log_cost
        << ',' << std::fixed << std::setprecision(6) << r.log_cost_over_nlogn
        << std::defaultfloat << '\n';
}

}  // namespace seqsum
