#include <gtest/gtest.h>

#include <bit>

#include "reference_accounting.hpp"
#include "seqsum/amortized.hpp"

using namespace seqsum;

namespace {

RunReport run_text(const std::string& expr, int base = 2) {
  return run_seqsum(parse_expression(expr, base));
}

}  // namespace

TEST(CheckTheorem1, OnePlusOne) {
  const AmortizedVerdict v = check_theorem1(run_text("1+1"));
  EXPECT_EQ(v.t, 9U);
  EXPECT_EQ(v.n, 4U);
  EXPECT_EQ(v.identity_lhs, 9U);
  EXPECT_EQ(v.identity_rhs, 9U);
  EXPECT_TRUE(v.identity_holds);
  EXPECT_EQ(v.bound, 17U);
  EXPECT_TRUE(v.bound_holds);
  EXPECT_EQ(v.phi_final, 1U);
  EXPECT_EQ(v.sharpened_rhs, 15);
  EXPECT_TRUE(v.sharpened_holds);
  EXPECT_EQ(v.ledger_ok, std::optional<bool>(true));
  EXPECT_TRUE(v.pass());
}

TEST(CheckTheorem1, EmptyInputMeetsBoundWithEquality) {
  const AmortizedVerdict v = check_theorem1(run_text(""));
  EXPECT_EQ(v.t, 1U);
  EXPECT_EQ(v.bound, 1U);
  EXPECT_TRUE(v.bound_holds);
  EXPECT_EQ(v.sharpened_rhs, 1);
  EXPECT_TRUE(v.pass());
}

TEST(CheckTheorem1, AdversarialNaiveGapGrows) {
  double prev_gap = 0;
  for (std::size_t n : {64, 128, 256}) {
    const AmortizedVerdict v = check_theorem1(run_seqsum(gen_adversarial(n)));
    EXPECT_TRUE(v.pass()) << n;
    EXPECT_GT(v.naive_bound, v.bound);
    const double gap = static_cast<double>(v.naive_bound) / static_cast<double>(v.t);
    EXPECT_GT(gap, prev_gap * 1.8);
    prev_gap = gap;
  }
}

TEST(CheckTheorem1, UntracedRunHasNoLedgerVerdict) {
  RunOptions opts;
  opts.trace_threshold = 0;
  const AmortizedVerdict v = check_theorem1(run_seqsum(gen_counter(5), opts));
  EXPECT_FALSE(v.ledger_ok.has_value());
  EXPECT_TRUE(v.pass());
}

TEST(CheckPotential, Examples) {
  const auto two = check_potential(run_text("1+1"));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[1].potential_lhs, 2);
  EXPECT_EQ(two[1].potential_rhs, 4);
  EXPECT_TRUE(two[1].potential_ok);

  const auto one = check_potential(run_text("1"));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].potential_lhs, 2);
  EXPECT_EQ(one[0].potential_rhs, 3);
}

// Summing the per-iteration inequality telescopes to the sharpened bound.
TEST(CheckPotential, TelescopesToSharpenedBound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RunReport r = run_seqsum(gen_random(seed % 25, 10, 2, seed));
    const auto checks = check_potential(r);
    std::int64_t lhs = 1, rhs = 1;
    for (const auto& c : checks) {
      lhs += 2 * c.potential_lhs;
      rhs += 2 * c.potential_rhs;
    }
    const AmortizedVerdict v = check_theorem1(r);
    EXPECT_EQ(lhs, static_cast<std::int64_t>(v.t));
    EXPECT_EQ(rhs, v.sharpened_rhs);
  }
}

TEST(CheckTheorem1, OtherBasesReportPotentialInformationally) {
  const AmortizedVerdict v = check_theorem1(run_text("9", 10));
  EXPECT_EQ(v.t, 5U);
  EXPECT_FALSE(v.sharpened_holds);  // 4*2 - 2*9 + 1 < 5
  EXPECT_FALSE(v.potential_holds);
  EXPECT_EQ(v.first_potential_violation, std::optional<std::size_t>(0));
  EXPECT_FALSE(v.potential_claims_asserted());
  EXPECT_TRUE(v.pass());
}

TEST(CreditLedger, OnePlusOne) {
  const CreditLedger l = run_credit_ledger(run_text("1+1"));
  ASSERT_EQ(l.log.size(), 3U);
  EXPECT_EQ(l.log[0].kind, LedgerEntry::Kind::deposit);
  EXPECT_EQ(l.log[0].position, 0U);
  EXPECT_EQ(l.log[0].iteration, 0U);
  EXPECT_EQ(l.log[1].kind, LedgerEntry::Kind::withdrawal);
  EXPECT_EQ(l.log[1].position, 0U);
  EXPECT_EQ(l.log[1].iteration, 1U);
  EXPECT_EQ(l.log[2].kind, LedgerEntry::Kind::deposit);
  EXPECT_EQ(l.log[2].position, 1U);
  EXPECT_EQ(l.log[2].iteration, 1U);
  EXPECT_EQ(l.balance, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(l.deposits_per_iteration, (std::vector<std::uint64_t>{1, 1}));
}

TEST(CreditLedger, EmptyAndCounter) {
  const CreditLedger empty = run_credit_ledger(run_text(""));
  EXPECT_TRUE(empty.log.empty());
  const CreditLedger c8 = run_credit_ledger(run_seqsum(gen_counter(8)));
  EXPECT_EQ(c8.outstanding(), static_cast<std::uint64_t>(std::popcount(8U)));
  RunOptions opts;
  opts.trace_threshold = 0;
  EXPECT_THROW(run_credit_ledger(run_seqsum(gen_counter(8), opts)), TraceUnavailable);
}

TEST(CreditLedger, DetectsForgedTraces) {
  RunReport r = run_text("1+1");
  auto forged = *r.trace;
  forged[1].zero_to_nonzero = false;  // drop the deposit that pays for step 5
  EXPECT_THROW(run_credit_ledger(forged, r.iterations), LedgerViolation);

  auto greedy = *r.trace;
  greedy[2].zero_to_nonzero = true;  // second deposit in iteration 0 (n_0 + 1 = 2 allowed)
  EXPECT_NO_THROW(run_credit_ledger(greedy, r.iterations));
  greedy[3].zero_to_nonzero = true;
  try {
    run_credit_ledger(greedy, r.iterations);
    FAIL() << "expected LedgerViolation";
  } catch (const LedgerViolation& e) {
    EXPECT_EQ(e.step(), 3U);
  }
}

namespace {

// Iterations i < k of the counter that write bit j: carrying from i needs
// the low j bits of i to be all ones.
std::uint64_t counter_writes_brute_force(std::uint64_t k, unsigned j) {
  std::uint64_t count = 0;
  const std::uint64_t mask = (std::uint64_t{1} << j) - 1;
  for (std::uint64_t i = 0; i < k; ++i)
    if ((i & mask) == mask) ++count;
  return count;
}

}  // namespace

TEST(BitAccessHistogram, CounterPattern) {
  EXPECT_EQ(bit_access_histogram(run_seqsum(gen_counter(8))),
            (std::vector<std::uint64_t>{8, 4, 2, 1}));
  EXPECT_EQ(bit_access_histogram(run_seqsum(gen_counter(1))), std::vector<std::uint64_t>{1});
  EXPECT_EQ(bit_access_histogram(run_text("1+1")), (std::vector<std::uint64_t>{2, 1}));
  for (std::uint64_t k = 1; k <= 300; ++k) {
    const auto h = bit_access_histogram(run_seqsum(gen_counter(k)));
    ASSERT_EQ(h.size(), static_cast<std::size_t>(std::bit_width(k)));
    for (unsigned j = 0; j < h.size(); ++j) ASSERT_EQ(h[j], counter_writes_brute_force(k, j));
  }
}

TEST(NaiveBound, Examples) {
  EXPECT_EQ(naive_bound(run_text("1+1")), 9U);
  const RunReport single = run_text("10110");
  EXPECT_EQ(naive_bound(single), single.total_steps);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RunReport r = run_seqsum(gen_random(seed % 30, 15, 2, seed));
    EXPECT_GE(naive_bound(r), r.total_steps);
  }
}

TEST(VerdictJson, HasExportFields) {
  const auto j = to_json(check_theorem1(run_text("1+1")));
  for (const char* key : {"t", "n", "bound", "identity_lhs", "identity_rhs", "sharpened_rhs",
                          "phi_final", "per_iteration", "ledger_ok", "naive_bound"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["t"], 9);
  EXPECT_EQ(j["ledger_ok"], true);
  ASSERT_EQ(j["per_iteration"].size(), 2U);
  const auto& it1 = j["per_iteration"][1];
  for (const char* key : {"i", "n_i", "t_i", "steps_i", "phi_before", "phi_after", "potential_ok"})
    EXPECT_TRUE(it1.contains(key)) << key;
  EXPECT_EQ(it1["steps_i"], 4);
  EXPECT_EQ(it1["phi_before"], 1);

  RunOptions opts;
  opts.trace_threshold = 0;
  EXPECT_TRUE(to_json(check_theorem1(run_text("1+1", 2))).at("ledger_ok").is_boolean());
  EXPECT_TRUE(to_json(check_theorem1(run_seqsum(gen_counter(3), opts))).at("ledger_ok").is_null());
}

TEST(Theorem1, ExhaustiveBinaryUpToTen) {
  const SeqSumMachine m = build_machine(2);
  seqsum::testing::for_each_binary_instance(10, [&](const Instance& inst) {
    const AmortizedVerdict v = check_theorem1(run_seqsum(m, inst));
    ASSERT_TRUE(v.pass()) << format_expression(inst);
    ASSERT_TRUE(v.carry_excess_ok);
  });
}

TEST(Theorem1, RandomOtherBasesMeetBoundAndLedger) {
  for (int base : {3, 10, 16, 36}) {
    const SeqSumMachine m = build_machine(base);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const AmortizedVerdict v = check_theorem1(run_seqsum(m, gen_random(seed % 40, 12, base, seed)));
      ASSERT_TRUE(v.bound_holds);
      ASSERT_TRUE(v.identity_holds);
      ASSERT_EQ(v.ledger_ok, std::optional<bool>(true));
    }
  }
}
