#pragma once

// Test-only model of the accumulator algorithm on a plain digit vector. It
// predicts each iteration's furthest position t_i, the potential and the
// accumulator lengths without going through the Turing machine, so tests can
// compare the machine's instrumentation against it.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "seqsum/instance.hpp"

namespace seqsum::testing {

struct ReferenceRun {
  std::vector<std::size_t> t;        // t_i per iteration
  std::vector<bool> carried;         // carry left the term
  std::vector<std::uint64_t> phi;    // digit sum before each iteration and at the end
  std::vector<std::size_t> lengths;  // significant digits before each iteration and at the end
  std::vector<std::uint64_t> writes_per_position;
  std::uint64_t predicted_steps = 1;
  std::string sum;  // MSB-first
};

inline int ref_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return c - 'A' + 10;
}

inline ReferenceRun reference_run(const Instance& inst) {
  ReferenceRun out;
  const int b = inst.base;
  std::vector<int> acc;
  auto at = [&](std::size_t p) -> int& {
    if (p >= acc.size()) acc.resize(p + 1, 0);
    return acc[p];
  };
  auto snapshot = [&] {
    std::uint64_t s = 0;
    std::size_t len = 0;
    for (std::size_t p = 0; p < acc.size(); ++p) {
      s += static_cast<std::uint64_t>(acc[p]);
      if (acc[p] != 0) len = p + 1;
    }
    out.phi.push_back(s);
    out.lengths.push_back(len);
  };
  auto touch = [&](std::size_t p) {
    if (p >= out.writes_per_position.size()) out.writes_per_position.resize(p + 1, 0);
    ++out.writes_per_position[p];
  };

  for (const std::string& term : inst.terms) {
    snapshot();
    int c = 0;
    const std::size_t len = term.size();
    for (std::size_t p = 0; p < len; ++p) {
      const int s = ref_digit(term[len - 1 - p]) + at(p) + c;
      at(p) = s % b;
      c = s / b;
      touch(p);
    }
    std::size_t t = len;
    out.carried.push_back(c != 0);
    for (std::size_t p = len; c != 0; ++p) {
      const int s = at(p) + c;
      at(p) = s % b;
      c = s / b;
      touch(p);
      t = p;
    }
    out.t.push_back(t);
    out.predicted_steps += 2 * (t + 1);
  }
  snapshot();

  for (std::size_t p = acc.size(); p-- > 0;) {
    if (out.sum.empty() && acc[p] == 0) continue;
    out.sum.push_back(static_cast<char>(acc[p] < 10 ? '0' + acc[p] : 'A' + acc[p] - 10));
  }
  if (out.sum.empty()) out.sum = "0";
  return out;
}

/// Calls f on every base-2 instance with parameter n = k + sum n_i <= max_n,
/// leading zeros included.
template <class F>
void for_each_binary_instance(std::size_t max_n, F&& f) {
  Instance inst;
  inst.base = 2;
  auto rec = [&](auto& self, std::size_t budget) -> void {
    f(inst);
    // A new term of length L costs L + 1.
    for (std::size_t len = 1; len + 1 <= budget; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        std::string term(len, '0');
        for (std::size_t j = 0; j < len; ++j)
          if ((bits >> j) & 1U) term[len - 1 - j] = '1';
        inst.terms.push_back(std::move(term));
        self(self, budget - len - 1);
        inst.terms.pop_back();
      }
    }
  };
  rec(rec, max_n);
}

}  // namespace seqsum::testing
