#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqsum {

/// A SeqSum input: nonnegative integers in base `base`. terms[0] is processed
/// first (rightmost on the input tape); each term is written MSB-first with
/// uppercase digits.
struct Instance {
  int base = 2;
  std::vector<std::string> terms;
  std::string provenance;

  std::size_t k() const noexcept { return terms.size(); }

  // Provenance is a free-text note and does not take part in equality.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.base == b.base && a.terms == b.terms;
  }
};

class ParseError : public std::invalid_argument {
public:
  ParseError(std::size_t position, const std::string& reason);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class DigitOutOfRange : public std::invalid_argument {
public:
  DigitOutOfRange(std::size_t term, char digit, int base);
};

class InvalidTarget : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DigitOutOfRange for a bad digit and std::invalid_argument for an
/// empty term or unsupported base.
void validate(const Instance& instance);

/// Grammar: empty | term ('+' term)*. The rightmost term becomes terms[0].
Instance parse_expression(std::string_view text, int base);

/// Inverse of parse_expression: X_{k-1} + ... + X_0.
std::string format_expression(const Instance& instance);

struct SizeParams {
  std::size_t k = 0;
  std::vector<std::size_t> term_lengths;  // n_i
  std::uint64_t input_size = 0;           // max{k-1, 0} + sum n_i
  std::uint64_t n = 0;                    // k + sum n_i
};

SizeParams size_params(const Instance& instance);

/// 1 + 1 + ... + 1 with k terms, base 2.
Instance gen_counter(std::size_t k);

/// X_0 = n_target/2 ones, then n_target/4 - 1 terms equal to 1. Requires
/// n_target >= 8 and divisible by 4; parameter n comes out as n_target - 1.
Instance gen_adversarial(std::size_t n_target);

/// k terms with lengths uniform in [1, max_len] and uniform digits, leading
/// zeros allowed. Deterministic in all arguments.
Instance gen_random(std::size_t k, std::size_t max_len, int base, std::uint64_t seed);

/// Instance file: "base=<b>" on the first line, the expression on the second.
void write_instance_file(std::ostream& out, const Instance& instance);
Instance read_instance_file(std::istream& in);

}  // namespace seqsum
