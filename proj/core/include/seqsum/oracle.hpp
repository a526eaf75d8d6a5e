#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqsum/instance.hpp"

namespace seqsum {

class SeqSumMachine;

/// Canonical arbitrary-precision nonnegative integer: LSB-first digit values
/// with no leading zeros (zero is the empty digit list).
///
/// Used as the reference for the accumulator machine; it deliberately shares
/// no arithmetic with it.
class BigDigits {
public:
  explicit BigDigits(int base = 2);

  /// MSB-first text, case-insensitive; leading zeros are dropped.
  static BigDigits from_string(std::string_view text, int base);
  static BigDigits from_u64(std::uint64_t value, int base);

  int base() const noexcept { return base_; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  bool is_zero() const noexcept { return digits_.empty(); }
  std::size_t length() const noexcept { return digits_.size(); }

  std::string to_string() const;

  /// Value as u64; throws std::overflow_error when it does not fit.
  std::uint64_t to_u64() const;

  BigDigits& operator+=(const BigDigits& rhs);
  friend BigDigits operator+(BigDigits lhs, const BigDigits& rhs) { return lhs += rhs; }

  friend bool operator==(const BigDigits&, const BigDigits&) = default;

private:
  void trim() noexcept;

  int base_;
  std::vector<std::uint8_t> digits_;
};

class NegativeResult : public std::domain_error {
public:
  NegativeResult() : std::domain_error("subtract: minuend is smaller than subtrahend") {}
};

/// School-book sum of all terms.
BigDigits oracle_sum(const Instance& instance);

/// Length first, then digits from the most significant end. Both operands
/// must share a base.
std::strong_ordering compare_magnitudes(const BigDigits& a, const BigDigits& b);

/// a - b with borrow; throws NegativeResult when a < b.
BigDigits subtract(const BigDigits& a, const BigDigits& b);

enum class Sign : std::uint8_t { plus, minus };

struct SignedTerm {
  Sign sign = Sign::plus;
  std::string magnitude;  // MSB-first

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

struct SignedInstance {
  int base = 2;
  std::vector<SignedTerm> terms;  // terms[0] is the rightmost in the text

  friend bool operator==(const SignedInstance&, const SignedInstance&) = default;
};

/// Grammar: empty | sign? term (sign term)*, sign in {'+', '-'}.
SignedInstance parse_signed_expression(std::string_view text, int base);
std::string format_signed_expression(const SignedInstance& instance);

SignedInstance gen_random_signed(std::size_t k, std::size_t max_len, int base, std::uint64_t seed);

struct SignedValue {
  Sign sign = Sign::plus;  // zero is always plus
  BigDigits magnitude;

  std::string to_string() const;
  friend bool operator==(const SignedValue&, const SignedValue&) = default;
};

enum class Engine : std::uint8_t { oracle, tm };

/// Sums the positive and the negative terms separately with the chosen engine,
/// then subtracts the smaller magnitude from the larger.
SignedValue signed_sum(const SignedInstance& instance, Engine engine);
SignedValue signed_sum(const SignedInstance& instance, const SeqSumMachine& machine);

}  // namespace seqsum
