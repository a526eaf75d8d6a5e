#include "seqsum/oracle.hpp"

#include <algorithm>
#include <random>

#include "seqsum/accumulator_machine.hpp"
#include "seqsum/symbol.hpp"

namespace seqsum {

BigDigits::BigDigits(int base) : base_(base) { require_base(base); }

BigDigits BigDigits::from_string(std::string_view text, int base) {
  BigDigits out(base);
  out.digits_.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const auto v = digit_value(*it);
    if (!v || *v >= base)
      throw std::invalid_argument(std::string("invalid digit '") + *it + "' for base " +
                                  std::to_string(base));
    out.digits_.push_back(static_cast<std::uint8_t>(*v));
  }
  out.trim();
  return out;
}

BigDigits BigDigits::from_u64(std::uint64_t value, int base) {
  BigDigits out(base);
  const auto b = static_cast<std::uint64_t>(base);
  for (; value != 0; value /= b) out.digits_.push_back(static_cast<std::uint8_t>(value % b));
  return out;
}

std::string BigDigits::to_string() const {
  if (digits_.empty()) return "0";
  std::string s;
  s.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) s.push_back(digit_char(*it));
  return s;
}

std::uint64_t BigDigits::to_u64() const {
  std::uint64_t v = 0;
  const auto b = static_cast<std::uint64_t>(base_);
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (v > (UINT64_MAX - *it) / b) throw std::overflow_error("BigDigits value exceeds 64 bits");
    v = v * b + *it;
  }
  return v;
}

void BigDigits::trim() noexcept {
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

BigDigits& BigDigits::operator+=(const BigDigits& rhs) {
  if (rhs.base_ != base_) throw std::invalid_argument("BigDigits: base mismatch");
  const std::size_t len = std::max(digits_.size(), rhs.digits_.size());
  digits_.resize(len, 0);
  unsigned carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    unsigned s = digits_[i] + carry + (i < rhs.digits_.size() ? rhs.digits_[i] : 0U);
    carry = s / static_cast<unsigned>(base_);
    digits_[i] = static_cast<std::uint8_t>(s % static_cast<unsigned>(base_));
  }
  if (carry != 0) digits_.push_back(static_cast<std::uint8_t>(carry));
  return *this;
}

BigDigits oracle_sum(const Instance& instance) {
  validate(instance);
  BigDigits total(instance.base);
  for (const std::string& term : instance.terms)
    total += BigDigits::from_string(term, instance.base);
  return total;
}

std::strong_ordering compare_magnitudes(const BigDigits& a, const BigDigits& b) {
  if (a.base() != b.base()) throw std::invalid_argument("compare_magnitudes: base mismatch");
  if (a.length() != b.length()) return a.length() <=> b.length();
  const auto& da = a.digits();
  const auto& db = b.digits();
  for (std::size_t i = da.size(); i-- > 0;)
    if (da[i] != db[i]) return da[i] <=> db[i];
  return std::strong_ordering::equal;
}

BigDigits subtract(const BigDigits& a, const BigDigits& b) {
  if (compare_magnitudes(a, b) == std::strong_ordering::less) throw NegativeResult();
  const int base = a.base();
  std::string out;  // MSB-first, built in reverse
  int borrow = 0;
  const auto& da = a.digits();
  const auto& db = b.digits();
  for (std::size_t i = 0; i < da.size(); ++i) {
    int d = da[i] - borrow - (i < db.size() ? db[i] : 0);
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += base;
    out.push_back(digit_char(d));
  }
  std::reverse(out.begin(), out.end());
  return BigDigits::from_string(out, base);
}

SignedInstance parse_signed_expression(std::string_view text, int base) {
  require_base(base);
  SignedInstance inst;
  inst.base = base;
  std::size_t pos = 0;
  while (pos < text.size()) {
    SignedTerm term;
    if (text[pos] == '+' || text[pos] == '-') {
      term.sign = text[pos] == '-' ? Sign::minus : Sign::plus;
      ++pos;
    } else if (pos != 0) {
      throw ParseError(pos, "expected sign");
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      const auto v = digit_value(text[pos]);
      if (!v || *v >= base)
        throw ParseError(pos, std::string("invalid digit '") + text[pos] + "' for base " +
                                  std::to_string(base));
      term.magnitude.push_back(digit_char(*v));
      ++pos;
    }
    if (pos == start) throw ParseError(pos, pos == text.size() ? "trailing sign" : "empty term");
    inst.terms.push_back(std::move(term));
  }
  std::reverse(inst.terms.begin(), inst.terms.end());
  return inst;
}

std::string format_signed_expression(const SignedInstance& instance) {
  std::string out;
  for (auto it = instance.terms.rbegin(); it != instance.terms.rend(); ++it) {
    if (it->sign == Sign::minus)
      out.push_back('-');
    else if (!out.empty())
      out.push_back('+');
    out += it->magnitude;
  }
  return out;
}

SignedInstance gen_random_signed(std::size_t k, std::size_t max_len, int base,
                                 std::uint64_t seed) {
  const Instance magnitudes = gen_random(k, max_len, base, seed);
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
  std::bernoulli_distribution negative(0.5);
  SignedInstance inst;
  inst.base = base;
  for (const std::string& m : magnitudes.terms)
    inst.terms.push_back({negative(rng) ? Sign::minus : Sign::plus, m});
  return inst;
}

std::string SignedValue::to_string() const {
  return (sign == Sign::minus ? "-" : "") + magnitude.to_string();
}

namespace {

template <class SumFn>
SignedValue split_and_subtract(const SignedInstance& instance, SumFn&& sum) {
  Instance pos, neg;
  pos.base = neg.base = instance.base;
  for (const SignedTerm& t : instance.terms)
    (t.sign == Sign::minus ? neg : pos).terms.push_back(t.magnitude);
  const BigDigits p = sum(pos);
  const BigDigits n = sum(neg);
  if (compare_magnitudes(p, n) == std::strong_ordering::less)
    return {Sign::minus, subtract(n, p)};
  return {Sign::plus, subtract(p, n)};
}

}  // namespace

SignedValue signed_sum(const SignedInstance& instance, const SeqSumMachine& machine) {
  return split_and_subtract(instance, [&](const Instance& part) {
    RunOptions opts;
    opts.trace_threshold = 0;
    return BigDigits::from_string(run_seqsum(machine, part, opts).final_digits, part.base);
  });
}

SignedValue signed_sum(const SignedInstance& instance, Engine engine) {
  if (engine == Engine::tm) return signed_sum(instance, build_machine(instance.base));
  return split_and_subtract(instance, [](const Instance& part) { return oracle_sum(part); });
}

}  // namespace seqsum
