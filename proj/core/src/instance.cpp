#include "seqsum/instance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>

#include "seqsum/symbol.hpp"

namespace seqsum {

ParseError::ParseError(std::size_t position, const std::string& reason)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + reason),
      position_(position) {}

DigitOutOfRange::DigitOutOfRange(std::size_t term, char digit, int base)
    : std::invalid_argument(std::string("digit '") + digit + "' in term " + std::to_string(term) +
                            " is out of range for base " + std::to_string(base)) {}

void validate(const Instance& instance) {
  require_base(instance.base);
  for (std::size_t i = 0; i < instance.terms.size(); ++i) {
    const std::string& term = instance.terms[i];
    if (term.empty()) throw std::invalid_argument("term " + std::to_string(i) + " is empty");
    for (char c : term) {
      const auto v = digit_value(c);
      if (!v || *v >= instance.base) throw DigitOutOfRange(i, c, instance.base);
    }
  }
}

Instance parse_expression(std::string_view text, int base) {
  require_base(base);
  Instance inst;
  inst.base = base;
  if (text.empty()) return inst;

  std::string current;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == '+') {
      if (current.empty()) {
        if (pos == text.size()) throw ParseError(pos, "trailing separator");
        throw ParseError(pos, "empty term");
      }
      inst.terms.push_back(std::move(current));
      current.clear();
      continue;
    }
    const auto v = digit_value(text[pos]);
    if (!v || *v >= base)
      throw ParseError(pos, std::string("invalid digit '") + text[pos] + "' for base " +
                                std::to_string(base));
    current.push_back(digit_char(*v));
  }
  std::reverse(inst.terms.begin(), inst.terms.end());
  return inst;
}

std::string format_expression(const Instance& instance) {
  std::string out;
  for (auto it = instance.terms.rbegin(); it != instance.terms.rend(); ++it) {
    if (!out.empty()) out.push_back('+');
    out += *it;
  }
  return out;
}

SizeParams size_params(const Instance& instance) {
  SizeParams p;
  p.k = instance.terms.size();
  std::uint64_t total = 0;
  for (const auto& term : instance.terms) {
    p.term_lengths.push_back(term.size());
    total += term.size();
  }
  p.input_size = (p.k > 0 ? p.k - 1 : 0) + total;
  p.n = p.k + total;
  return p;
}

Instance gen_counter(std::size_t k) {
  Instance inst;
  inst.base = 2;
  inst.terms.assign(k, "1");
  inst.provenance = "counter k=" + std::to_string(k);
  return inst;
}

Instance gen_adversarial(std::size_t n_target) {
  if (n_target < 8 || n_target % 4 != 0)
    throw InvalidTarget("adversarial n_target must be >= 8 and divisible by 4, got " +
                        std::to_string(n_target));
  Instance inst;
  inst.base = 2;
  inst.terms.reserve(n_target / 4);
  inst.terms.emplace_back(n_target / 2, '1');
  for (std::size_t i = 1; i < n_target / 4; ++i) inst.terms.emplace_back("1");
  inst.provenance = "adversarial n_target=" + std::to_string(n_target) + " (X0 all ones)";
  return inst;
}

Instance gen_random(std::size_t k, std::size_t max_len, int base, std::uint64_t seed) {
  require_base(base);
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<int> digit_dist(0, base - 1);
  Instance inst;
  inst.base = base;
  inst.terms.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::string term(len_dist(rng), '0');
    for (char& c : term) c = digit_char(digit_dist(rng));
    inst.terms.push_back(std::move(term));
  }
  inst.provenance = "random k=" + std::to_string(k) + " max_len=" + std::to_string(max_len) +
                    " base=" + std::to_string(base) + " seed=" + std::to_string(seed);
  return inst;
}

void write_instance_file(std::ostream& out, const Instance& instance) {
  out << "base=" << instance.base << '\n' << format_expression(instance) << '\n';
}

Instance read_instance_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(0, "missing base header");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header.rfind("base=", 0) != 0) throw ParseError(0, "expected 'base=<b>' header");
  int base = 0;
  try {
    std::size_t used = 0;
    base = std::stoi(header.substr(5), &used);
    if (used != header.size() - 5) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParseError(5, "malformed base value '" + header.substr(5) + "'");
  }
  std::string expr;
  std::getline(in, expr);
  if (!expr.empty() && expr.back() == '\r') expr.pop_back();
  Instance inst = parse_expression(expr, base);
  inst.provenance = "file";
  return inst;
}

}  // namespace seqsum
