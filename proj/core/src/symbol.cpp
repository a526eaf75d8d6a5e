#include "seqsum/symbol.hpp"

namespace seqsum {

UnsupportedBase::UnsupportedBase(int base)
    : std::invalid_argument("unsupported base " + std::to_string(base) +
                            " (expected 2..36)"),
      base_(base) {}

void require_base(int base) {
  if (base < kMinBase || base > kMaxBase) throw UnsupportedBase(base);
}

std::optional<int> digit_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return std::nullopt;
}

char digit_char(int value) {
  if (value < 0 || value >= kMaxBase)
    throw std::out_of_range("digit value out of range: " + std::to_string(value));
  return value < 10 ? static_cast<char>('0' + value)
                    : static_cast<char>('A' + value - 10);
}

char Symbol::to_char() const {
  switch (kind()) {
    case Kind::blank:
      return '_';
    case Kind::separator:
      return '+';
    case Kind::digit:
      break;
  }
  return digit_char(value());
}

}  // namespace seqsum
