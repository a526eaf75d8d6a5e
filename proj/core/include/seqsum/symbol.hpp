#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace seqsum {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

class UnsupportedBase : public std::invalid_argument {
public:
  explicit UnsupportedBase(int base);
  int base() const noexcept { return base_; }

private:
  int base_;
};

/// Throws UnsupportedBase unless 2 <= base <= 36.
void require_base(int base);

/// Digit value of an alphanumeric character (0-9, then A-Z/a-z), or nullopt.
std::optional<int> digit_value(char c) noexcept;

/// Uppercase character for a digit value in 0..35.
char digit_char(int value);

/// A tape symbol: a digit, the term separator, or the blank.
class Symbol {
public:
  enum class Kind : std::uint8_t { digit, separator, blank };

  constexpr Symbol() noexcept = default;

  static constexpr Symbol digit(int value) noexcept {
    return Symbol(static_cast<std::uint8_t>(value));
  }
  static constexpr Symbol separator() noexcept { return Symbol(kSeparatorCode); }
  static constexpr Symbol blank() noexcept { return Symbol(kBlankCode); }

  constexpr Kind kind() const noexcept {
    if (code_ == kBlankCode) return Kind::blank;
    if (code_ == kSeparatorCode) return Kind::separator;
    return Kind::digit;
  }
  constexpr bool is_digit() const noexcept { return kind() == Kind::digit; }
  constexpr bool is_separator() const noexcept { return code_ == kSeparatorCode; }
  constexpr bool is_blank() const noexcept { return code_ == kBlankCode; }

  /// Digit value; only meaningful when is_digit().
  constexpr int value() const noexcept { return code_; }

  /// Dense index into an alphabet of `base` digits followed by separator and blank.
  constexpr int index(int base) const noexcept {
    if (code_ == kSeparatorCode) return base;
    if (code_ == kBlankCode) return base + 1;
    return code_;
  }

  /// Digits as their character, blank as '_', separator as '+'.
  char to_char() const;

  friend constexpr bool operator==(Symbol, Symbol) noexcept = default;

private:
  static constexpr std::uint8_t kSeparatorCode = 0xFE;
  static constexpr std::uint8_t kBlankCode = 0xFF;

  constexpr explicit Symbol(std::uint8_t code) noexcept : code_(code) {}

  std::uint8_t code_ = kBlankCode;
};

/// Size of the tape alphabet for a base: digits, separator, blank.
constexpr int alphabet_size(int base) noexcept { return base + 2; }

/// Inverse of Symbol::index.
constexpr Symbol symbol_from_index(int index, int base) noexcept {
  if (index == base) return Symbol::separator();
  if (index == base + 1) return Symbol::blank();
  return Symbol::digit(index);
}

}  // namespace seqsum
