#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seqsum/symbol.hpp"

namespace seqsum {

enum class Move : std::int8_t { left, right, stay };

char move_char(Move m) noexcept;

class HeadUnderflow : public std::logic_error {
public:
  HeadUnderflow() : std::logic_error("head moved right of position 0") {}
};

/// Left-infinite tape. Position 0 is the rightmost cell and moving left
/// increments the position. Unwritten cells read as the tape's default symbol.
class Tape {
public:
  explicit Tape(Symbol default_symbol = Symbol::blank()) : default_(default_symbol) {}

  Symbol read() const noexcept { return read_at(head_); }
  Symbol read_at(std::size_t pos) const noexcept {
    return pos < cells_.size() ? cells_[pos] : default_;
  }

  void write(Symbol s) { write_at(head_, s); }
  void write_at(std::size_t pos, Symbol s);

  /// Throws HeadUnderflow on a right move from position 0.
  void move(Move m);

  std::size_t head() const noexcept { return head_; }
  bool at_right_end() const noexcept { return head_ == 0; }
  Symbol default_symbol() const noexcept { return default_; }

  /// One past the leftmost cell ever written (or grown into).
  std::size_t extent() const noexcept { return cells_.size(); }

  friend bool operator==(const Tape& a, const Tape& b);

private:
  std::vector<Symbol> cells_;
  std::size_t head_ = 0;
  Symbol default_;
};

}  // namespace seqsum
