#include "seqsum/tape.hpp"

#include <algorithm>

namespace seqsum {

char move_char(Move m) noexcept {
  switch (m) {
    case Move::left:
      return 'L';
    case Move::right:
      return 'R';
    case Move::stay:
      break;
  }
  return 'S';
}

void Tape::write_at(std::size_t pos, Symbol s) {
  if (pos >= cells_.size()) {
    if (s == default_) return;
    cells_.resize(pos + 1, default_);
  }
  cells_[pos] = s;
}

void Tape::move(Move m) {
  switch (m) {
    case Move::left:
      ++head_;
      break;
    case Move::right:
      if (head_ == 0) throw HeadUnderflow();
      --head_;
      break;
    case Move::stay:
      break;
  }
}

bool operator==(const Tape& a, const Tape& b) {
  if (a.head_ != b.head_ || a.default_ != b.default_) return false;
  const std::size_t n = std::max(a.cells_.size(), b.cells_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.read_at(i) != b.read_at(i)) return false;
  return true;
}

}  // namespace seqsum
