#pragma once

#include <iosfwd>
#include <span>

#include "seqsum/turing_machine.hpp"

namespace seqsum {

/// Header plus one row per event:
/// step,state_before,state_after,x_pos,x_read,y_pos,y_read,y_write,zero_to_one,one_to_zero
void write_trace_csv(std::ostream& out, const TransitionTable& table,
                     std::span<const TraceEvent> trace);

}  // namespace seqsum
