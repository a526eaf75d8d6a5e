#include "seqsum/trace_csv.hpp"

#include <ostream>

namespace seqsum {

void write_trace_csv(std::ostream& out, const TransitionTable& table,
                     std::span<const TraceEvent> trace) {
  out << "step,state_before,state_after,x_pos,x_read,y_pos,y_read,y_write,zero_to_one,one_to_zero\n";
  for (const TraceEvent& ev : trace) {
    out << ev.step << ',' << table.name(ev.state_before) << ',' << table.name(ev.state_after) << ','
        << ev.x_pos << ',' << ev.x_read.to_char() << ',' << ev.y_pos << ',' << ev.y_read.to_char()
        << ',' << ev.y_write.to_char() << ',' << (ev.zero_to_nonzero ? 1 : 0) << ','
        << (ev.nonzero_to_zero ? 1 : 0) << '\n';
  }
}

}  // namespace seqsum
