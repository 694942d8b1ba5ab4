#pragma once

#include <map>
#include <vector>

#include "klmult/permutation.hpp"

namespace klmult {

// Per essential box: how far it slides southwest and the rank it carries at
// its destination. move = r^v_e (dots of v weakly southwest of e),
// target = r^w_e - r^v_e.
struct EssentialMoves {
  std::map<Box, int> move;
  std::map<Box, int> target_rank;
  int total() const;
};

// Row/column shuffle of the generic matrix and the variable priority it
// induces. pi_order lists the free positions of Z^(v) highest-priority
// first, read through the shuffled matrix rows left-to-right, bottom to top.
struct ShuffleData {
  Permutation rho;
  Permutation chi;
  std::vector<Box> pi_order;
};

// One southwest step of the essential box e0 = (i0,j0): the dot surgery of
// the transition move. Requires w covexillary, e0 essential with positive
// rank. The new essential box is (i0-1, j0-1) and its rank drops by one.
Permutation transition(const Permutation& w, Box e0);

EssentialMoves essential_moves(const Permutation& v, const Permutation& w);

// The covexillary permutation whose essential boxes are those of w slid
// southwest by the move counts, carrying the target ranks. Verifies its own
// postconditions and throws crosscheck_error on any mismatch.
Permutation theta(const Permutation& v, const Permutation& w);

ShuffleData shuffle_data(const Permutation& v, const Permutation& w);

}  // namespace klmult
