#pragma once
// Retract quotients and multipermutation level.
//
// Two elements are identified when they have the same lambda row and the same
// rho row; the quotient inherits well-defined tables and is a solution again.
// Iterating either reaches a single point (finite multipermutation level),
// stalls (irretractable), or runs past the step cap.

#include <vector>

#include "ybcalc/solution.hpp"

namespace ybcalc {

struct RetractPartition {
  std::vector<int> class_of;             // element -> class index
  std::vector<std::vector<Pt>> classes;  // ordered by least member, members ascending
};

RetractPartition retract_partition(const Solution& s);

// Quotient solution on the partition, representatives are least members.
// Checks representative independence and revalidates; a failure of either is
// an InternalError since the quotient construction is a theorem.
Solution retract(const Solution& s);

struct MplResult {
  enum class Kind { Finite, Irretractable, CapExceeded } kind = Kind::CapExceeded;
  int level = -1;                // number of retract steps to reach one point
  std::vector<int> tower_sizes;  // |X|, |Ret(X)|, |Ret^2(X)|, ...
};

// cap = maximum retract steps; 0 means n+1 which is always enough since each
// productive step strictly shrinks the set.
MplResult mpl_tower(const Solution& s, int cap = 0);

}  // namespace ybcalc
