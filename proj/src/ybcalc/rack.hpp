#pragma once
// Racks and quandles, their bridge to solutions with trivial right action,
// and the block decomposition of abelian racks.
//
// A rack on {0..n-1} is a binary operation x <| y whose columns x -> x <| y
// are bijections satisfying self-distributivity
//     (x <| y) <| z = (x <| z) <| (y <| z).
// Abelian means the column maps commute pairwise. Such racks decompose into
// orbit blocks on which every column map from a fixed block restricts to one
// shared permutation; that block matrix of local permutations is the
// classification datum, and it rebuilds the rack.

#include <string>
#include <vector>

#include "ybcalc/solution.hpp"

namespace ybcalc {

struct Rack {
  int n = 0;
  std::vector<std::vector<Pt>> op;  // op[x][y] = x <| y
  std::string name;
};

ValidationResult validate_rack(const Rack& r);
bool rack_is_quandle(const Rack& r);   // x <| x = x for all x
bool rack_is_abelian(const Rack& r);   // (x<|y)<|z = (x<|z)<|y for all triples

// Solutions with rho = id correspond to racks via y <| x = lambda_x(y).
// rack_from_solution throws DomainError("nontrivial_rho") otherwise.
Rack rack_from_solution(const Solution& s);
Solution solution_from_rack(const Rack& r);

// Block decomposition of an abelian rack. Blocks are the orbits of the
// column group, ordered by least member; f[i][j] is the restriction to block
// i of the column map of any element of block j, written block-locally (as a
// permutation of positions within blocks[i]).
struct RackData {
  std::vector<std::vector<Pt>> blocks;
  std::vector<std::vector<Perm>> f;  // f[i][j]
  std::string name;
};

// Requires a valid abelian rack (DomainError otherwise). Representative
// independence of f[i][j] is rechecked and an InternalError if violated.
RackData rack_classify(const Rack& r);

// Validity of classification data: block shape, commuting families per
// block, joint transitivity on each block, and freeness (no fixed points on
// nontrivial products). Returns issues; empty means valid.
ValidationResult validate_rack_data(const RackData& d);

// Rebuilds the rack x <| y = f[i][j](x) for x in block i, y in block j.
// Throws DomainError on invalid data; the result is revalidated.
Rack rack_build(const RackData& d);

// Every f[i][j] of valid data acts with all cycles of one length (free
// abelian actions are cycle uniform); exposed for direct checking.
bool rack_cycle_uniformity(const RackData& d);

}  // namespace ybcalc
