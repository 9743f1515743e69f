#pragma once
// Exhaustive enumeration of small structures, used as independent oracles by
// the test suite. Orders are deliberately capped; these are correctness
// anchors, not production search tools.

#include <cstdint>
#include <functional>

#include "ybcalc/rack.hpp"
#include "ybcalc/solution.hpp"

namespace ybcalc {

// All valid solutions on n points (n <= 3), in lexicographic order of the
// combined (lambda rows, rho rows) table. The callback may return false to
// stop early; the return value counts valid structures visited.
std::uint64_t enumerate_solutions(int n, const std::function<bool(const Solution&)>& cb = {});

// All valid racks on n points (n <= 4), lexicographic in the column
// permutation tuple (phi_0, ..., phi_{n-1}) where x <| y = phi_y(x).
std::uint64_t enumerate_racks(int n, const std::function<bool(const Rack&)>& cb = {});

// All valid block descriptions (partition plus commuting local families that
// act transitively and freely) on n points (n <= 4). Partitions run in
// restricted-growth-string order, local maps in lexicographic order.
std::uint64_t enumerate_abelian_rack_data(int n, const std::function<bool(const RackData&)>& cb = {});

}  // namespace ybcalc
