#pragma once
// Naive permutation group machinery. Every group that shows up here is small
// enough that an explicit element list is the simplest thing that works, so
// closure is a plain breadth-first product sweep with a node cap.

#include <cstdint>
#include <optional>
#include <vector>

#include "ybcalc/perm.hpp"

namespace ybcalc {

inline constexpr uint64_t kDefaultClosureCap = 10'000'000;

struct GroupClosure {
  std::vector<Perm> elements;  // discovery order; elements[0] is the identity
  bool capped = false;         // element list incomplete, cap was hit
  uint64_t order() const { return elements.size(); }
};

// Closure of <gens> inside Sym(degree). Stops once the element count would
// exceed `cap` and marks the result capped.
GroupClosure group_closure(int degree, const std::vector<Perm>& gens, uint64_t cap = kDefaultClosureCap);

// lcm of the element orders. Meaningless on a capped closure.
uint64_t group_exponent(const GroupClosure& g);

struct NilpotencyInfo {
  bool nilpotent = false;
  int cls = -1;                       // nilpotency class when nilpotent (trivial group: 0)
  std::vector<uint64_t> series_orders;  // orders along the lower central series, starting at |G|
  bool capped = false;                // some closure hit the cap; verdict unreliable
};

// Lower central series by brute force: step k+1 is the subgroup generated by
// all commutators [a, b] with a in step k and b in G. Terminates at the
// trivial subgroup (nilpotent, class = number of steps) or at a repeated
// nontrivial term (not nilpotent).
NilpotencyInfo nilpotency_class(const GroupClosure& g, uint64_t cap = kDefaultClosureCap);

// Block-diagonal embedding: tuples (p_1,...,p_k) of degree-n permutations as
// one permutation of k*n points, component i acting on [i*n, (i+1)*n).
Perm tuple_embed(const std::vector<Perm>& components, int n);

}  // namespace ybcalc
