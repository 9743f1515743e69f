#pragma once
// Word calculus for the structure monoid M of a solution and its additive
// companion A (the structure monoid of the left derived solution).
//
// Words over X represent monoid elements. Equality in A is decided by closing
// a word under the length-preserving rewriting moves
//     (u, v) -> (v, sigma_v(u))      and its inverse
// applied at every adjacent position; these are exactly the defining
// relations, so the closure is the congruence class. Equality in M reduces to
// equality in A through the bijective 1-cocycle pi.
//
// Every closure is bounded by a node cap. Hitting the cap is reported as an
// explicit Overflow verdict, never silently treated as inequality.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ybcalc/errors.hpp"
#include "ybcalc/solution.hpp"

namespace ybcalc {

inline constexpr uint64_t kDefaultClassCap = 1'000'000;

class MonoidCalc {
 public:
  explicit MonoidCalc(const Solution& s, uint64_t class_cap = kDefaultClassCap);

  const Solution& solution() const { return sol_; }
  int n() const { return sol_.n; }
  uint64_t class_cap() const { return class_cap_; }
  const std::vector<Perm>& sigma() const { return sigma_; }

  struct ClassInfo {
    Word canon;               // lexicographically least member
    std::vector<Pt> divisors;  // sorted letters dividing the class (= letters appearing)
    uint64_t size = 0;
  };

  // Congruence class of an A-word; nullptr when the closure exceeds the node
  // cap. Complete classes are memoized for every member word.
  std::shared_ptr<const ClassInfo> a_class(const Word& a) const;

  // True when every derived permutation sigma_y is the same map gamma. In
  // that case A-equality has an exact closed form (see uniform_equal) and
  // never overflows.
  bool sigma_uniform() const { return uniform_; }

  // Equality in A. Uses the closed form when sigma is uniform; otherwise
  // memoized canonical forms when available, then a bidirectional bounded
  // search. node_cap = 0 means the instance-wide class cap; a smaller value
  // bounds just this comparison (useful for cheap give-up in deep searches).
  Tri a_equal(const Word& a, const Word& b, uint64_t node_cap = 0) const;

  // The bijective 1-cocycle pi : M -> A and its inverse (exact on words).
  Word pi_forward(const Word& m) const;
  Word pi_inverse(const Word& a) const;

  // lambda'_m: the lambda action extended to M, composed over the letters.
  Perm lambda_ext_m(const Word& m) const;
  // lambda'_{pi^{-1}(a)}, computed without materializing the preimage.
  Perm lambda_ext_a(const Word& a) const;

  // Equality in M through pi.
  Tri m_equal(const Word& m1, const Word& m2, uint64_t node_cap = 0) const;

 private:
  std::shared_ptr<const ClassInfo> closure(const Word& a, uint64_t cap) const;
  // Exact equality decision when sigma is uniform. Each rewriting move keeps
  // the moving letter and twists the jumped-over letter by gamma^{+-1}, so a
  // congruence is a permutation of letter positions plus a twist count per
  // letter; the reachable (permutation, twists) pairs have a closed
  // description that reduces to orbit bookkeeping and one parity check.
  Tri uniform_equal(const Word& a, const Word& b) const;

  Solution sol_;
  uint64_t class_cap_;
  std::vector<Perm> sigma_;      // sigma_[v][u] = second output of the derived move
  std::vector<Perm> sigma_inv_;
  std::vector<Perm> lam_inv_;

  bool uniform_ = false;          // all sigma_y equal (call the common map gamma)
  std::vector<int> orbit_id_;     // gamma-orbit index of each point
  std::vector<int> orbit_pos_;    // position of each point along its gamma-cycle
  std::vector<int> orbit_len_;    // length of each point's gamma-cycle

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, std::shared_ptr<const ClassInfo>, PermHash> memo_;
};

// The constant d: d*x must be central in A with trivial extended lambda, for
// every letter x. The search starts at the exponent of the group generated by
// all lambda_x and sigma_x (at least 2) and doubles on failure.
struct DConstant {
  std::optional<uint32_t> d;
  uint32_t start = 0;      // first candidate tried
  int doublings = 0;       // doublings consumed when found
  bool overflow = false;   // some verification step hit a node cap
  std::string failure;     // nonempty when d is absent: closure_cap | no_valid_d
};

DConstant compute_d(const MonoidCalc& calc, int max_doublings = 6,
                    uint64_t closure_cap = kDefaultClosureCap);

// Checks the two defining properties of d on all letters / letter pairs.
Tri is_valid_d(const MonoidCalc& calc, uint32_t d);

// State of one subset Y for the divisibility-ideal analysis at a given d.
struct SubsetState {
  std::vector<Pt> subset;  // sorted
  Word block_word;         // each y in Y repeated d times, ascending
  bool s_closed = false;   // Y closed under the derived moves
  bool in_lu = false;      // member of the level-|Y| layer; equals s_closed for a verified d
  std::shared_ptr<const MonoidCalc::ClassInfo> cls;  // class of block_word, null if over cap
  bool divisors_cross_checked = false;  // cls was present and agreed with s_closed
};

SubsetState subset_state(const MonoidCalc& calc, const std::vector<Pt>& Y, uint32_t d);

// Membership of an A-word in the translation set M_{YZ}: the class of `a`
// must have divisor set exactly Y and lambda'_a must carry Z onto Y.
Tri component_membership(const MonoidCalc& calc, const Word& a, const std::vector<Pt>& Y,
                         const std::vector<Pt>& Z);

// Bounded witness search connecting same-size layer members. An edge (Y,Z)
// records an explicit word in M_{YZ}. A pair without a witness is exactly
// inequivalent when no element of the (complete) lambda group carries either
// subset onto the other; otherwise it is reported Unknown, never silently
// distinct.
struct SimEdge {
  int from = 0, to = 0;
  Word witness;
};

struct SimResult {
  std::vector<std::vector<Pt>> members;        // the layer, lexicographic order
  std::vector<SimEdge> edges;
  std::vector<std::pair<int, int>> unknown_pairs;
  std::vector<int> component_of;               // connected components over found edges
  uint64_t words_examined = 0;
  bool budget_exhausted = false;
};

SimResult sim_classes(const MonoidCalc& calc, const std::vector<std::vector<Pt>>& members,
                      uint32_t d, uint64_t word_budget = 200'000, uint32_t len_cap = 0);

}  // namespace ybcalc
