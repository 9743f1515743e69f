#pragma once
// Decision machinery for Malcev nilpotency of the structure monoid.
//
// The exact pieces: the ideal-chain pair condition (searched over closed
// subsets with reachable extended-lambda permutations), the cycle-power
// criterion for permutation-pair solutions (an iff), and the nilpotent-group
// bound for rack-type solutions. The bounded pieces: an identity falsifier
// that looks for explicit violations of the level-k Malcev identities.
// nilpotency_report combines them and never claims more than it verified.

#include <optional>
#include <string>
#include <vector>

#include "ybcalc/monoid.hpp"
#include "ybcalc/retract.hpp"
#include "ybcalc/solution.hpp"

namespace ybcalc {

// All lambda' permutations realized by words over the sub-alphabet W,
// with one witness word each. Exact: states are exactly the reachable
// permutations, discovered breadth first.
struct ReachableLambdas {
  std::vector<Perm> perms;     // discovery order; perms[0] = id (empty word)
  std::vector<Word> witness;   // witness[i] is a word over W with lambda'_w = perms[i]
  bool capped = false;
};

ReachableLambdas reachable_lambdas(const MonoidCalc& calc, const std::vector<Pt>& W,
                                   uint64_t state_cap = 200'000);

struct NcWitness {
  std::vector<Pt> Y, Z;
  Word a, b;      // words over the intersection of Y and Z
  Perm g_a, g_b;  // their extended lambda permutations
};

struct NcVerdict {
  enum class Kind { Satisfied, NotSatisfied, Inconclusive } kind = Kind::NotSatisfied;
  std::optional<NcWitness> witness;
  std::vector<int> searched_sizes;
  std::vector<int> skipped_sizes;  // too many subsets, or a reach fixpoint capped
  uint64_t pairs_examined = 0;
};

// Searches each subset size for a pair of distinct same-size closed subsets
// Y, Z and reachable g_a, g_b over their intersection whose quotient swaps Y
// and Z. Satisfied means the structure monoid cannot be Malcev nilpotent.
NcVerdict nc_search(const MonoidCalc& calc, std::vector<int> sizes = {},
                    uint64_t reach_cap = 200'000, uint64_t max_subsets_per_size = 100'000);

// Replays one explicit witness. Throws DomainError if a or b use letters
// outside the intersection of Y and Z.
bool nc_verify_witness(const MonoidCalc& calc, const std::vector<Pt>& Y,
                       const std::vector<Pt>& Z, const Word& a, const Word& b);

// Cycle-power criterion for r(x,y) = (sigma(y), tau(x)) with commuting
// sigma, tau: the monoid is Malcev nilpotent iff sigma stabilizes every cycle
// of gamma = sigma tau and restricts to a power of it there.
struct LyubashenkoCriterion {
  bool holds = false;
  std::vector<std::vector<Pt>> cycles;  // cycles of gamma, fixed points included
  std::vector<int> exponents;           // per cycle: sigma restricted = cycle^k (when holds)
};

LyubashenkoCriterion lyubashenko_criterion(const Perm& sigma, const Perm& tau);

// Nilpotency bound for solutions with trivial rho (rack type): if the
// permutation group is nilpotent of class c the monoid is Malcev nilpotent of
// class at most c+2, and c+1 when the underlying rack is a quandle.
struct RackBound {
  bool group_nilpotent = false;
  int group_class = -1;
  bool quandle = false;
  int malcev_bound = -1;  // set when group_nilpotent
  bool capped = false;
};

std::optional<RackBound> rack_nilpotency_bound(const Solution& s,
                                               uint64_t closure_cap = kDefaultClosureCap);

// Bounded search for violations of the level-cls Malcev identity, words up to
// the given length (empty word included). A substitution that already agrees
// at some level cannot disagree later, so agreeing branches are pruned. A
// counterexample proves the monoid is not nilpotent of class <= cls; it says
// nothing about higher classes, which use strictly weaker identities.
struct MalcevCounterexample {
  Word x, y;
  std::vector<Word> z;  // z_1 .. z_level
  int level = 0;
};

struct FalsifierResult {
  std::optional<MalcevCounterexample> counterexample;
  int cls = 0;
  uint32_t len = 0;
  uint64_t comparisons = 0;
  uint64_t overflowed = 0;  // comparisons left undecided by the node cap
  bool truncated = false;   // stopped early after too many undecided comparisons
};

FalsifierResult malcev_falsify(const MonoidCalc& calc, int cls, uint32_t len,
                               uint64_t overflow_budget = 32);

// One subset-size layer of the divisibility ideal chain with connectivity.
struct UniformLevel {
  int size = 0;
  std::vector<SubsetState> states;  // the layer members, lexicographic
  SimResult sim;
};

std::vector<UniformLevel> uniform_components(const MonoidCalc& calc, uint32_t d,
                                             std::vector<int> sizes = {},
                                             uint64_t word_budget = 200'000,
                                             uint64_t max_subsets_per_size = 100'000);

struct AnalysisOptions {
  uint64_t class_cap = kDefaultClassCap;
  uint64_t closure_cap = kDefaultClosureCap;
  int malcev_class = 3;
  uint32_t malcev_len = 3;
  int d_retries = 6;
  uint64_t reach_cap = 200'000;
  uint64_t max_subsets_per_size = 100'000;
  uint64_t sim_word_budget = 200'000;
  uint64_t falsifier_overflow_budget = 32;
  bool run_falsifier = true;
  bool run_components = true;
};

struct NilpotencyReport {
  SolutionStats stats;
  bool permutation_pair = false;  // all lambda rows equal and all rho rows equal
  std::optional<LyubashenkoCriterion> lyubashenko;
  PermGroupReport groups;
  std::optional<RackBound> rack_bound;
  DConstant d;
  std::optional<NcVerdict> nc;
  std::vector<UniformLevel> levels;
  std::optional<FalsifierResult> falsifier;
  // not_nilpotent: an exact obstruction fired (pair condition satisfied,
  //   non-nilpotent lambda group, or a failed permutation-pair criterion).
  // nilpotent_evidence: an exact sufficient criterion fired.
  // undetermined: neither; reasons carry the partial facts. In particular a
  //   falsifier counterexample at level k appears here as
  //   not_nilpotent_of_class_at_most_k — the identities weaken as the level
  //   grows, so failing level k leaves every higher class open.
  std::string verdict;  // not_nilpotent | nilpotent_evidence | undetermined
  std::vector<std::string> reasons;
  std::vector<std::string> skipped;  // analysis stages not run, with cause
};

NilpotencyReport nilpotency_report(const Solution& s, const AnalysisOptions& opts = {});

}  // namespace ybcalc
