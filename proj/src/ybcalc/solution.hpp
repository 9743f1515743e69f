#pragma once
// Finite set-theoretic solutions of the Yang-Baxter equation.
//
// A solution on X = {0..n-1} is r(x,y) = (lam[x][y], rho[y][x]) where every
// lam[x] and rho[y] is a permutation (non-degeneracy) and r satisfies the
// braid relation on X^3. The validator checks the three equivalent
// component conditions plus bijectivity of r itself.

#include <optional>
#include <string>
#include <vector>

#include "ybcalc/errors.hpp"
#include "ybcalc/perm.hpp"
#include "ybcalc/permgroup.hpp"

namespace ybcalc {

struct Solution {
  int n = 0;
  std::vector<Perm> lam;  // lam[x][y] = lambda_x(y), left action of x
  std::vector<Perm> rho;  // rho[y][x] = rho_y(x), right action of y
  std::string name;
};

struct ValidationIssue {
  std::string code;            // non_permutation_row | ybe_condition_failure | not_bijective
  std::string message;
  std::vector<int> where;      // row index, condition id + witness triple, or colliding pair
};

struct ValidationResult {
  bool valid = true;
  std::vector<ValidationIssue> issues;
};

// Checks shape, non-degeneracy, the three braid-equivalent conditions and
// bijectivity of r. Collects every failure rather than stopping at the first.
ValidationResult validate_solution(const Solution& s);

// Direct braid-relation check on all of X^3. Redundant with validate_solution
// by construction; kept as an independent cross-check for tests.
bool braid_holds(const Solution& s);

struct SolutionStats {
  bool involutive = false;   // r^2 = id
  bool square_free = false;  // r(x,x) = (x,x) for all x
  uint64_t r_order = 0;      // order of r as a permutation of X^2
};

SolutionStats solution_stats(const Solution& s);

// Components of the inverse map r^{-1}(x,y) = (lam_hat[x][y], rho_hat[y][x]).
struct HatMaps {
  std::vector<Perm> lam_hat;
  std::vector<Perm> rho_hat;
};

// Requires r bijective (throws DomainError otherwise).
HatMaps invert(const Solution& s);

enum class Side { Left, Right };

// Left derived solution (x,y) -> (y, sigma_y(x)) with
// sigma_y(x) = lam_y(rho_{lam_x^{-1}(y)}(x)); right derived is the mirror
// (x,y) -> (tau_x(y), x). Both are solutions again (revalidated).
Solution derived(const Solution& s, Side side);

// The permutations sigma_y of the left derived solution, indexed by y.
std::vector<Perm> derived_sigma(const Solution& s);

// Permutation-pair solution r(x,y) = (sigma(y), tau(x)). Defined exactly when
// sigma and tau commute; throws DomainError("non_commuting") otherwise.
Solution permutation_solution(const Perm& sigma, const Perm& tau, const std::string& name = "");

// lambda_x extended letterwise to words: lambda_x(y1...yk) keeps length k.
Word lambda_act_letter(const Solution& s, Pt x, const Word& m);
// lambda extended to a word acting on a word (compose letter actions).
Word lambda_act_word(const Solution& s, const Word& a, const Word& m);
// rho_y extended to words, acting on the right.
Word rho_act_letter(const Solution& s, Pt y, const Word& m);
Word rho_act_word(const Solution& s, const Word& b, const Word& m);

struct GroupReportEntry {
  uint64_t order = 0;
  bool capped = false;
  NilpotencyInfo nil;
};

// The permutation groups attached to a solution: the one-sided images, the
// pair and 4-tuple diagonal embeddings (whose orders agree for bijective
// solutions), and the group of the left derived solution.
struct PermGroupReport {
  GroupReportEntry g_lambda;          // <lambda_x>
  GroupReportEntry g_rho;             // <rho_x>
  GroupReportEntry g_sigma;           // <sigma_x> of the left derived solution
  GroupReportEntry g_lambda_rho;      // <(lambda_x, rho_x^{-1})> on 2n points
  GroupReportEntry g_lambda_hat;      // <(lambda_x, hat-lambda_x)> on 2n points
  GroupReportEntry g_full;            // <(lambda_x, rho_x^{-1}, hat-lambda_x, hat-rho_x^{-1})> on 4n points
};

PermGroupReport perm_group_report(const Solution& s, uint64_t closure_cap = kDefaultClosureCap);

}  // namespace ybcalc
