#pragma once
// Finite skew braces: two group structures on one set, additive (+) and
// multiplicative (o), tied by a o (b + c) = (a o b) - a + (a o c).
// Every skew brace yields a bijective non-degenerate solution via
// lambda_a(b) = -a + a o b; the socle measures how far that solution is from
// the trivial one, and the socle quotient series mirrors the retract tower.

#include <string>
#include <vector>

#include "ybcalc/solution.hpp"

namespace ybcalc {

using GroupTable = std::vector<std::vector<Pt>>;  // t[a][b] = a*b

struct SkewBrace {
  int n = 0;
  GroupTable add;  // a + b
  GroupTable mul;  // a o b
  std::string name;
};

// Both tables must be groups with one shared identity, and the compatibility
// law must hold on all triples.
ValidationResult validate_brace(const SkewBrace& b);

// The associated solution r(a,b) = (lambda_a(b), rho_b(a)) with
// lambda_a(b) = -a + a o b and rho_b(a) = lambda_u^{-1}(-u + a + u) for
// u = lambda_a(b). Requires a valid brace; the result is revalidated.
Solution brace_solution(const SkewBrace& b);

// Soc(B) = { a : a o b = a + b = b + a for every b }, sorted.
std::vector<Pt> socle(const SkewBrace& b);

struct SocleSeries {
  enum class Kind { FiniteLength, NoFiniteSeries } kind = Kind::NoFiniteSeries;
  int length = -1;                  // steps to the trivial brace when finite
  std::vector<int> quotient_sizes;  // |B|, |B/Soc|, ...
  std::vector<int> socle_sizes;     // socle size at each stage
};

SocleSeries socle_series(const SkewBrace& b);

// The additive commutator subgroup [B,B]_+ generated by -a-b+a+b, with the
// structural flags that decide whether it is an ideal.
struct CommutatorReport {
  std::vector<Pt> elements;  // sorted
  bool add_subgroup = false;
  bool mul_subgroup = false;
  bool add_normal = false;
  bool mul_normal = false;
  bool lambda_invariant = false;
  bool is_ideal = false;  // conjunction of the five flags
};

CommutatorReport additive_commutator(const SkewBrace& b);

// Constructors. Group tables are expected with identity at index 0.
SkewBrace trivial_brace(const GroupTable& g, const std::string& name = "");

// B = A x C with (a,c) o (a',c') = (a + alpha_c(a'), c c') and componentwise
// addition; alpha[c] must be automorphisms of A with alpha a homomorphism.
// Element (a,c) has index a + |A| * c.
SkewBrace semidirect_brace(const GroupTable& A, const GroupTable& C,
                           const std::vector<Perm>& alpha, const std::string& name = "");

// B = A x Aut(A) for abelian A: (a,f) o (b,g) = (a + f(b), fg) and
// (a,f) + (b,g) = (a + b, fg). Element (a,f) has index a + |A| * f_index,
// automorphisms enumerated in lexicographic one-line order.
SkewBrace holomorph_brace(const GroupTable& A, const std::string& name = "");

// Small group tables used by constructors, fixtures and sweeps.
GroupTable group_cyclic(int n);
GroupTable group_direct(const GroupTable& a, const GroupTable& b);  // (x,y) -> x + |a|*y
GroupTable group_dihedral_8();
GroupTable group_quaternion_8();
GroupTable group_symmetric_3();
bool group_table_is_group(const GroupTable& g);  // identity required at index 0

// All automorphisms of a group table, lexicographic by one-line notation.
std::vector<Perm> automorphisms(const GroupTable& g);

}  // namespace ybcalc
