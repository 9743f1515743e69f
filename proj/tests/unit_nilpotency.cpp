// Nilpotency machinery: reachable extended-lambda states, the pair-condition
// search and witness replay, the cycle-power criterion, the rack-type group
// bound, the identity falsifier and the combined report.
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ybcalc/nilpotency.hpp"
#include "ybcalc/permgroup.hpp"

using namespace ybcalc;

namespace {

Word concat3(const Word& a, const Word& b, const Word& c) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

// Replays a falsifier counterexample: rebuilds the word pair at each level
// and confirms the violation (and that no earlier level already agreed).
void check_counterexample(const MonoidCalc& calc, const MalcevCounterexample& ce) {
  REQUIRE(static_cast<int>(ce.z.size()) == ce.level);
  Word x = ce.x, y = ce.y;
  for (int k = 0; k < ce.level; ++k) {
    Word nx = concat3(x, ce.z[k], y);
    Word ny = concat3(y, ce.z[k], x);
    x = nx;
    y = ny;
    CHECK(calc.m_equal(x, y) == Tri::False);
  }
}

bool has_reason(const NilpotencyReport& rep, const std::string& reason) {
  return std::find(rep.reasons.begin(), rep.reasons.end(), reason) != rep.reasons.end();
}

}  // namespace

TEST_CASE("reachable extended-lambda states are closed and carry true witnesses") {
  for (const auto& name : {"nc_example.json", "cyclic_neg_z4.json", "mpl2_4.json"}) {
    CAPTURE(name);
    Solution s = ybtest::load_solution(name);
    MonoidCalc calc(s);
    std::vector<std::vector<Pt>> subsets = {{0}, {0, 2}, {0, 1, 2, 3}};
    for (const auto& W : subsets) {
      ReachableLambdas r = reachable_lambdas(calc, W);
      REQUIRE(!r.capped);
      REQUIRE(!r.perms.empty());
      CHECK(r.perms[0] == perm_identity(s.n));
      REQUIRE(r.witness.size() == r.perms.size());
      std::set<Perm> states(r.perms.begin(), r.perms.end());
      CHECK(states.size() == r.perms.size());  // no duplicates
      for (size_t i = 0; i < r.perms.size(); ++i) {
        for (Pt letter : r.witness[i])
          CHECK(std::find(W.begin(), W.end(), letter) != W.end());
        CHECK(calc.lambda_ext_a(r.witness[i]) == r.perms[i]);
        // closure: extending any witness by any letter stays in the state set
        for (Pt w : W) {
          Word ext = r.witness[i];
          ext.push_back(w);
          CHECK(states.count(calc.lambda_ext_a(ext)) == 1);
        }
      }
    }
  }
}

TEST_CASE("pair condition is found and replayable on the positive fixtures") {
  for (const auto& name : {"nc_example.json", "nc_variant_4.json"}) {
    CAPTURE(name);
    Solution s = ybtest::load_solution(name);
    MonoidCalc calc(s);
    NcVerdict v = nc_search(calc);
    REQUIRE(v.kind == NcVerdict::Kind::Satisfied);
    REQUIRE(v.witness.has_value());
    const NcWitness& w = *v.witness;
    CHECK(w.Y != w.Z);
    CHECK(w.Y.size() == w.Z.size());
    CHECK(nc_verify_witness(calc, w.Y, w.Z, w.a, w.b));
    CHECK(calc.lambda_ext_a(w.a) == w.g_a);
    CHECK(calc.lambda_ext_a(w.b) == w.g_b);
  }
}

TEST_CASE("explicit witness replay accepts the known pair and rejects tampering") {
  Solution s = ybtest::load_solution("nc_example.json");
  MonoidCalc calc(s);
  std::vector<Pt> Y = {0, 2}, Z = {0, 3};

  CHECK(nc_verify_witness(calc, Y, Z, Word{0}, Word{0, 0}));
  CHECK(nc_verify_witness(calc, Y, Z, Word{}, Word{0}));

  // identity pair: the quotient fixes Y instead of swapping it with Z
  CHECK(!nc_verify_witness(calc, Y, Z, Word{}, Word{}));
  // equal subsets are not a valid pair
  CHECK(!nc_verify_witness(calc, Y, Y, Word{}, Word{0}));
  // letters must come from the intersection of Y and Z
  CHECK_THROWS_AS(nc_verify_witness(calc, Y, Z, Word{1}, Word{0}), DomainError);
  CHECK_THROWS_AS(nc_verify_witness(calc, Y, Z, Word{0}, Word{2}), DomainError);
}

TEST_CASE("pair condition search is negative on the cyclic fixtures") {
  for (const auto& name : {"cyclic_neg_z3.json", "cyclic_neg_z4.json"}) {
    CAPTURE(name);
    Solution s = ybtest::load_solution(name);
    MonoidCalc calc(s);
    NcVerdict v = nc_search(calc);
    CHECK(v.kind == NcVerdict::Kind::NotSatisfied);
    CHECK(v.skipped_sizes.empty());
    CHECK(!v.witness.has_value());
  }
}

TEST_CASE("layer connectivity isolates exactly one two-element component") {
  auto degree2_component = [](const UniformLevel& level) {
    std::map<int, std::vector<int>> comps;
    for (size_t i = 0; i < level.sim.component_of.size(); ++i)
      comps[level.sim.component_of[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> degree2;
    for (auto& [id, mem] : comps)
      if (mem.size() == 2) degree2.push_back(mem);
    return degree2;
  };

  SUBCASE("three points") {
    Solution s = ybtest::load_solution("cyclic_neg_z3.json");
    MonoidCalc calc(s);
    DConstant d = compute_d(calc);
    REQUIRE(d.d.has_value());
    auto levels = uniform_components(calc, *d.d, {1});
    REQUIRE(levels.size() == 1);
    const UniformLevel& l1 = levels[0];
    REQUIRE(l1.sim.members.size() == 3);
    CHECK(l1.sim.unknown_pairs.empty());
    CHECK(!l1.sim.budget_exhausted);
    auto deg2 = degree2_component(l1);
    REQUIRE(deg2.size() == 1);
    CHECK(l1.sim.members[deg2[0][0]] == std::vector<Pt>{1});
    CHECK(l1.sim.members[deg2[0][1]] == std::vector<Pt>{2});
  }
  SUBCASE("four points") {
    Solution s = ybtest::load_solution("cyclic_neg_z4.json");
    MonoidCalc calc(s);
    DConstant d = compute_d(calc);
    REQUIRE(d.d.has_value());
    auto levels = uniform_components(calc, *d.d, {1});
    REQUIRE(levels.size() == 1);
    const UniformLevel& l1 = levels[0];
    REQUIRE(l1.sim.members.size() == 4);
    CHECK(l1.sim.unknown_pairs.empty());
    auto deg2 = degree2_component(l1);
    REQUIRE(deg2.size() == 1);
    CHECK(l1.sim.members[deg2[0][0]] == std::vector<Pt>{1});
    CHECK(l1.sim.members[deg2[0][1]] == std::vector<Pt>{3});
  }
}

TEST_CASE("cycle-power criterion on hand-checked permutation pairs") {
  SUBCASE("disjoint transpositions") {
    LyubashenkoCriterion c =
        lyubashenko_criterion(perm_transposition(4, 0, 1), perm_transposition(4, 2, 3));
    REQUIRE(c.holds);
    REQUIRE(c.cycles.size() == 2);
    CHECK(c.cycles[0] == std::vector<Pt>{0, 1});
    CHECK(c.cycles[1] == std::vector<Pt>{2, 3});
    CHECK(c.exponents == std::vector<int>{1, 0});
  }
  SUBCASE("both identity") {
    LyubashenkoCriterion c = lyubashenko_criterion(perm_identity(3), perm_identity(3));
    CHECK(c.holds);
    CHECK(c.cycles.size() == 3);
    CHECK(c.exponents == std::vector<int>{0, 0, 0});
  }
  SUBCASE("shift by one on an odd cycle: sigma is a square of gamma") {
    Perm shift = {1, 2, 0};
    LyubashenkoCriterion c = lyubashenko_criterion(shift, shift);
    REQUIRE(c.holds);
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.exponents == std::vector<int>{2});
  }
  SUBCASE("shift by one on an even cycle: sigma leaves the gamma-cycles") {
    Perm shift = {1, 2, 3, 0};
    LyubashenkoCriterion c = lyubashenko_criterion(shift, shift);
    CHECK(!c.holds);
    CHECK(c.cycles.size() == 2);
  }
  SUBCASE("sigma equal to gamma") {
    Perm g = {1, 0, 3, 2};
    LyubashenkoCriterion c = lyubashenko_criterion(g, perm_identity(4));
    REQUIRE(c.holds);
    CHECK(c.exponents == std::vector<int>{1, 1});
  }
}

TEST_CASE("identity falsifier finds nothing on the nilpotent permutation fixture") {
  Solution s = ybtest::load_solution("lyubashenko_4.json");
  MonoidCalc calc(s);
  FalsifierResult f = malcev_falsify(calc, 2, 2);
  CHECK(!f.counterexample.has_value());
  CHECK(f.overflowed == 0);
  CHECK(!f.truncated);
}

TEST_CASE("identity falsifier exhibits a level-3 violation on the four-point cyclic fixture") {
  Solution s = ybtest::load_solution("cyclic_neg_z4.json");
  MonoidCalc calc(s);
  FalsifierResult f = malcev_falsify(calc, 3, 3);
  REQUIRE(f.counterexample.has_value());
  CHECK(f.counterexample->level == 3);
  CHECK(f.overflowed == 0);
  CHECK(!f.truncated);
  check_counterexample(calc, *f.counterexample);

  // a larger length budget keeps finding a violation
  FalsifierResult wider = malcev_falsify(calc, 3, 4);
  REQUIRE(wider.counterexample.has_value());
  check_counterexample(calc, *wider.counterexample);
}

TEST_CASE("rack-type bound: nilpotent column group caps the falsifier's reach") {
  SUBCASE("quandle with an abelian group: bound is class two") {
    Solution s = ybtest::load_solution("mpl2_4.json");
    auto bound = rack_nilpotency_bound(s);
    REQUIRE(bound.has_value());
    CHECK(bound->group_nilpotent);
    CHECK(bound->group_class == 1);
    CHECK(bound->quandle);
    CHECK(bound->malcev_bound == 2);
    MonoidCalc calc(s);
    FalsifierResult f = malcev_falsify(calc, bound->malcev_bound, 2);
    CHECK(!f.counterexample.has_value());
    CHECK(f.overflowed == 0);
  }
  SUBCASE("non-quandle rack with an abelian group: bound is class three") {
    Solution s;
    s.n = 2;
    s.lam = {{1, 0}, {1, 0}};  // constant rack: every column map is the swap
    s.rho = {{0, 1}, {0, 1}};
    REQUIRE(validate_solution(s).valid);
    auto bound = rack_nilpotency_bound(s);
    REQUIRE(bound.has_value());
    CHECK(bound->group_nilpotent);
    CHECK(bound->group_class == 1);
    CHECK(!bound->quandle);
    CHECK(bound->malcev_bound == 3);
    MonoidCalc calc(s);
    FalsifierResult f = malcev_falsify(calc, bound->malcev_bound, 2);
    CHECK(!f.counterexample.has_value());
  }
  SUBCASE("rack whose column group is not nilpotent carries no bound") {
    Solution s = ybtest::load_solution("conj_inv_s3.json");
    auto bound = rack_nilpotency_bound(s);
    REQUIRE(bound.has_value());
    CHECK(!bound->group_nilpotent);
  }
  SUBCASE("solutions with a nontrivial right action are not rack type") {
    Solution s = ybtest::load_solution("nc_example.json");
    CHECK(!rack_nilpotency_bound(s).has_value());
  }
}

TEST_CASE("combined report on the permutation fixture: nilpotent evidence") {
  Solution s = ybtest::load_solution("lyubashenko_4.json");
  NilpotencyReport rep = nilpotency_report(s);
  CHECK(rep.verdict == "nilpotent_evidence");
  CHECK(has_reason(rep, "lyubashenko_criterion_holds"));
  CHECK(rep.permutation_pair);
  REQUIRE(rep.lyubashenko.has_value());
  CHECK(rep.lyubashenko->holds);
}

TEST_CASE("combined report on the even shift: the criterion refutes nilpotency") {
  Solution s = ybtest::load_solution("shift_z4.json");
  NilpotencyReport rep = nilpotency_report(s);
  CHECK(rep.verdict == "not_nilpotent");
  CHECK(has_reason(rep, "lyubashenko_criterion_fails"));
  REQUIRE(rep.lyubashenko.has_value());
  CHECK(!rep.lyubashenko->holds);
  // independent cross-check: the pair condition alone is negative here, so
  // the refutation must genuinely come from the criterion
  MonoidCalc calc(s);
  CHECK(nc_search(calc).kind == NcVerdict::Kind::NotSatisfied);
}

TEST_CASE("combined report on the conjugation solution: lambda group shadow") {
  Solution s = ybtest::load_solution("conj_inv_s3.json");
  NilpotencyReport rep = nilpotency_report(s);
  CHECK(rep.verdict == "not_nilpotent");
  CHECK(has_reason(rep, "lambda_group_not_nilpotent"));
  // independent oracle: close the lambda rows and walk the lower central series
  GroupClosure g = group_closure(s.n, s.lam);
  REQUIRE(!g.capped);
  NilpotencyInfo info = nilpotency_class(g);
  CHECK(!info.nilpotent);
}

TEST_CASE("combined report on the pair-condition fixtures: exact refutation") {
  for (const auto& name : {"nc_example.json", "nc_variant_4.json"}) {
    CAPTURE(name);
    Solution s = ybtest::load_solution(name);
    NilpotencyReport rep = nilpotency_report(s);
    CHECK(rep.verdict == "not_nilpotent");
    CHECK(has_reason(rep, "pair_condition_satisfied"));
    REQUIRE(rep.nc.has_value());
    CHECK(rep.nc->kind == NcVerdict::Kind::Satisfied);
  }
}

TEST_CASE("combined report on the four-point cyclic fixture stays undetermined") {
  // A level-3 identity violation refutes class <= 3 only; the report must
  // not upgrade it to a full refutation.
  Solution s = ybtest::load_solution("cyclic_neg_z4.json");
  NilpotencyReport rep = nilpotency_report(s);
  CHECK(rep.verdict == "undetermined");
  CHECK(has_reason(rep, "not_nilpotent_of_class_at_most_3"));
  CHECK(has_reason(rep, "pair_condition_not_satisfied"));
  REQUIRE(rep.falsifier.has_value());
  REQUIRE(rep.falsifier->counterexample.has_value());
  MonoidCalc calc(s);
  check_counterexample(calc, *rep.falsifier->counterexample);
}

TEST_CASE("combined report on the rack fixture cites the group bound") {
  Solution s = ybtest::load_solution("mpl2_4.json");
  NilpotencyReport rep = nilpotency_report(s);
  CHECK(rep.verdict == "nilpotent_evidence");
  CHECK(has_reason(rep, "rack_group_bound_class_at_most_2"));
  REQUIRE(rep.rack_bound.has_value());
  CHECK(rep.rack_bound->malcev_bound == 2);
}
