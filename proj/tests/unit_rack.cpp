// Racks and quandles: validation, the bridge to trivial-right-action
// solutions, and the block classification of abelian racks.
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ybcalc/enumerate.hpp"
#include "ybcalc/rack.hpp"

using namespace ybcalc;

namespace {

bool rack_tables_equal(const Rack& a, const Rack& b) { return a.n == b.n && a.op == b.op; }

bool data_tables_equal(const RackData& a, const RackData& b) {
  return a.blocks == b.blocks && a.f == b.f;
}

Rack trivial_rack(int n) {
  Rack r;
  r.n = n;
  r.op.assign(n, std::vector<Pt>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.op[x][y] = static_cast<Pt>(x);
  return r;
}

bool has_issue(const ValidationResult& v, const std::string& code) {
  for (const auto& i : v.issues)
    if (i.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("rack fixtures validate with the expected quandle and abelian flags") {
  Rack dihedral = ybtest::load_rack("dihedral_rack_3.json");
  CHECK(validate_rack(dihedral).valid);
  CHECK(rack_is_quandle(dihedral));
  CHECK(!rack_is_abelian(dihedral));

  Rack constant = ybtest::load_rack("constant_rack_2.json");
  CHECK(validate_rack(constant).valid);
  CHECK(!rack_is_quandle(constant));
  CHECK(rack_is_abelian(constant));

  Rack trivial = trivial_rack(4);
  CHECK(validate_rack(trivial).valid);
  CHECK(rack_is_quandle(trivial));
  CHECK(rack_is_abelian(trivial));
}

TEST_CASE("rack validator rejects broken tables with the documented codes") {
  SUBCASE("column fails bijectivity") {
    Rack r = trivial_rack(3);
    r.op[0][1] = 1;  // column 1 now sends both 0 and 1 to 1
    ValidationResult v = validate_rack(r);
    REQUIRE(!v.valid);
    CHECK(has_issue(v, "rack_column_not_bijective"));
  }
  SUBCASE("columns bijective but self-distributivity fails") {
    Rack r;
    r.n = 2;
    // x <| 0 = x, x <| 1 = swap(x): (x<|1)<|1 = x but (x<|1)<|(1<|1) = swap(x)
    r.op = {{0, 1}, {1, 0}};
    ValidationResult v = validate_rack(r);
    REQUIRE(!v.valid);
    CHECK(has_issue(v, "self_distributivity_failure"));
  }
}

TEST_CASE("bridge between racks and solutions with trivial right action") {
  SUBCASE("round trip through the solution and back") {
    for (const auto& name : {"dihedral_rack_3.json", "constant_rack_2.json"}) {
      CAPTURE(name);
      Rack r = ybtest::load_rack(name);
      Solution s = solution_from_rack(r);
      CHECK(validate_solution(s).valid);
      for (int y = 0; y < s.n; ++y) CHECK(perm_is_identity(s.rho[y]));
      // y <| x = lambda_x(y)
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) CHECK(s.lam[x][y] == r.op[y][x]);
      CHECK(rack_tables_equal(rack_from_solution(s), r));
    }
  }
  SUBCASE("solutions with a nontrivial right action are rejected") {
    Solution s = ybtest::load_solution("nc_example.json");
    CHECK_THROWS_AS(rack_from_solution(s), DomainError);
    try {
      rack_from_solution(s);
    } catch (const DomainError& e) {
      CHECK(e.code() == "nontrivial_rho");
    }
  }
  SUBCASE("every enumerated rack on up to three points round-trips") {
    enumerate_racks(3, [](const Rack& r) {
      Solution s = solution_from_rack(r);
      CHECK(validate_solution(s).valid);
      CHECK(rack_tables_equal(rack_from_solution(s), r));
      return true;
    });
  }
}

TEST_CASE("block classification of the two-element constant rack") {
  Rack r = ybtest::load_rack("constant_rack_2.json");
  RackData d = rack_classify(r);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0] == std::vector<Pt>{0, 1});
  REQUIRE(d.f.size() == 1);
  REQUIRE(d.f[0].size() == 1);
  CHECK(d.f[0][0] == Perm{1, 0});
  CHECK(validate_rack_data(d).valid);
  CHECK(rack_cycle_uniformity(d));
  CHECK(rack_tables_equal(rack_build(d), r));
}

TEST_CASE("classification requires an abelian rack") {
  Rack dihedral = ybtest::load_rack("dihedral_rack_3.json");
  CHECK_THROWS_AS(rack_classify(dihedral), DomainError);
  try {
    rack_classify(dihedral);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not_abelian");
  }
}

TEST_CASE("two-block description builds a valid abelian rack and classifies back") {
  RackData d = ybtest::load_rack_data("two_block_data_4.json");
  REQUIRE(validate_rack_data(d).valid);
  Rack r = rack_build(d);
  CHECK(validate_rack(r).valid);
  CHECK(rack_is_abelian(r));
  RackData back = rack_classify(r);
  CHECK(data_tables_equal(back, d));
}

TEST_CASE("rack data validator pinpoints each axiom") {
  RackData good = ybtest::load_rack_data("two_block_data_4.json");
  REQUIRE(validate_rack_data(good).valid);

  SUBCASE("local map off its block") {
    RackData d = good;
    d.f[0][0] = Perm{0, 1, 2};  // wrong degree for a block of size 2
    CHECK(has_issue(validate_rack_data(d), "bad_local_map"));
  }
  SUBCASE("overlapping blocks") {
    RackData d = good;
    d.blocks = {{0, 1}, {1, 2}};
    CHECK(has_issue(validate_rack_data(d), "bad_block"));
  }
  SUBCASE("non-commuting family") {
    RackData d;
    d.blocks = {{0, 1, 2}, {3}};
    d.f = {{Perm{1, 0, 2}, Perm{0, 2, 1}}, {Perm{0}, Perm{0}}};
    // the two local maps on block 0 do not commute
    CHECK(has_issue(validate_rack_data(d), "family_not_commuting"));
  }
  SUBCASE("intransitive block") {
    RackData d;
    d.blocks = {{0, 1, 2}};
    d.f = {{perm_identity(3)}};
    CHECK(has_issue(validate_rack_data(d), "block_not_transitive"));
  }
  SUBCASE("nontrivial product with a fixed point") {
    // commuting but intransitive, so the fixed point of (0 1) on 2 is not
    // excused by regularity; both axiom failures must be collected
    RackData d;
    d.blocks = {{0, 1, 2}, {3}};
    d.f = {{Perm{1, 0, 2}, perm_identity(3)}, {Perm{0}, Perm{0}}};
    ValidationResult v = validate_rack_data(d);
    REQUIRE(!v.valid);
    CHECK(has_issue(v, "block_not_transitive"));
    CHECK(has_issue(v, "action_not_free"));
  }
}

TEST_CASE("classification and rebuild are mutually inverse on small racks") {
  // build(classify(r)) == r over every abelian rack, classify(build(d)) == d
  // over every block description, and the two enumerations count the same
  // set of objects.
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    uint64_t abelian = 0;
    enumerate_racks(n, [&](const Rack& r) {
      if (!rack_is_abelian(r)) return true;
      ++abelian;
      RackData d = rack_classify(r);
      CHECK(validate_rack_data(d).valid);
      CHECK(rack_tables_equal(rack_build(d), r));
      CHECK(rack_cycle_uniformity(d));
      return true;
    });
    uint64_t described = enumerate_abelian_rack_data(n, [&](const RackData& d) {
      CHECK(validate_rack_data(d).valid);
      Rack r = rack_build(d);
      CHECK(rack_is_abelian(r));
      CHECK(data_tables_equal(rack_classify(r), d));
      return true;
    });
    CHECK(abelian == described);
    CHECK(abelian >= 1);  // the trivial rack is always present
  }
}

TEST_CASE("cycle uniformity agrees with a direct per-map check") {
  auto uniform_by_hand = [](const RackData& d) {
    for (const auto& row : d.f)
      for (const Perm& p : row) {
        auto cycles = perm_cycles(p);
        for (const auto& c : cycles)
          if (c.size() != cycles[0].size()) return false;
      }
    return true;
  };
  RackData d = ybtest::load_rack_data("two_block_data_4.json");
  CHECK(rack_cycle_uniformity(d) == uniform_by_hand(d));
  enumerate_abelian_rack_data(3, [&](const RackData& data) {
    CHECK(rack_cycle_uniformity(data) == uniform_by_hand(data));
    CHECK(rack_cycle_uniformity(data));
    return true;
  });
}
