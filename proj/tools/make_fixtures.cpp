// Regenerates the fixture corpus (fixtures/) and the golden report corpus
// (tests/golden/). Everything is constructed from first principles here and
// validated before being written, so a regeneration that would produce an
// invalid table aborts instead of silently corrupting the corpus.
//
// Usage: make_fixtures [repo-root]   (default: current directory)

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ybcalc/analyze.hpp"
#include "ybcalc/io.hpp"

namespace fs = std::filesystem;
using namespace ybcalc;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "write failed: " << p << "\n";
    std::exit(1);
  }
  std::cout << p.string() << "\n";
}

[[noreturn]] void die(const std::string& what) {
  std::cerr << "fixture generation failed: " << what << "\n";
  std::exit(1);
}

void require_valid(const ValidationResult& v, const std::string& what) {
  if (!v.valid) die(what + " is invalid: " + v.issues[0].message);
}

Perm transposition(int n, int i, int j) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p[k] = static_cast<Pt>(k);
  std::swap(p[i], p[j]);
  return p;
}

template <typename FL, typename FR>
Solution from_maps(int n, const std::string& name, FL lam, FR rho) {
  Solution s;
  s.n = n;
  s.name = name;
  s.lam.assign(n, Perm(n));
  s.rho.assign(n, Perm(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s.lam[x][y] = static_cast<Pt>(lam(x, y));
      s.rho[y][x] = static_cast<Pt>(rho(y, x));
    }
  require_valid(validate_solution(s), name);
  return s;
}

Solution from_tables(const std::string& name, std::vector<Perm> lam, std::vector<Perm> rho) {
  Solution s;
  s.n = static_cast<int>(lam.size());
  s.name = name;
  s.lam = std::move(lam);
  s.rho = std::move(rho);
  require_valid(validate_solution(s), name);
  return s;
}

// The symmetric group on three points in lexicographic one-line order;
// index 0 is the identity.
std::vector<Perm> s3_elements() {
  std::vector<Perm> elems;
  Perm p = {0, 1, 2};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return elems;
}

int s3_rank(const std::vector<Perm>& elems, const Perm& p) {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == p) return static_cast<int>(i);
  die("permutation missing from the lexicographic table");
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path(".");
  const fs::path fixtures = root / "fixtures";
  const fs::path golden = root / "tests" / "golden";

  std::vector<Solution> solutions;

  // Permutation solution r(x,y) = (sigma(y), tau(x)) from two disjoint
  // transpositions.
  {
    Solution s = permutation_solution(transposition(4, 0, 1), transposition(4, 2, 3),
                                      "lyubashenko_4");
    require_valid(validate_solution(s), s.name);
    write_file(fixtures / "lyubashenko_4.json",
               serialize_solution(s, "permutation solution r(x,y) = (sigma(y), tau(x)) with "
                                     "sigma = (0 1), tau = (2 3)"));
    solutions.push_back(s);
  }

  // r(x,y) = (-y, x-y) on Z/3.
  {
    Solution s = from_maps(
        3, "cyclic_neg_z3", [](int, int y) { return (3 - y) % 3; },
        [](int y, int x) { return (x - y + 3) % 3; });
    write_file(fixtures / "cyclic_neg_z3.json",
               serialize_solution(s, "r(x,y) = (-y, x-y) on Z/3"));
    solutions.push_back(s);
  }

  // r(x,y) = (-y, x+2y) on Z/4.
  {
    Solution s = from_maps(
        4, "cyclic_neg_z4", [](int, int y) { return (4 - y) % 4; },
        [](int y, int x) { return (x + 2 * y) % 4; });
    write_file(fixtures / "cyclic_neg_z4.json",
               serialize_solution(s, "r(x,y) = (-y, x+2y) on Z/4"));
    solutions.push_back(s);
  }

  // Four-point solution whose structure monoid has a translation between two
  // different level-2 layer members.
  {
    Perm id4 = {0, 1, 2, 3};
    Solution s = from_tables("nc_example",
                             {transposition(4, 2, 3), transposition(4, 2, 3),
                              transposition(4, 1, 3), transposition(4, 1, 2)},
                             {transposition(4, 2, 3), id4, id4, id4});
    write_file(fixtures / "nc_example.json",
               serialize_solution(s, "lambda_0 = lambda_1 = (2 3), lambda_2 = (1 3), "
                                     "lambda_3 = (1 2); rho_0 = (2 3), rho_1 = rho_2 = "
                                     "rho_3 = id"));
    solutions.push_back(s);
  }

  // Variant of the previous table with trivial lambda_2, lambda_3.
  {
    Perm id4 = {0, 1, 2, 3};
    Solution s = from_tables("nc_variant_4",
                             {transposition(4, 2, 3), transposition(4, 2, 3), id4, id4},
                             {transposition(4, 2, 3), id4, id4, id4});
    write_file(fixtures / "nc_variant_4.json",
               serialize_solution(s, "lambda_0 = lambda_1 = (2 3), lambda_2 = lambda_3 = id; "
                                     "rho_0 = (2 3), rho_1 = rho_2 = rho_3 = id"));
    solutions.push_back(s);
  }

  // Rack-type solution (trivial right action) whose retract tower reaches a
  // point in two steps.
  {
    Perm id4 = {0, 1, 2, 3};
    Solution s = from_tables("mpl2_4",
                             {transposition(4, 2, 3), transposition(4, 2, 3),
                              transposition(4, 0, 1), transposition(4, 0, 1)},
                             {id4, id4, id4, id4});
    write_file(fixtures / "mpl2_4.json",
               serialize_solution(s, "trivial right action; lambda_0 = lambda_1 = (2 3), "
                                     "lambda_2 = lambda_3 = (0 1)"));
    solutions.push_back(s);
  }

  // X = Sym(3) in lexicographic one-line order (identity = 0) with
  // r(x,y) = (x y^{-1} x^{-1}, x y^2), products composed left-to-right.
  {
    auto elems = s3_elements();
    const int n = static_cast<int>(elems.size());
    Solution s = from_maps(
        n, "conj_inv_s3",
        [&](int x, int y) {
          Perm value = perm_compose(perm_compose(elems[x], perm_inverse(elems[y])),
                                    perm_inverse(elems[x]));
          return s3_rank(elems, value);
        },
        [&](int y, int x) {
          Perm value = perm_compose(elems[x], perm_compose(elems[y], elems[y]));
          return s3_rank(elems, value);
        });
    write_file(fixtures / "conj_inv_s3.json",
               serialize_solution(s, "X = Sym(3), lexicographic one-line indexing; "
                                     "r(x,y) = (x y^-1 x^-1, x y^2)"));
    solutions.push_back(s);
  }

  // r(x,y) = (y+1, x+1) on Z/n.
  for (int n : {3, 4}) {
    Solution s = from_maps(
        n, "shift_z" + std::to_string(n),
        [n](int, int y) { return (y + 1) % n; }, [n](int, int x) { return (x + 1) % n; });
    write_file(fixtures / (s.name + ".json"),
               serialize_solution(s, "r(x,y) = (y+1, x+1) on Z/" + std::to_string(n)));
    solutions.push_back(s);
  }

  // Dihedral rack on Z/3: x <| y = 2y - x.
  Rack dihedral3;
  {
    dihedral3.n = 3;
    dihedral3.name = "dihedral_rack_3";
    dihedral3.op.assign(3, std::vector<Pt>(3));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) dihedral3.op[x][y] = static_cast<Pt>((2 * y - x + 3) % 3);
    require_valid(validate_rack(dihedral3), dihedral3.name);
    write_file(fixtures / "dihedral_rack_3.json",
               serialize_rack(dihedral3, "x <| y = 2y - x on Z/3"));
  }

  // Constant rack on two points: x <| y = x + 1 regardless of y.
  Rack constant2;
  {
    constant2.n = 2;
    constant2.name = "constant_rack_2";
    constant2.op.assign(2, std::vector<Pt>(2));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) constant2.op[x][y] = static_cast<Pt>((x + 1) % 2);
    require_valid(validate_rack(constant2), constant2.name);
    write_file(fixtures / "constant_rack_2.json",
               serialize_rack(constant2, "x <| y = x + 1 on Z/2 for every y"));
  }

  // Two-block description: each block swaps under its own columns and is
  // fixed by the other block's columns.
  RackData two_block;
  {
    two_block.name = "two_block_data_4";
    two_block.blocks = {{0, 1}, {2, 3}};
    Perm swap2 = {1, 0};
    Perm id2 = {0, 1};
    two_block.f = {{swap2, id2}, {id2, swap2}};
    require_valid(validate_rack_data(two_block), two_block.name);
    write_file(fixtures / "two_block_data_4.json",
               serialize_rack_data(two_block, "blocks {0,1} and {2,3}; own columns swap the "
                                              "block, foreign columns fix it"));
  }

  // Semidirect-product brace: A = (Z/2)^4 bit-indexed, C = (Z/2)^2 with
  // index c1 + 2*c2; alpha(1,0) swaps bits 0,1 and alpha(0,1) swaps bits 2,3.
  SkewBrace semidirect64;
  {
    GroupTable z2 = group_cyclic(2);
    GroupTable a16 = group_direct(group_direct(group_direct(z2, z2), z2), z2);
    GroupTable c4 = group_direct(z2, z2);
    std::vector<Perm> alpha;
    for (int c = 0; c < 4; ++c) {
      const int c1 = c & 1, c2 = (c >> 1) & 1;
      Perm p(16);
      for (int a = 0; a < 16; ++a) {
        int b0 = a & 1, b1 = (a >> 1) & 1, b2 = (a >> 2) & 1, b3 = (a >> 3) & 1;
        if (c1) std::swap(b0, b1);
        if (c2) std::swap(b2, b3);
        p[a] = static_cast<Pt>(b0 | (b1 << 1) | (b2 << 2) | (b3 << 3));
      }
      alpha.push_back(p);
    }
    semidirect64 = semidirect_brace(a16, c4, alpha, "semidirect_brace_64");
    require_valid(validate_brace(semidirect64), semidirect64.name);
    write_file(fixtures / "semidirect_brace_64.json",
               serialize_brace(semidirect64,
                               "B = (Z/2)^4 x| (Z/2)^2; element (a, c) has index a + 16c, "
                               "a bit-indexed; the action swaps bits 0,1 for c1 = 1 and "
                               "bits 2,3 for c2 = 1"));
  }

  // Holomorph brace of (Z/2)^2: 4 * |Aut| = 24 elements.
  SkewBrace holomorph24;
  {
    GroupTable z2 = group_cyclic(2);
    holomorph24 = holomorph_brace(group_direct(z2, z2), "holomorph_brace_24");
    require_valid(validate_brace(holomorph24), holomorph24.name);
    write_file(fixtures / "holomorph_brace_24.json",
               serialize_brace(holomorph24,
                               "B = A x Aut(A) for A = (Z/2)^2; element (a, f) has index "
                               "a + 4 * f, automorphisms in lexicographic one-line order"));
  }

  // ---- golden reports --------------------------------------------------
  // Analysis reports for every solution fixture, timing omitted so reruns
  // are byte-identical.
  for (const auto& s : solutions) {
    AnalysisOptions opts;
    Json rep = analysis_report(s, opts, /*with_timing=*/false);
    write_file(golden / (s.name + ".analysis.json"), rep.dump(2) + "\n");
  }

  for (const SkewBrace* b : {&semidirect64, &holomorph24}) {
    write_file(golden / (b->name + ".socle.json"), brace_socle_report(*b).dump(2) + "\n");
    write_file(golden / (b->name + ".commutator.json"),
               brace_commutator_report(*b).dump(2) + "\n");
    write_file(golden / (b->name + ".solution.json"), serialize_solution(brace_solution(*b)));
  }

  write_file(golden / "constant_rack_2.classify.json",
             serialize_rack_data(rack_classify(constant2)));
  write_file(golden / "dihedral_rack_3.validate.json",
             validation_report("rack", validate_rack(dihedral3)).dump(2) + "\n");
  write_file(golden / "two_block_data_4.build.json", serialize_rack(rack_build(two_block)));

  std::cout << "corpus complete\n";
  return 0;
}
