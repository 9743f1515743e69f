#include "ybcalc/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ybcalc/errors.hpp"

namespace ybcalc {

namespace {

// Identity element of a table where each row is a permutation, or -1.
int find_identity(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (t[e][x] != x || t[x][e] != x) ok = false;
    }
    if (ok) return e;
  }
  return -1;
}

bool rows_and_cols_bijective(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t[a].size()) != n || !is_perm(t[a])) return false;
    Perm col(n);
    for (int x = 0; x < n; ++x) col[x] = t[x][a];
    if (!is_perm(col)) return false;
  }
  return true;
}

bool associative(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

// Inverse of each element; table must already be a group with identity e.
std::vector<Pt> inverses(const GroupTable& t, int e) {
  const int n = static_cast<int>(t.size());
  std::vector<Pt> inv(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t[a][b] == e) {
        inv[a] = static_cast<Pt>(b);
        break;
      }
    }
  }
  return inv;
}

// Subgroup generated by a set of elements, as a sorted vector. Closure under
// the product alone suffices in a finite group.
std::vector<Pt> generated_subgroup(const GroupTable& t, int e, const std::set<Pt>& gens) {
  std::set<Pt> members;
  members.insert(static_cast<Pt>(e));
  for (Pt g : gens) members.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Pt> cur(members.begin(), members.end());
    for (Pt a : cur) {
      for (Pt b : cur) {
        Pt c = t[a][b];
        if (members.insert(c).second) grew = true;
      }
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace

ValidationResult validate_brace(const SkewBrace& b) {
  ValidationResult res;
  res.valid = true;
  auto fail = [&](const std::string& code, std::vector<int> where) {
    res.valid = false;
    res.issues.push_back({code, code, std::move(where)});
  };

  const int n = b.n;
  if (n <= 0 || static_cast<int>(b.add.size()) != n || static_cast<int>(b.mul.size()) != n) {
    fail("bad_shape", {});
    return res;
  }
  if (!rows_and_cols_bijective(b.add)) {
    fail("additive_table_not_bijective", {});
    return res;
  }
  if (!rows_and_cols_bijective(b.mul)) {
    fail("multiplicative_table_not_bijective", {});
    return res;
  }
  if (!associative(b.add)) fail("additive_not_associative", {});
  if (!associative(b.mul)) fail("multiplicative_not_associative", {});
  if (!res.valid) return res;

  const int ea = find_identity(b.add);
  const int em = find_identity(b.mul);
  if (ea < 0) fail("no_additive_identity", {});
  if (em < 0) fail("no_multiplicative_identity", {});
  if (ea >= 0 && em >= 0 && ea != em) fail("identities_differ", {ea, em});
  if (!res.valid) return res;

  // Latin square + associativity + identity gives inverses for free in the
  // finite case, so both tables are now genuine groups.
  const auto neg = inverses(b.add, ea);
  for (int a = 0; a < n && res.valid; ++a) {
    for (int x = 0; x < n && res.valid; ++x) {
      for (int y = 0; y < n; ++y) {
        // a o (x + y) == (a o x) - a + (a o y)
        int lhs = b.mul[a][b.add[x][y]];
        int rhs = b.add[b.add[b.mul[a][x]][neg[a]]][b.mul[a][y]];
        if (lhs != rhs) {
          fail("compatibility_failure", {a, x, y});
          break;
        }
      }
    }
  }
  return res;
}

Solution brace_solution(const SkewBrace& b) {
  auto v = validate_brace(b);
  if (!v.valid) throw DomainError("invalid_brace", "brace validation failed: " + v.issues[0].code);
  const int n = b.n;
  const int e = find_identity(b.add);
  const auto neg = inverses(b.add, e);

  Solution s;
  s.n = n;
  s.name = b.name.empty() ? "brace_solution" : b.name;
  s.lam.assign(n, Perm(n));
  s.rho.assign(n, Perm(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) s.lam[a][x] = b.add[neg[a]][b.mul[a][x]];
  for (int a = 0; a < n; ++a) {
    if (!is_perm(s.lam[a]))
      throw InternalError("brace lambda row is not a permutation");
  }
  std::vector<Perm> lam_inv(n);
  for (int a = 0; a < n; ++a) lam_inv[a] = perm_inverse(s.lam[a]);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) {
      Pt u = s.lam[a][x];
      // rho_x(a) = lambda_u^{-1}( -u + a + u )
      Pt t = b.add[b.add[neg[u]][a]][u];
      s.rho[x][a] = lam_inv[u][t];
    }
  }
  auto sv = validate_solution(s);
  if (!sv.valid)
    throw InternalError("solution derived from a valid brace failed validation: " + sv.issues[0].code);
  return s;
}

std::vector<Pt> socle(const SkewBrace& b) {
  std::vector<Pt> out;
  for (int a = 0; a < b.n; ++a) {
    bool in = true;
    for (int x = 0; x < b.n; ++x) {
      if (b.mul[a][x] != b.add[a][x] || b.add[a][x] != b.add[x][a]) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(static_cast<Pt>(a));
  }
  return out;
}

namespace {

// Quotient of a brace by an ideal given as a sorted member list containing
// the identity. Cosets are numbered by least member; both induced tables are
// checked to be well defined.
SkewBrace quotient_by_ideal(const SkewBrace& b, const std::vector<Pt>& ideal) {
  const int n = b.n;
  std::vector<int> comp(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (comp[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Pt s : ideal) {
      int y = b.add[x][s];
      if (comp[y] >= 0 && comp[y] != id)
        throw InternalError("ideal cosets are not a partition");
      comp[y] = id;
    }
    if (comp[x] != id) throw InternalError("coset of x does not contain x");
  }
  const int q = static_cast<int>(reps.size());
  SkewBrace out;
  out.n = q;
  out.name = b.name.empty() ? "quotient" : b.name + "/soc";
  out.add.assign(q, std::vector<Pt>(q));
  out.mul.assign(q, std::vector<Pt>(q));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      out.add[i][j] = static_cast<Pt>(comp[b.add[reps[i]][reps[j]]]);
      out.mul[i][j] = static_cast<Pt>(comp[b.mul[reps[i]][reps[j]]]);
    }
  }
  // Representative independence and o-coset/+-coset agreement.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (comp[b.add[x][y]] != out.add[comp[x]][comp[y]])
        throw InternalError("additive quotient is not well defined");
      if (comp[b.mul[x][y]] != out.mul[comp[x]][comp[y]])
        throw InternalError("multiplicative quotient is not well defined");
    }
    for (Pt s : ideal) {
      if (comp[b.mul[x][s]] != comp[x])
        throw InternalError("multiplicative cosets of the ideal differ from additive ones");
    }
  }
  auto v = validate_brace(out);
  if (!v.valid) throw InternalError("socle quotient failed brace validation: " + v.issues[0].code);
  return out;
}

}  // namespace

SocleSeries socle_series(const SkewBrace& b) {
  auto v = validate_brace(b);
  if (!v.valid) throw DomainError("invalid_brace", "brace validation failed: " + v.issues[0].code);
  SocleSeries out;
  SkewBrace cur = b;
  out.quotient_sizes.push_back(cur.n);
  int steps = 0;
  while (true) {
    if (cur.n == 1) {
      out.kind = SocleSeries::Kind::FiniteLength;
      out.length = steps;
      return out;
    }
    auto s = socle(cur);
    out.socle_sizes.push_back(static_cast<int>(s.size()));
    if (s.size() <= 1) {
      out.kind = SocleSeries::Kind::NoFiniteSeries;
      return out;
    }
    cur = quotient_by_ideal(cur, s);
    out.quotient_sizes.push_back(cur.n);
    ++steps;
  }
}

CommutatorReport additive_commutator(const SkewBrace& b) {
  auto v = validate_brace(b);
  if (!v.valid) throw DomainError("invalid_brace", "brace validation failed: " + v.issues[0].code);
  const int n = b.n;
  const int e = find_identity(b.add);
  const auto neg = inverses(b.add, e);

  std::set<Pt> gens;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      gens.insert(b.add[b.add[b.add[neg[a]][neg[x]]][a]][x]);
  CommutatorReport rep;
  rep.elements = generated_subgroup(b.add, e, gens);

  std::vector<char> in(n, 0);
  for (Pt s : rep.elements) in[s] = 1;

  rep.add_subgroup = true;  // built as an additive closure containing 0
  for (Pt s : rep.elements) {
    if (!in[neg[s]]) rep.add_subgroup = false;
  }

  const auto mul_inv = inverses(b.mul, e);
  rep.mul_subgroup = true;
  for (Pt s : rep.elements) {
    if (!in[mul_inv[s]]) rep.mul_subgroup = false;
    for (Pt t : rep.elements)
      if (!in[b.mul[s][t]]) rep.mul_subgroup = false;
  }

  rep.add_normal = true;
  rep.mul_normal = true;
  rep.lambda_invariant = true;
  for (int x = 0; x < n; ++x) {
    for (Pt s : rep.elements) {
      if (!in[b.add[b.add[neg[x]][s]][x]]) rep.add_normal = false;
      if (!in[b.mul[b.mul[mul_inv[x]][s]][x]]) rep.mul_normal = false;
      // lambda_x(s) = -x + x o s
      if (!in[b.add[neg[x]][b.mul[x][s]]]) rep.lambda_invariant = false;
    }
  }
  rep.is_ideal = rep.add_subgroup && rep.mul_subgroup && rep.add_normal &&
                 rep.mul_normal && rep.lambda_invariant;
  return rep;
}

SkewBrace trivial_brace(const GroupTable& g, const std::string& name) {
  if (!group_table_is_group(g)) throw DomainError("invalid_group", "table is not a group with identity 0");
  SkewBrace b;
  b.n = static_cast<int>(g.size());
  b.add = g;
  b.mul = g;
  b.name = name;
  return b;
}

SkewBrace semidirect_brace(const GroupTable& A, const GroupTable& C,
                           const std::vector<Perm>& alpha, const std::string& name) {
  if (!group_table_is_group(A) || !group_table_is_group(C))
    throw DomainError("invalid_group", "factor table is not a group with identity 0");
  const int na = static_cast<int>(A.size());
  const int nc = static_cast<int>(C.size());
  if (static_cast<int>(alpha.size()) != nc)
    throw DomainError("invalid_action", "alpha must assign one automorphism per element of C");
  for (const auto& f : alpha) {
    if (static_cast<int>(f.size()) != na || !is_perm(f))
      throw DomainError("invalid_action", "alpha values must be permutations of A");
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y)
        if (f[A[x][y]] != A[f[x]][f[y]])
          throw DomainError("invalid_action", "alpha value is not an automorphism of A");
  }
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d)
      if (alpha[C[c][d]] != perm_compose(alpha[c], alpha[d]))
        throw DomainError("invalid_action", "alpha is not a homomorphism from C");

  const int n = na * nc;
  SkewBrace b;
  b.n = n;
  b.name = name;
  b.add.assign(n, std::vector<Pt>(n));
  b.mul.assign(n, std::vector<Pt>(n));
  auto idx = [&](int a, int c) { return a + na * c; };
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c)
      for (int a2 = 0; a2 < na; ++a2)
        for (int c2 = 0; c2 < nc; ++c2) {
          b.add[idx(a, c)][idx(a2, c2)] = static_cast<Pt>(idx(A[a][a2], C[c][c2]));
          b.mul[idx(a, c)][idx(a2, c2)] =
              static_cast<Pt>(idx(A[a][alpha[c][a2]], C[c][c2]));
        }
  auto v = validate_brace(b);
  if (!v.valid) throw InternalError("semidirect construction failed brace validation: " + v.issues[0].code);
  return b;
}

SkewBrace holomorph_brace(const GroupTable& A, const std::string& name) {
  if (!group_table_is_group(A)) throw DomainError("invalid_group", "table is not a group with identity 0");
  const int na = static_cast<int>(A.size());
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (A[x][y] != A[y][x])
        throw DomainError("invalid_group", "holomorph construction requires an abelian group");
  const auto autos = automorphisms(A);
  const int nf = static_cast<int>(autos.size());
  const int n = na * nf;
  SkewBrace b;
  b.n = n;
  b.name = name;
  b.add.assign(n, std::vector<Pt>(n));
  b.mul.assign(n, std::vector<Pt>(n));
  auto idx = [&](int a, int f) { return a + na * f; };
  // Composition index lookup.
  std::map<Perm, int> which;
  for (int f = 0; f < nf; ++f) which[autos[f]] = f;
  for (int a = 0; a < na; ++a)
    for (int f = 0; f < nf; ++f)
      for (int a2 = 0; a2 < na; ++a2)
        for (int g = 0; g < nf; ++g) {
          int fg = which.at(perm_compose(autos[f], autos[g]));
          b.add[idx(a, f)][idx(a2, g)] = static_cast<Pt>(idx(A[a][a2], fg));
          b.mul[idx(a, f)][idx(a2, g)] = static_cast<Pt>(idx(A[a][autos[f][a2]], fg));
        }
  auto v = validate_brace(b);
  if (!v.valid) throw InternalError("holomorph construction failed brace validation: " + v.issues[0].code);
  return b;
}

GroupTable group_cyclic(int n) {
  if (n <= 0) throw DomainError("invalid_group", "cyclic order must be positive");
  GroupTable t(n, std::vector<Pt>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) t[a][x] = static_cast<Pt>((a + x) % n);
  return t;
}

GroupTable group_direct(const GroupTable& a, const GroupTable& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  GroupTable t(na * nb, std::vector<Pt>(na * nb));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[x + na * y][x2 + na * y2] = static_cast<Pt>(a[x][x2] + na * b[y][y2]);
  return t;
}

GroupTable group_dihedral_8() {
  // Elements r^i s^j for rotation r of order 4, reflection s; index i + 4j.
  GroupTable t(8, std::vector<Pt>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i s^j)(r^i2 s^j2) = r^(i + i2 * (-1)^j) s^(j+j2)
          int rot = ((i + (j ? -i2 : i2)) % 4 + 4) % 4;
          int ref = (j + j2) % 2;
          t[i + 4 * j][i2 + 4 * j2] = static_cast<Pt>(rot + 4 * ref);
        }
  return t;
}

GroupTable group_quaternion_8() {
  // {1,-1,i,-i,j,-j,k,-k} indexed 0..7 as value*sign; pairs (v,s), v in
  // {1,i,j,k} = 0..3, s in {+,-} = 0..1, index v + 4s.
  auto mul = [](int v1, int s1, int v2, int s2) {
    static const int val[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sgn[a][b] marks products carrying an extra minus: i*i=j*j=k*k=-1,
    // j*i=-k, k*j=-i, i*k=-j.
    int v = val[v1][v2];
    int s = (s1 + s2 + sgn[v1][v2]) % 2;
    return v + 4 * s;
  };
  GroupTable t(8, std::vector<Pt>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = static_cast<Pt>(mul(a % 4, a / 4, b % 4, b / 4));
  return t;
}

GroupTable group_symmetric_3() {
  // Permutations of {0,1,2} in lexicographic one-line order; product is
  // composition p*q = p after q.
  std::vector<Perm> elems;
  Perm p = {0, 1, 2};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GroupTable t(6, std::vector<Pt>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm prod = perm_compose(elems[a], elems[b]);
      t[a][b] = static_cast<Pt>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  return t;
}

bool group_table_is_group(const GroupTable& g) {
  if (g.empty()) return false;
  if (!rows_and_cols_bijective(g)) return false;
  if (!associative(g)) return false;
  return find_identity(g) == 0;
}

std::vector<Perm> automorphisms(const GroupTable& g) {
  const int n = static_cast<int>(g.size());
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), Pt{0});
  // Lexicographic enumeration; identity must be fixed, so prune p[0] != 0.
  do {
    if (p[0] != 0) continue;
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int y = 0; y < n; ++y)
        if (p[g[x][y]] != g[p[x]][p[y]]) {
          hom = false;
          break;
        }
    if (hom) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace ybcalc
