#include "ybcalc/rack.hpp"

#include <algorithm>
#include <numeric>

namespace ybcalc {

namespace {

void require_rack_shape(const Rack& r) {
  if (r.n <= 0 || r.n > 255) throw DomainError("bad_size", "rack size must be in 1..255");
  if (static_cast<int>(r.op.size()) != r.n)
    throw DomainError("shape_mismatch", "operation table must have one row per element");
  for (const auto& row : r.op)
    if (static_cast<int>(row.size()) != r.n)
      throw DomainError("shape_mismatch", "every operation row must have length n");
}

// Column map of y: x -> x <| y.
Perm column(const Rack& r, int y) {
  Perm c(r.n);
  for (int x = 0; x < r.n; ++x) c[x] = r.op[x][y];
  return c;
}

}  // namespace

ValidationResult validate_rack(const Rack& r) {
  require_rack_shape(r);
  ValidationResult res;
  auto fail = [&](std::string code, std::string msg, std::vector<int> where) {
    res.valid = false;
    res.issues.push_back({std::move(code), std::move(msg), std::move(where)});
  };

  bool columns_ok = true;
  for (int y = 0; y < r.n; ++y)
    if (!is_perm(column(r, y))) {
      columns_ok = false;
      fail("rack_column_not_bijective", "column " + std::to_string(y) + " is not a bijection",
           {y});
    }
  if (!columns_ok) return res;

  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      for (int c = 0; c < r.n; ++c)
        if (r.op[r.op[a][b]][c] != r.op[r.op[a][c]][r.op[b][c]]) {
          fail("self_distributivity_failure", "self-distributivity fails", {a, b, c});
          if (res.issues.size() >= 16) return res;
        }
  return res;
}

bool rack_is_quandle(const Rack& r) {
  require_rack_shape(r);
  for (int x = 0; x < r.n; ++x)
    if (r.op[x][x] != x) return false;
  return true;
}

bool rack_is_abelian(const Rack& r) {
  require_rack_shape(r);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      for (int c = 0; c < r.n; ++c)
        if (r.op[r.op[a][b]][c] != r.op[r.op[a][c]][b]) return false;
  return true;
}

Rack rack_from_solution(const Solution& s) {
  for (int y = 0; y < s.n; ++y)
    if (!perm_is_identity(s.rho[y]))
      throw DomainError("nontrivial_rho", "only solutions with trivial rho are rack type");
  Rack r;
  r.n = s.n;
  r.name = s.name.empty() ? "rack" : s.name + ":rack";
  r.op.assign(s.n, std::vector<Pt>(s.n));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      r.op[y][x] = s.lam[x][y];  // y <| x = lambda_x(y)
  return r;
}

Solution solution_from_rack(const Rack& r) {
  ValidationResult v = validate_rack(r);
  if (!v.valid) throw DomainError("invalid_rack", v.issues[0].message);
  Solution s;
  s.n = r.n;
  s.name = r.name.empty() ? "rack_solution" : r.name + ":solution";
  s.lam.assign(r.n, Perm(r.n));
  s.rho.assign(r.n, perm_identity(r.n));
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      s.lam[x][y] = r.op[y][x];
  ValidationResult sv = validate_solution(s);
  if (!sv.valid) throw InternalError("rack solution failed revalidation: " + sv.issues[0].message);
  return s;
}

RackData rack_classify(const Rack& r) {
  ValidationResult v = validate_rack(r);
  if (!v.valid) throw DomainError("invalid_rack", v.issues[0].message);
  if (!rack_is_abelian(r))
    throw DomainError("not_abelian", "block classification is defined for abelian racks");

  // Orbits of the column group, found by union over all columns.
  std::vector<int> comp(r.n, -1);
  std::vector<std::vector<Pt>> blocks;
  for (int x = 0; x < r.n; ++x) {
    if (comp[x] >= 0) continue;
    std::vector<Pt> orbit{static_cast<Pt>(x)};
    comp[x] = static_cast<int>(blocks.size());
    for (size_t head = 0; head < orbit.size(); ++head)
      for (int y = 0; y < r.n; ++y) {
        Pt img = r.op[orbit[head]][y];
        if (comp[img] < 0) {
          comp[img] = comp[x];
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    blocks.push_back(std::move(orbit));
  }
  // Scanning x in order and orbits being disjoint makes blocks least-member
  // ordered already.

  const int m = static_cast<int>(blocks.size());
  RackData d;
  d.blocks = blocks;
  d.name = r.name;
  d.f.assign(m, std::vector<Perm>(m));
  std::vector<int> pos(r.n);  // position of an element inside its block
  for (int i = 0; i < m; ++i)
    for (size_t p = 0; p < blocks[i].size(); ++p) pos[blocks[i][p]] = static_cast<int>(p);

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Pt rep = blocks[j][0];
      Perm loc(blocks[i].size());
      for (size_t p = 0; p < blocks[i].size(); ++p)
        loc[p] = static_cast<Pt>(pos[r.op[blocks[i][p]][rep]]);
      // Every member of block j must induce the same local map.
      for (Pt y : blocks[j])
        for (size_t p = 0; p < blocks[i].size(); ++p)
          if (pos[r.op[blocks[i][p]][y]] != loc[p])
            throw InternalError("column maps differ within one block of an abelian rack");
      d.f[i][j] = std::move(loc);
    }
  return d;
}

ValidationResult validate_rack_data(const RackData& d) {
  ValidationResult res;
  auto fail = [&](std::string code, std::string msg, std::vector<int> where) {
    res.valid = false;
    res.issues.push_back({std::move(code), std::move(msg), std::move(where)});
  };

  const int m = static_cast<int>(d.blocks.size());
  if (m == 0) {
    fail("shape_mismatch", "no blocks", {});
    return res;
  }
  std::vector<bool> seen(256, false);
  int total = 0;
  Pt prev_least = 0;
  for (int i = 0; i < m; ++i) {
    const auto& blk = d.blocks[i];
    if (blk.empty() || !std::is_sorted(blk.begin(), blk.end()) ||
        std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      fail("bad_block", "blocks must be nonempty sorted duplicate-free sets", {i});
      return res;
    }
    if (i > 0 && blk[0] <= prev_least) {
      fail("bad_block", "blocks must be ordered by least member", {i});
      return res;
    }
    prev_least = blk[0];
    for (Pt x : blk) {
      if (seen[x]) {
        fail("bad_block", "blocks overlap", {i, x});
        return res;
      }
      seen[x] = true;
      ++total;
    }
  }
  for (int x = 0; x < total; ++x)
    if (!seen[x]) {
      fail("bad_block", "blocks must partition 0..n-1", {x});
      return res;
    }
  if (static_cast<int>(d.f.size()) != m) {
    fail("shape_mismatch", "f must be an m-by-m matrix", {});
    return res;
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(d.f[i].size()) != m) {
      fail("shape_mismatch", "f must be an m-by-m matrix", {i});
      return res;
    }
    for (int j = 0; j < m; ++j)
      if (d.f[i][j].size() != d.blocks[i].size() || !is_perm(d.f[i][j])) {
        fail("bad_local_map", "f[i][j] must permute block i", {i, j});
        return res;
      }
  }

  for (int i = 0; i < m; ++i) {
    // (1) the family acting on block i commutes pairwise
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (perm_compose(d.f[i][j], d.f[i][k]) != perm_compose(d.f[i][k], d.f[i][j]))
          fail("family_not_commuting", "local maps on one block must commute", {i, j, k});
    // (2) joint transitivity on block i
    GroupClosure g = group_closure(static_cast<int>(d.blocks[i].size()), d.f[i], 1u << 20);
    std::vector<bool> reach(d.blocks[i].size(), false);
    for (const Perm& p : g.elements) reach[p[0]] = true;
    if (std::find(reach.begin(), reach.end(), false) != reach.end())
      fail("block_not_transitive", "local maps must act transitively on their block", {i});
    // (3) freeness: nontrivial elements have no fixed point
    for (const Perm& p : g.elements) {
      if (perm_is_identity(p)) continue;
      for (size_t x = 0; x < p.size(); ++x)
        if (p[x] == x) {
          fail("action_not_free", "a nontrivial product fixes a point of its block",
               {i, static_cast<int>(x)});
          x = p.size();
        }
    }
  }
  return res;
}

Rack rack_build(const RackData& d) {
  ValidationResult v = validate_rack_data(d);
  if (!v.valid) throw DomainError("invalid_rack_data", v.issues[0].message);

  int n = 0;
  for (const auto& blk : d.blocks) n += static_cast<int>(blk.size());
  std::vector<int> block_of(n), pos(n);
  for (size_t i = 0; i < d.blocks.size(); ++i)
    for (size_t p = 0; p < d.blocks[i].size(); ++p) {
      block_of[d.blocks[i][p]] = static_cast<int>(i);
      pos[d.blocks[i][p]] = static_cast<int>(p);
    }

  Rack r;
  r.n = n;
  r.name = d.name;
  r.op.assign(n, std::vector<Pt>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = block_of[x], j = block_of[y];
      r.op[x][y] = d.blocks[i][d.f[i][j][pos[x]]];
    }
  ValidationResult rv = validate_rack(r);
  if (!rv.valid || !rack_is_abelian(r))
    throw DomainError("invalid_rack_data", "data does not assemble into an abelian rack");
  return r;
}

bool rack_cycle_uniformity(const RackData& d) {
  for (const auto& row : d.f)
    for (const Perm& p : row) {
      auto cycles = perm_cycles(p, true);
      for (const auto& c : cycles)
        if (c.size() != cycles[0].size()) return false;
    }
  return true;
}

}  // namespace ybcalc
