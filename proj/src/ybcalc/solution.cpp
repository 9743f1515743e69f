#include "ybcalc/solution.hpp"

#include <array>
#include <unordered_set>

namespace ybcalc {

namespace {

void require_shape(const Solution& s) {
  if (s.n <= 0 || s.n > 255)
    throw DomainError("bad_size", "solution size must be in 1..255");
  if (static_cast<int>(s.lam.size()) != s.n || static_cast<int>(s.rho.size()) != s.n)
    throw DomainError("shape_mismatch", "lambda/rho must have one row per element");
  for (int i = 0; i < s.n; ++i)
    if (static_cast<int>(s.lam[i].size()) != s.n || static_cast<int>(s.rho[i].size()) != s.n)
      throw DomainError("shape_mismatch", "every table row must have length n");
}

}  // namespace

ValidationResult validate_solution(const Solution& s) {
  require_shape(s);
  ValidationResult res;
  auto fail = [&](std::string code, std::string msg, std::vector<int> where) {
    res.valid = false;
    res.issues.push_back({std::move(code), std::move(msg), std::move(where)});
  };

  bool degenerate = false;
  for (int x = 0; x < s.n; ++x) {
    if (!is_perm(s.lam[x])) {
      degenerate = true;
      fail("non_permutation_row", "lambda row " + std::to_string(x) + " is not a permutation", {0, x});
    }
    if (!is_perm(s.rho[x])) {
      degenerate = true;
      fail("non_permutation_row", "rho row " + std::to_string(x) + " is not a permutation", {1, x});
    }
  }
  if (degenerate) return res;  // the braid conditions assume permutation rows

  const auto& L = s.lam;
  const auto& R = s.rho;

  // (1) lambda_x lambda_y = lambda_{lambda_x(y)} lambda_{rho_y(x)}
  for (int x = 0; x < s.n && res.issues.size() < 64; ++x)
    for (int y = 0; y < s.n; ++y)
      if (perm_compose(L[x], L[y]) != perm_compose(L[L[x][y]], L[R[y][x]])) {
        fail("ybe_condition_failure", "condition 1 fails", {1, x, y, -1});
        break;
      }

  // (2) lambda_{rho_{lambda_x(y)}(z)}(rho_y(x)) = rho_{lambda_{rho_x(z)}(y)}(lambda_z(x))
  for (int x = 0; x < s.n && res.issues.size() < 64; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        Pt lhs = L[R[L[x][y]][z]][R[y][x]];
        Pt rhs = R[L[R[x][z]][y]][L[z][x]];
        if (lhs != rhs) {
          fail("ybe_condition_failure", "condition 2 fails", {2, x, y, z});
          y = z = s.n;  // report one witness per condition, not n^3 of them
        }
      }

  // (3) rho_x rho_y = rho_{rho_x(y)} rho_{lambda_y(x)}
  for (int x = 0; x < s.n && res.issues.size() < 64; ++x)
    for (int y = 0; y < s.n; ++y)
      if (perm_compose(R[x], R[y]) != perm_compose(R[R[x][y]], R[L[y][x]])) {
        fail("ybe_condition_failure", "condition 3 fails", {3, x, y, -1});
        break;
      }

  // r itself must be a bijection of X^2.
  std::vector<char> hit(static_cast<size_t>(s.n) * s.n, 0);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      size_t img = static_cast<size_t>(L[x][y]) * s.n + R[y][x];
      if (hit[img]) {
        fail("not_bijective", "r collides on the image of (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")",
             {x, y});
      }
      hit[img] = 1;
    }

  return res;
}

bool braid_holds(const Solution& s) {
  require_shape(s);
  const auto& L = s.lam;
  const auto& R = s.rho;
  auto r12 = [&](std::array<Pt, 3> t) {
    return std::array<Pt, 3>{L[t[0]][t[1]], R[t[1]][t[0]], t[2]};
  };
  auto r23 = [&](std::array<Pt, 3> t) {
    return std::array<Pt, 3>{t[0], L[t[1]][t[2]], R[t[2]][t[1]]};
  };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        std::array<Pt, 3> t{static_cast<Pt>(x), static_cast<Pt>(y), static_cast<Pt>(z)};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
      }
  return true;
}

namespace {

// r as a permutation of X^2, index x*n + y.
Perm r_as_perm(const Solution& s) {
  Perm p(static_cast<size_t>(s.n) * s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      p[static_cast<size_t>(x) * s.n + y] =
          static_cast<Pt>(s.lam[x][y] * s.n + s.rho[y][x]);
  return p;
}

}  // namespace

SolutionStats solution_stats(const Solution& s) {
  require_shape(s);
  if (s.n > 15) {
    // X^2 would not fit in Pt indexing; compute the order cycle by cycle.
    SolutionStats st;
    st.square_free = true;
    st.involutive = true;
    std::vector<uint32_t> p(static_cast<size_t>(s.n) * s.n);
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        p[static_cast<size_t>(x) * s.n + y] = static_cast<uint32_t>(s.lam[x][y]) * s.n + s.rho[y][x];
    for (int x = 0; x < s.n; ++x)
      if (p[static_cast<size_t>(x) * s.n + x] != static_cast<uint32_t>(x) * s.n + x)
        st.square_free = false;
    uint64_t ord = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      uint64_t len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = p[j];
        ++len;
      }
      ord = std::lcm(ord, len);
      if (len > 2) st.involutive = false;
    }
    if (st.involutive) {
      for (size_t i = 0; i < p.size(); ++i)
        if (p[p[i]] != i) st.involutive = false;
    }
    st.r_order = ord;
    return st;
  }
  Perm r = r_as_perm(s);
  SolutionStats st;
  st.r_order = perm_order(r);
  st.involutive = perm_is_identity(perm_compose(r, r));
  st.square_free = true;
  for (int x = 0; x < s.n; ++x)
    if (r[static_cast<size_t>(x) * s.n + x] != static_cast<size_t>(x) * s.n + x) st.square_free = false;
  return st;
}

HatMaps invert(const Solution& s) {
  require_shape(s);
  HatMaps h;
  h.lam_hat.assign(s.n, Perm(s.n, 0));
  h.rho_hat.assign(s.n, Perm(s.n, 0));
  std::vector<char> hit(static_cast<size_t>(s.n) * s.n, 0);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      Pt u = s.lam[x][y];
      Pt v = s.rho[y][x];
      size_t img = static_cast<size_t>(u) * s.n + v;
      if (hit[img]) throw DomainError("not_bijective", "r is not invertible");
      hit[img] = 1;
      h.lam_hat[u][v] = static_cast<Pt>(x);  // r^{-1}(u,v) = (x,y)
      h.rho_hat[v][u] = static_cast<Pt>(y);
    }
  return h;
}

std::vector<Perm> derived_sigma(const Solution& s) {
  require_shape(s);
  std::vector<Perm> lam_inv(s.n);
  for (int x = 0; x < s.n; ++x) lam_inv[x] = perm_inverse(s.lam[x]);
  std::vector<Perm> sigma(s.n, Perm(s.n));
  for (int y = 0; y < s.n; ++y)
    for (int x = 0; x < s.n; ++x)
      sigma[y][x] = s.lam[y][s.rho[lam_inv[x][y]][x]];
  return sigma;
}

Solution derived(const Solution& s, Side side) {
  require_shape(s);
  Solution d;
  d.n = s.n;
  d.name = s.name + (side == Side::Left ? ":derived_left" : ":derived_right");
  if (side == Side::Left) {
    d.lam.assign(s.n, perm_identity(s.n));
    d.rho = derived_sigma(s);
  } else {
    std::vector<Perm> rho_inv(s.n);
    for (int y = 0; y < s.n; ++y) rho_inv[y] = perm_inverse(s.rho[y]);
    d.lam.assign(s.n, Perm(s.n));
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        d.lam[x][y] = s.rho[x][s.lam[rho_inv[y][x]][y]];
    d.rho.assign(s.n, perm_identity(s.n));
  }
  ValidationResult v = validate_solution(d);
  if (!v.valid)
    throw InternalError("derived solution failed revalidation: " + v.issues[0].message);
  return d;
}

Solution permutation_solution(const Perm& sigma, const Perm& tau, const std::string& name) {
  if (sigma.size() != tau.size() || sigma.empty())
    throw DomainError("shape_mismatch", "sigma and tau must act on the same nonempty set");
  if (!is_perm(sigma) || !is_perm(tau))
    throw DomainError("non_permutation_row", "sigma and tau must be permutations");
  if (perm_compose(sigma, tau) != perm_compose(tau, sigma))
    throw DomainError("non_commuting", "sigma and tau do not commute");
  Solution s;
  s.n = static_cast<int>(sigma.size());
  s.name = name;
  s.lam.assign(s.n, sigma);
  s.rho.assign(s.n, tau);
  ValidationResult v = validate_solution(s);
  if (!v.valid) throw InternalError("permutation solution failed revalidation");
  return s;
}

Word lambda_act_letter(const Solution& s, Pt x, const Word& m) {
  Word out(m.size());
  Pt cur = x;
  for (size_t i = 0; i < m.size(); ++i) {
    out[i] = s.lam[cur][m[i]];
    cur = s.rho[m[i]][cur];
  }
  return out;
}

Word lambda_act_word(const Solution& s, const Word& a, const Word& m) {
  Word out = m;
  for (size_t i = a.size(); i-- > 0;) out = lambda_act_letter(s, a[i], out);
  return out;
}

Word rho_act_letter(const Solution& s, Pt y, const Word& m) {
  Word out(m.size());
  Pt t = y;  // image of y under the lambda action of the suffix to the right of i
  for (size_t i = m.size(); i-- > 0;) {
    out[i] = s.rho[t][m[i]];
    t = s.lam[m[i]][t];
  }
  return out;
}

Word rho_act_word(const Solution& s, const Word& b, const Word& m) {
  Word out = m;
  for (Pt y : b) out = rho_act_letter(s, y, out);
  return out;
}

namespace {

GroupReportEntry report_entry(int degree, const std::vector<Perm>& gens, uint64_t cap) {
  GroupReportEntry e;
  GroupClosure g = group_closure(degree, gens, cap);
  e.order = g.order();
  e.capped = g.capped;
  if (!g.capped) e.nil = nilpotency_class(g, cap);
  return e;
}

}  // namespace

PermGroupReport perm_group_report(const Solution& s, uint64_t closure_cap) {
  require_shape(s);
  HatMaps h = invert(s);
  std::vector<Perm> sigma = derived_sigma(s);

  std::vector<Perm> lam_gens(s.lam), rho_gens(s.rho), sig_gens(sigma);
  std::vector<Perm> pair_lr, pair_lh, quad;
  for (int x = 0; x < s.n; ++x) {
    Perm rho_inv = perm_inverse(s.rho[x]);
    Perm rho_hat_inv = perm_inverse(h.rho_hat[x]);
    pair_lr.push_back(tuple_embed({s.lam[x], rho_inv}, s.n));
    pair_lh.push_back(tuple_embed({s.lam[x], h.lam_hat[x]}, s.n));
    quad.push_back(tuple_embed({s.lam[x], rho_inv, h.lam_hat[x], rho_hat_inv}, s.n));
  }

  PermGroupReport rep;
  rep.g_lambda = report_entry(s.n, lam_gens, closure_cap);
  rep.g_rho = report_entry(s.n, rho_gens, closure_cap);
  rep.g_sigma = report_entry(s.n, sig_gens, closure_cap);
  rep.g_lambda_rho = report_entry(2 * s.n, pair_lr, closure_cap);
  rep.g_lambda_hat = report_entry(2 * s.n, pair_lh, closure_cap);
  rep.g_full = report_entry(4 * s.n, quad, closure_cap);
  return rep;
}

}  // namespace ybcalc
