#include "ybcalc/permgroup.hpp"

#include <numeric>
#include <unordered_set>

namespace ybcalc {

GroupClosure group_closure(int degree, const std::vector<Perm>& gens, uint64_t cap) {
  GroupClosure out;
  std::unordered_set<Perm, PermHash> seen;
  Perm id = perm_identity(degree);
  seen.insert(id);
  out.elements.push_back(id);
  for (size_t head = 0; head < out.elements.size(); ++head) {
    Perm cur = out.elements[head];  // copy: vector may reallocate while we append
    for (const Perm& g : gens) {
      Perm next = perm_compose(cur, g);
      if (seen.insert(next).second) {
        if (out.elements.size() + 1 > cap) {
          out.capped = true;
          return out;
        }
        out.elements.push_back(std::move(next));
      }
    }
  }
  return out;
}

uint64_t group_exponent(const GroupClosure& g) {
  uint64_t e = 1;
  for (const Perm& p : g.elements) e = std::lcm(e, perm_order(p));
  return e;
}

namespace {

// Subgroup generated by `gens` given as explicit elements.
GroupClosure closure_of_set(int degree, const std::vector<Perm>& gens, uint64_t cap) {
  return group_closure(degree, gens, cap);
}

bool same_element_set(const GroupClosure& a, const GroupClosure& b) {
  if (a.elements.size() != b.elements.size()) return false;
  std::unordered_set<Perm, PermHash> sa(a.elements.begin(), a.elements.end());
  for (const Perm& p : b.elements)
    if (!sa.count(p)) return false;
  return true;
}

}  // namespace

NilpotencyInfo nilpotency_class(const GroupClosure& g, uint64_t cap) {
  NilpotencyInfo info;
  info.capped = g.capped;
  info.series_orders.push_back(g.order());
  if (g.capped) return info;
  if (g.order() == 1) {
    info.nilpotent = true;
    info.cls = 0;
    return info;
  }
  int degree = static_cast<int>(g.elements[0].size());

  std::vector<Perm> g_inv(g.elements.size());
  for (size_t i = 0; i < g.elements.size(); ++i) g_inv[i] = perm_inverse(g.elements[i]);

  GroupClosure gamma = g;
  int step = 0;
  while (true) {
    // Commutators [a, b] = a^-1 b^-1 a b over all a in gamma, b in g.
    std::unordered_set<Perm, PermHash> comm_set;
    std::vector<Perm> comms;
    for (const Perm& a : gamma.elements) {
      Perm a_inv = perm_inverse(a);
      for (size_t j = 0; j < g.elements.size(); ++j) {
        Perm c = perm_compose(perm_compose(a_inv, g_inv[j]), perm_compose(a, g.elements[j]));
        if (comm_set.insert(c).second) comms.push_back(std::move(c));
      }
    }
    GroupClosure next = closure_of_set(degree, comms, cap);
    if (next.capped) {
      info.capped = true;
      return info;
    }
    info.series_orders.push_back(next.order());
    ++step;
    if (next.order() == 1) {
      info.nilpotent = true;
      info.cls = step;
      return info;
    }
    if (same_element_set(next, gamma)) {
      info.nilpotent = false;
      return info;
    }
    gamma = std::move(next);
  }
}

Perm tuple_embed(const std::vector<Perm>& components, int n) {
  Perm p(components.size() * n);
  for (size_t i = 0; i < components.size(); ++i)
    for (int x = 0; x < n; ++x)
      p[i * n + x] = static_cast<Pt>(i * n + components[i][x]);
  return p;
}

}  // namespace ybcalc
