#include "ybcalc/retract.hpp"

#include <map>

namespace ybcalc {

RetractPartition retract_partition(const Solution& s) {
  RetractPartition p;
  p.class_of.assign(s.n, -1);
  std::map<std::pair<Perm, Perm>, int> index;  // row pair -> class, keyed by first appearance
  for (int x = 0; x < s.n; ++x) {
    auto key = std::make_pair(s.lam[x], s.rho[x]);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, static_cast<int>(p.classes.size())).first;
      p.classes.emplace_back();
    }
    p.class_of[x] = it->second;
    p.classes[it->second].push_back(static_cast<Pt>(x));
  }
  // Re-number classes by least member so the labels are canonical.
  std::vector<int> order(p.classes.size());
  for (size_t c = 0; c < p.classes.size(); ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.classes[a][0] < p.classes[b][0]; });
  std::vector<int> rank(p.classes.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<std::vector<Pt>> sorted(p.classes.size());
  for (size_t c = 0; c < p.classes.size(); ++c) sorted[rank[c]] = std::move(p.classes[c]);
  p.classes = std::move(sorted);
  for (int x = 0; x < s.n; ++x) p.class_of[x] = rank[p.class_of[x]];
  return p;
}

Solution retract(const Solution& s) {
  RetractPartition p = retract_partition(s);
  int m = static_cast<int>(p.classes.size());
  Solution q;
  q.n = m;
  q.name = s.name.empty() ? "retract" : s.name + ":retract";
  q.lam.assign(m, Perm(m));
  q.rho.assign(m, Perm(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Pt ri = p.classes[i][0], rj = p.classes[j][0];
      q.lam[i][j] = static_cast<Pt>(p.class_of[s.lam[ri][rj]]);
      q.rho[i][j] = static_cast<Pt>(p.class_of[s.rho[ri][rj]]);
    }
  // Representative independence: the class of lambda_x(y) and rho_x(y) may
  // only depend on the classes of x and y.
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      if (p.class_of[s.lam[x][y]] != q.lam[p.class_of[x]][p.class_of[y]])
        throw InternalError("retract lambda is not well defined");
      if (p.class_of[s.rho[x][y]] != q.rho[p.class_of[x]][p.class_of[y]])
        throw InternalError("retract rho is not well defined");
    }
  ValidationResult v = validate_solution(q);
  if (!v.valid) throw InternalError("retract failed revalidation: " + v.issues[0].message);
  return q;
}

MplResult mpl_tower(const Solution& s, int cap) {
  if (cap <= 0) cap = s.n + 1;
  MplResult res;
  res.tower_sizes.push_back(s.n);
  Solution cur = s;
  for (int step = 0; step <= cap; ++step) {
    if (cur.n == 1) {
      res.kind = MplResult::Kind::Finite;
      res.level = step;
      return res;
    }
    if (step == cap) break;
    Solution next = retract(cur);
    if (next.n == cur.n) {
      res.kind = MplResult::Kind::Irretractable;
      return res;
    }
    res.tower_sizes.push_back(next.n);
    cur = std::move(next);
  }
  res.kind = MplResult::Kind::CapExceeded;
  return res;
}

}  // namespace ybcalc
