#include "ybcalc/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "ybcalc/errors.hpp"

namespace ybcalc {

namespace {

std::vector<Perm> all_perms_lex(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), Pt{0});
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Advance a mixed-radix counter (last digit fastest); false when exhausted.
bool odometer_step(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t enumerate_solutions(int n, const std::function<bool(const Solution&)>& cb) {
  if (n < 1 || n > 3)
    throw DomainError("enumeration_cap", "exhaustive solution sweep supports 1 <= n <= 3");
  const auto perms = all_perms_lex(n);
  const int kFact = static_cast<int>(perms.size());
  std::vector<int> digits(2 * n, 0);
  std::vector<int> radix(2 * n, kFact);

  std::uint64_t found = 0;
  Solution s;
  s.n = n;
  s.lam.resize(n);
  s.rho.resize(n);
  do {
    for (int i = 0; i < n; ++i) s.lam[i] = perms[digits[i]];
    for (int i = 0; i < n; ++i) s.rho[i] = perms[digits[n + i]];
    if (validate_solution(s).valid) {
      ++found;
      if (cb && !cb(s)) return found;
    }
  } while (odometer_step(digits, radix));
  return found;
}

std::uint64_t enumerate_racks(int n, const std::function<bool(const Rack&)>& cb) {
  if (n < 1 || n > 4)
    throw DomainError("enumeration_cap", "exhaustive rack sweep supports 1 <= n <= 4");
  const auto perms = all_perms_lex(n);
  const int kFact = static_cast<int>(perms.size());
  std::vector<int> digits(n, 0);
  std::vector<int> radix(n, kFact);

  std::uint64_t found = 0;
  Rack r;
  r.n = n;
  r.op.assign(n, Perm(n));
  do {
    for (int y = 0; y < n; ++y) {
      const Perm& phi = perms[digits[y]];
      for (int x = 0; x < n; ++x) r.op[x][y] = phi[x];
    }
    if (validate_rack(r).valid) {
      ++found;
      if (cb && !cb(r)) return found;
    }
  } while (odometer_step(digits, radix));
  return found;
}

std::uint64_t enumerate_abelian_rack_data(int n, const std::function<bool(const RackData&)>& cb) {
  if (n < 1 || n > 4)
    throw DomainError("enumeration_cap", "exhaustive block-description sweep supports 1 <= n <= 4");

  // Set partitions via restricted growth strings: a[0] = 0 and
  // a[i] <= 1 + max(a[0..i-1]). Blocks come out ordered by least member.
  std::vector<std::vector<int>> rgs_list;
  std::vector<int> a(n, 0);
  std::function<void(int, int)> gen = [&](int i, int mx) {
    if (i == n) {
      rgs_list.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      gen(i + 1, std::max(mx, v));
    }
  };
  gen(0, -1);

  std::uint64_t found = 0;
  for (const auto& rgs : rgs_list) {
    int k = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<Pt>> blocks(k);
    for (int x = 0; x < n; ++x) blocks[rgs[x]].push_back(static_cast<Pt>(x));

    std::vector<std::vector<Perm>> local(k);  // lex perms of each block size
    for (int i = 0; i < k; ++i) local[i] = all_perms_lex(static_cast<int>(blocks[i].size()));

    // One digit per (i, j) slot, row-major, radix = |block i|!.
    std::vector<int> digits(k * k, 0);
    std::vector<int> radix(k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) radix[i * k + j] = static_cast<int>(local[i].size());

    RackData d;
    d.blocks = blocks;
    d.f.assign(k, std::vector<Perm>(k));
    do {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.f[i][j] = local[i][digits[i * k + j]];
      if (validate_rack_data(d).valid) {
        ++found;
        if (cb && !cb(d)) return found;
      }
    } while (odometer_step(digits, radix));
  }
  return found;
}

}  // namespace ybcalc
