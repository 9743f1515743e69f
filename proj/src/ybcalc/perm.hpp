#pragma once
// Permutations in one-line notation over {0,...,n-1}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ybcalc {

using Pt = uint8_t;              // a point; degrees stay below 256
using Perm = std::vector<Pt>;    // p[i] = image of i
using Word = std::vector<Pt>;    // word over an alphabet of points

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Pt{0});
  return p;
}

inline bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (Pt v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

// (a*b)(x) = a(b(x)); apply b first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Pt>(i);
  return q;
}

inline std::vector<std::vector<Pt>> perm_cycles(const Perm& p, bool include_fixed = true) {
  std::vector<std::vector<Pt>> out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Pt> cyc;
    Pt j = static_cast<Pt>(i);
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = p[j];
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

inline uint64_t perm_order(const Perm& p) {
  uint64_t ord = 1;
  for (const auto& c : perm_cycles(p))
    ord = std::lcm(ord, static_cast<uint64_t>(c.size()));
  return ord;
}

inline Perm perm_power(const Perm& p, uint64_t k) {
  Perm acc = perm_identity(static_cast<int>(p.size()));
  Perm base = p;
  while (k) {
    if (k & 1) acc = perm_compose(base, acc);
    base = perm_compose(base, base);
    k >>= 1;
  }
  return acc;
}

// Transposition (a b) as a permutation of n points.
inline Perm perm_transposition(int n, int a, int b) {
  Perm p = perm_identity(n);
  std::swap(p[a], p[b]);
  return p;
}

// Image of a sorted point set under p, returned sorted.
inline std::vector<Pt> set_image(const Perm& p, const std::vector<Pt>& s) {
  std::vector<Pt> out;
  out.reserve(s.size());
  for (Pt x : s) out.push_back(p[x]);
  std::sort(out.begin(), out.end());
  return out;
}

struct PermHash {
  size_t operator()(const std::vector<Pt>& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Pt x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace ybcalc
