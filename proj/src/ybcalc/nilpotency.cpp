#include "ybcalc/nilpotency.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ybcalc {

namespace {

// Node cap for each individual falsifier comparison. Deep substitution words
// can have congruence classes far beyond any feasible closure, so the
// falsifier gives up on a comparison cheaply (counted against its overflow
// budget) instead of grinding each one to the instance-wide cap. Uniform
// derived actions are unaffected: their equality is decided in closed form.
constexpr uint64_t kFalsifierCompareCap = 25'000;

// Binomial with saturation so subset-count guards cannot overflow.
uint64_t binom_capped(int n, int k, uint64_t cap) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<uint64_t>(n - k + j) / j;
    if (r > cap) return cap + 1;
  }
  return r;
}

bool subset_closed(const MonoidCalc& calc, const std::vector<Pt>& Y) {
  for (Pt v : Y)
    for (Pt u : Y)
      if (!std::binary_search(Y.begin(), Y.end(), calc.sigma()[v][u])) return false;
  return true;
}

// All size-i subsets closed under the derived moves, lexicographic order.
std::vector<std::vector<Pt>> layer_members(const MonoidCalc& calc, int i) {
  std::vector<std::vector<Pt>> out;
  const int n = calc.n();
  std::vector<Pt> cur(i);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == i) {
      if (subset_closed(calc, cur)) out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (i - pos); ++v) {
      cur[pos] = static_cast<Pt>(v);
      rec(pos + 1, v + 1);
    }
  };
  if (i >= 1 && i <= n) rec(0, 0);
  return out;
}

std::vector<Pt> intersect_sorted(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  std::vector<Pt> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> default_sizes(int n) {
  std::vector<int> sizes;
  for (int i = 1; i < n; ++i) sizes.push_back(i);
  return sizes;
}

}  // namespace

ReachableLambdas reachable_lambdas(const MonoidCalc& calc, const std::vector<Pt>& W,
                                   uint64_t state_cap) {
  ReachableLambdas out;
  const Solution& s = calc.solution();
  std::unordered_map<Perm, size_t, PermHash> index;
  Perm id = perm_identity(s.n);
  index.emplace(id, 0);
  out.perms.push_back(id);
  out.witness.push_back({});
  for (size_t head = 0; head < out.perms.size(); ++head) {
    Perm g = out.perms[head];
    Perm g_inv = perm_inverse(g);
    for (Pt t : W) {
      // Appending letter t to a word with lambda' = g multiplies by
      // lambda_{g^{-1}(t)}.
      Perm next = perm_compose(g, s.lam[g_inv[t]]);
      if (index.emplace(next, out.perms.size()).second) {
        if (out.perms.size() + 1 > state_cap) {
          out.capped = true;
          return out;
        }
        Word w = out.witness[head];
        w.push_back(t);
        out.perms.push_back(std::move(next));
        out.witness.push_back(std::move(w));
      }
    }
  }
  return out;
}

NcVerdict nc_search(const MonoidCalc& calc, std::vector<int> sizes, uint64_t reach_cap,
                    uint64_t max_subsets_per_size) {
  const int n = calc.n();
  if (sizes.empty()) sizes = default_sizes(n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  NcVerdict verdict;
  constexpr uint64_t kMaxPairs = 2'000'000;

  for (int i : sizes) {
    if (i < 1 || i > n) continue;
    if (binom_capped(n, i, max_subsets_per_size) > max_subsets_per_size) {
      verdict.skipped_sizes.push_back(i);
      continue;
    }
    std::vector<std::vector<Pt>> members = layer_members(calc, i);
    uint64_t npairs = members.size() * (members.size() ? members.size() - 1 : 0) / 2;
    if (npairs > kMaxPairs) {
      verdict.skipped_sizes.push_back(i);
      continue;
    }
    verdict.searched_sizes.push_back(i);

    std::map<std::vector<Pt>, ReachableLambdas> reach_memo;
    bool reach_capped = false;
    for (size_t yi = 0; yi < members.size(); ++yi) {
      for (size_t zi = yi + 1; zi < members.size(); ++zi) {
        ++verdict.pairs_examined;
        const auto& Y = members[yi];
        const auto& Z = members[zi];
        std::vector<Pt> W = intersect_sorted(Y, Z);
        auto it = reach_memo.find(W);
        if (it == reach_memo.end())
          it = reach_memo.emplace(W, reachable_lambdas(calc, W, reach_cap)).first;
        const ReachableLambdas& R = it->second;
        if (R.capped) {
          reach_capped = true;
          continue;
        }
        for (size_t a = 0; a < R.perms.size(); ++a) {
          Perm ga_inv = perm_inverse(R.perms[a]);
          for (size_t b = 0; b < R.perms.size(); ++b) {
            Perm h = perm_compose(R.perms[b], ga_inv);
            if (set_image(h, Y) == Z && set_image(h, Z) == Y) {
              verdict.kind = NcVerdict::Kind::Satisfied;
              verdict.witness = NcWitness{Y, Z, R.witness[a], R.witness[b], R.perms[a], R.perms[b]};
              return verdict;
            }
          }
        }
      }
    }
    if (reach_capped) verdict.skipped_sizes.push_back(i);
  }

  verdict.kind = verdict.skipped_sizes.empty() ? NcVerdict::Kind::NotSatisfied
                                               : NcVerdict::Kind::Inconclusive;
  return verdict;
}

bool nc_verify_witness(const MonoidCalc& calc, const std::vector<Pt>& Y,
                       const std::vector<Pt>& Z, const Word& a, const Word& b) {
  auto check_subset = [&](const std::vector<Pt>& S) {
    if (S.empty() || !std::is_sorted(S.begin(), S.end()) ||
        std::adjacent_find(S.begin(), S.end()) != S.end())
      throw DomainError("bad_subset", "subset must be nonempty, sorted, duplicate free");
    for (Pt v : S)
      if (v >= calc.n()) throw DomainError("bad_subset", "subset element out of range");
  };
  check_subset(Y);
  check_subset(Z);
  std::vector<Pt> W = intersect_sorted(Y, Z);
  for (const Word* w : {&a, &b})
    for (Pt t : *w)
      if (!std::binary_search(W.begin(), W.end(), t))
        throw DomainError("witness_letters_outside_intersection",
                          "witness words must use letters from the intersection of Y and Z");

  if (Y == Z || Y.size() != Z.size()) return false;
  if (!subset_closed(calc, Y) || !subset_closed(calc, Z)) return false;
  Perm g_a = calc.lambda_ext_a(a);
  Perm g_b = calc.lambda_ext_a(b);
  Perm h = perm_compose(g_b, perm_inverse(g_a));
  return set_image(h, Y) == Z && set_image(h, Z) == Y;
}

LyubashenkoCriterion lyubashenko_criterion(const Perm& sigma, const Perm& tau) {
  if (sigma.size() != tau.size() || sigma.empty())
    throw DomainError("shape_mismatch", "sigma and tau must act on the same nonempty set");
  if (!is_perm(sigma) || !is_perm(tau))
    throw DomainError("non_permutation_row", "sigma and tau must be permutations");
  if (perm_compose(sigma, tau) != perm_compose(tau, sigma))
    throw DomainError("non_commuting", "sigma and tau do not commute");

  LyubashenkoCriterion crit;
  Perm gamma = perm_compose(sigma, tau);
  crit.cycles = perm_cycles(gamma, true);
  crit.holds = true;
  for (const auto& cyc : crit.cycles) {
    const int m = static_cast<int>(cyc.size());
    int k = -1;
    for (int j = 0; j < m; ++j)
      if (cyc[j] == sigma[cyc[0]]) k = j;
    bool ok = (k >= 0);
    if (ok)
      for (int j = 0; j < m; ++j)
        if (sigma[cyc[j]] != cyc[(j + k) % m]) ok = false;
    if (!ok) {
      crit.holds = false;
      crit.exponents.clear();
      return crit;
    }
    // tau restricted to the cycle is then automatically the complementary
    // power; fail loudly if arithmetic ever disagrees.
    for (int j = 0; j < m; ++j)
      if (tau[cyc[j]] != cyc[(j + 1 - k + m) % m])
        throw InternalError("complementary cycle power failed");
    crit.exponents.push_back(k);
  }
  return crit;
}

std::optional<RackBound> rack_nilpotency_bound(const Solution& s, uint64_t closure_cap) {
  for (int y = 0; y < s.n; ++y)
    if (!perm_is_identity(s.rho[y])) return std::nullopt;
  RackBound rb;
  rb.quandle = true;
  for (int x = 0; x < s.n; ++x)
    if (s.lam[x][x] != x) rb.quandle = false;
  GroupClosure g = group_closure(s.n, s.lam, closure_cap);
  if (g.capped) {
    rb.capped = true;
    return rb;
  }
  NilpotencyInfo nil = nilpotency_class(g, closure_cap);
  rb.capped = nil.capped;
  rb.group_nilpotent = nil.nilpotent;
  rb.group_class = nil.cls;
  if (nil.nilpotent) rb.malcev_bound = nil.cls + (rb.quandle ? 1 : 2);
  return rb;
}

namespace {

std::vector<Word> words_up_to(int n, uint32_t len) {
  std::vector<Word> out;
  out.push_back({});
  std::vector<Word> layer = {{}};
  for (uint32_t L = 1; L <= len; ++L) {
    std::vector<Word> next;
    next.reserve(layer.size() * n);
    for (const Word& w : layer)
      for (int x = 0; x < n; ++x) {
        Word nw = w;
        nw.push_back(static_cast<Pt>(x));
        next.push_back(std::move(nw));
      }
    for (const Word& w : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

Word concat3(const Word& a, const Word& b, const Word& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

FalsifierResult malcev_falsify(const MonoidCalc& calc, int cls, uint32_t len,
                               uint64_t overflow_budget) {
  if (cls < 1) throw DomainError("bad_level", "falsifier level must be at least 1");
  FalsifierResult res;
  res.cls = cls;
  res.len = len;
  std::vector<Word> words = words_up_to(calc.n(), len);

  std::vector<Word> zchain;
  std::function<bool(int, const Word&, const Word&)> descend =
      [&](int k, const Word& xw, const Word& yw) -> bool {
    for (const Word& zw : words) {
      if (res.truncated) return false;
      Word xk = concat3(xw, zw, yw);
      Word yk = concat3(yw, zw, xw);
      ++res.comparisons;
      Tri t = calc.m_equal(xk, yk, kFalsifierCompareCap);
      if (t == Tri::Overflow) {
        ++res.overflowed;
        if (res.overflowed >= overflow_budget) res.truncated = true;
        continue;
      }
      if (t == Tri::False) {
        zchain.push_back(zw);
        if (k == cls) return true;
        if (descend(k + 1, xk, yk)) return true;
        zchain.pop_back();
      }
      // Equal at level k: no extension of this substitution can violate a
      // higher level, prune.
    }
    return false;
  };

  for (size_t ix = 0; ix < words.size() && !res.truncated; ++ix) {
    for (size_t iy = ix + 1; iy < words.size() && !res.truncated; ++iy) {
      ++res.comparisons;
      Tri base = calc.m_equal(words[ix], words[iy], kFalsifierCompareCap);
      if (base == Tri::Overflow) {
        ++res.overflowed;
        if (res.overflowed >= overflow_budget) res.truncated = true;
        continue;
      }
      if (base == Tri::True) continue;  // equal elements never separate
      zchain.clear();
      if (descend(1, words[ix], words[iy])) {
        res.counterexample = MalcevCounterexample{words[ix], words[iy], zchain, cls};
        return res;
      }
    }
  }
  return res;
}

std::vector<UniformLevel> uniform_components(const MonoidCalc& calc, uint32_t d,
                                             std::vector<int> sizes, uint64_t word_budget,
                                             uint64_t max_subsets_per_size) {
  const int n = calc.n();
  if (sizes.empty()) sizes = default_sizes(n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<UniformLevel> out;
  for (int i : sizes) {
    if (i < 1 || i > n) continue;
    UniformLevel lvl;
    lvl.size = i;
    if (binom_capped(n, i, max_subsets_per_size) > max_subsets_per_size) {
      out.push_back(std::move(lvl));  // empty layer record: size skipped
      continue;
    }
    std::vector<std::vector<Pt>> members = layer_members(calc, i);
    for (const auto& Y : members) lvl.states.push_back(subset_state(calc, Y, d));
    lvl.sim = sim_classes(calc, members, d, word_budget);
    out.push_back(std::move(lvl));
  }
  return out;
}

NilpotencyReport nilpotency_report(const Solution& s, const AnalysisOptions& opts) {
  ValidationResult v = validate_solution(s);
  if (!v.valid) throw DomainError("invalid_solution", v.issues[0].message);

  NilpotencyReport rep;
  rep.stats = solution_stats(s);
  rep.groups = perm_group_report(s, opts.closure_cap);

  rep.permutation_pair = true;
  for (int x = 1; x < s.n; ++x)
    if (s.lam[x] != s.lam[0] || s.rho[x] != s.rho[0]) rep.permutation_pair = false;

  std::vector<std::string> not_nil, nil_evidence;

  if (rep.permutation_pair) {
    rep.lyubashenko = lyubashenko_criterion(s.lam[0], s.rho[0]);
    if (rep.lyubashenko->holds)
      nil_evidence.push_back("lyubashenko_criterion_holds");
    else
      not_nil.push_back("lyubashenko_criterion_fails");
  }

  rep.rack_bound = rack_nilpotency_bound(s, opts.closure_cap);
  if (rep.rack_bound && rep.rack_bound->group_nilpotent)
    nil_evidence.push_back("rack_group_bound_class_at_most_" +
                           std::to_string(rep.rack_bound->malcev_bound));

  if (!rep.groups.g_lambda.capped && !rep.groups.g_lambda.nil.capped &&
      !rep.groups.g_lambda.nil.nilpotent)
    not_nil.push_back("lambda_group_not_nilpotent");

  MonoidCalc calc(s, opts.class_cap);
  rep.d = compute_d(calc, opts.d_retries, opts.closure_cap);

  if (rep.d.d) {
    rep.nc = nc_search(calc, {}, opts.reach_cap, opts.max_subsets_per_size);
    if (rep.nc->kind == NcVerdict::Kind::Satisfied) not_nil.push_back("pair_condition_satisfied");
    if (opts.run_components)
      rep.levels = uniform_components(calc, *rep.d.d, {}, opts.sim_word_budget,
                                      opts.max_subsets_per_size);
  } else {
    rep.skipped.push_back("pair_condition: no verified block constant (" + rep.d.failure + ")");
  }

  bool undecided = not_nil.empty() && nil_evidence.empty();
  if (undecided && opts.run_falsifier) {
    rep.falsifier = malcev_falsify(calc, opts.malcev_class, opts.malcev_len,
                                   opts.falsifier_overflow_budget);
  } else if (!opts.run_falsifier) {
    rep.skipped.push_back("falsifier: disabled");
  }

  if (!not_nil.empty() && !nil_evidence.empty())
    throw InternalError("contradictory nilpotency evidence: " + not_nil[0] + " vs " +
                        nil_evidence[0]);

  if (!not_nil.empty()) {
    rep.verdict = "not_nilpotent";
    rep.reasons = not_nil;
  } else if (!nil_evidence.empty()) {
    rep.verdict = "nilpotent_evidence";
    rep.reasons = nil_evidence;
  } else {
    rep.verdict = "undetermined";
    if (rep.nc && rep.nc->kind == NcVerdict::Kind::NotSatisfied)
      rep.reasons.push_back("pair_condition_not_satisfied");
    if (rep.nc && rep.nc->kind == NcVerdict::Kind::Inconclusive)
      rep.reasons.push_back("pair_condition_inconclusive");
    // A counterexample at level k refutes nilpotency of class <= k and
    // nothing beyond: the identities weaken as the level grows, so a small
    // monoid can fail level 3 yet be nilpotent of class 4. It therefore
    // stays inside the undetermined verdict as a precise partial fact.
    if (rep.falsifier && rep.falsifier->counterexample)
      rep.reasons.push_back("not_nilpotent_of_class_at_most_" +
                            std::to_string(rep.falsifier->counterexample->level));
    if (rep.falsifier && !rep.falsifier->counterexample)
      rep.reasons.push_back(rep.falsifier->truncated ? "falsifier_truncated_no_counterexample"
                                                     : "falsifier_no_counterexample");
  }
  return rep;
}

}  // namespace ybcalc
