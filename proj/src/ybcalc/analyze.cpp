#include "ybcalc/analyze.hpp"

#include <chrono>

namespace ybcalc {

Json json_word(const Word& w) {
  Json out = Json::array();
  for (Pt x : w) out.push_back(static_cast<int>(x));
  return out;
}

Json json_subset(const std::vector<Pt>& s) { return json_word(s); }
Json json_perm(const Perm& p) { return json_word(p); }

Json json_validation(const ValidationResult& v) {
  Json out;
  out["valid"] = v.valid;
  Json issues = Json::array();
  for (const auto& i : v.issues) {
    Json issue;
    issue["code"] = i.code;
    issue["message"] = i.message;
    issue["where"] = i.where;
    issues.push_back(std::move(issue));
  }
  out["issues"] = std::move(issues);
  return out;
}

Json json_stats(const SolutionStats& st) {
  Json out;
  out["involutive"] = st.involutive;
  out["square_free"] = st.square_free;
  out["r_order"] = st.r_order;
  return out;
}

Json json_mpl(const MplResult& m) {
  Json out;
  switch (m.kind) {
    case MplResult::Kind::Finite: out["kind"] = "Finite"; break;
    case MplResult::Kind::Irretractable: out["kind"] = "Irretractable"; break;
    default: out["kind"] = "CapExceeded"; break;
  }
  if (m.kind == MplResult::Kind::Finite) out["level"] = m.level;
  out["tower"] = m.tower_sizes;
  return out;
}

namespace {

Json group_entry(const GroupReportEntry& e) {
  Json out;
  out["order"] = e.order;
  out["capped"] = e.capped;
  if (!e.capped && !e.nil.capped) {
    out["nilpotent"] = e.nil.nilpotent;
    if (e.nil.nilpotent) out["class"] = e.nil.cls;
    out["lcs_orders"] = e.nil.series_orders;
  }
  return out;
}

}  // namespace

Json json_groups(const PermGroupReport& g) {
  Json out;
  out["lambda"] = group_entry(g.g_lambda);
  out["rho"] = group_entry(g.g_rho);
  out["sigma"] = group_entry(g.g_sigma);
  out["lambda_rho"] = group_entry(g.g_lambda_rho);
  out["lambda_hat"] = group_entry(g.g_lambda_hat);
  out["full"] = group_entry(g.g_full);
  return out;
}

Json json_lyubashenko(const LyubashenkoCriterion& c) {
  Json out;
  out["holds"] = c.holds;
  Json cycles = Json::array();
  for (const auto& cyc : c.cycles) cycles.push_back(json_subset(cyc));
  out["cycles"] = std::move(cycles);
  if (c.holds) out["exponents"] = c.exponents;
  return out;
}

Json json_rack_bound(const RackBound& b) {
  Json out;
  out["group_nilpotent"] = b.group_nilpotent;
  out["capped"] = b.capped;
  if (b.group_nilpotent) {
    out["group_class"] = b.group_class;
    out["quandle"] = b.quandle;
    out["malcev_bound"] = b.malcev_bound;
  }
  return out;
}

Json json_d(const DConstant& d) {
  Json out;
  if (d.d) {
    out["value"] = *d.d;
  } else {
    out["value"] = nullptr;
    out["failure"] = d.failure;
  }
  out["start"] = d.start;
  out["doublings"] = d.doublings;
  out["overflow"] = d.overflow;
  return out;
}

Json json_nc(const NcVerdict& v) {
  Json out;
  switch (v.kind) {
    case NcVerdict::Kind::Satisfied: out["outcome"] = "Satisfied"; break;
    case NcVerdict::Kind::NotSatisfied: out["outcome"] = "NotSatisfied"; break;
    default: out["outcome"] = "Inconclusive"; break;
  }
  if (v.witness) {
    Json w;
    w["Y"] = json_subset(v.witness->Y);
    w["Z"] = json_subset(v.witness->Z);
    w["a"] = json_word(v.witness->a);
    w["b"] = json_word(v.witness->b);
    w["lambda_a"] = json_perm(v.witness->g_a);
    w["lambda_b"] = json_perm(v.witness->g_b);
    out["witness"] = std::move(w);
  }
  out["searched_sizes"] = v.searched_sizes;
  out["skipped_sizes"] = v.skipped_sizes;
  out["pairs_examined"] = v.pairs_examined;
  return out;
}

Json json_levels(const std::vector<UniformLevel>& levels) {
  Json out = Json::array();
  for (const auto& lv : levels) {
    Json l;
    l["size"] = lv.size;
    Json members = Json::array();
    for (const auto& st : lv.states) {
      Json m;
      m["subset"] = json_subset(st.subset);
      m["divisors_cross_checked"] = st.divisors_cross_checked;
      members.push_back(std::move(m));
    }
    l["members"] = std::move(members);
    Json edges = Json::array();
    for (const auto& e : lv.sim.edges) {
      Json ej;
      ej["from"] = e.from;
      ej["to"] = e.to;
      ej["witness"] = json_word(e.witness);
      edges.push_back(std::move(ej));
    }
    l["edges"] = std::move(edges);
    l["component_of"] = lv.sim.component_of;
    Json unknown = Json::array();
    for (const auto& [a, b] : lv.sim.unknown_pairs) unknown.push_back(Json::array({a, b}));
    l["unknown_pairs"] = std::move(unknown);
    l["words_examined"] = lv.sim.words_examined;
    l["budget_exhausted"] = lv.sim.budget_exhausted;
    out.push_back(std::move(l));
  }
  return out;
}

Json json_falsifier(const FalsifierResult& f) {
  Json out;
  out["class"] = f.cls;
  out["length"] = f.len;
  if (f.counterexample) {
    Json c;
    c["x"] = json_word(f.counterexample->x);
    c["y"] = json_word(f.counterexample->y);
    Json zs = Json::array();
    for (const auto& z : f.counterexample->z) zs.push_back(json_word(z));
    c["z"] = std::move(zs);
    c["level"] = f.counterexample->level;
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  out["comparisons"] = f.comparisons;
  out["overflowed"] = f.overflowed;
  out["truncated"] = f.truncated;
  return out;
}

Json json_rack_data(const RackData& d) {
  Json out;
  if (!d.name.empty()) out["name"] = d.name;
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(json_subset(b));
  out["blocks"] = std::move(blocks);
  Json f = Json::array();
  for (const auto& row : d.f) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(json_perm(p));
    f.push_back(std::move(r));
  }
  out["f"] = std::move(f);
  return out;
}

Json json_commutator(const CommutatorReport& c) {
  Json out;
  out["elements"] = json_subset(c.elements);
  out["size"] = c.elements.size();
  out["add_subgroup"] = c.add_subgroup;
  out["mul_subgroup"] = c.mul_subgroup;
  out["add_normal"] = c.add_normal;
  out["mul_normal"] = c.mul_normal;
  out["lambda_invariant"] = c.lambda_invariant;
  out["is_ideal"] = c.is_ideal;
  return out;
}

Json json_socle_series(const SocleSeries& s) {
  Json out;
  out["kind"] = s.kind == SocleSeries::Kind::FiniteLength ? "FiniteLength" : "NoFiniteSeries";
  if (s.kind == SocleSeries::Kind::FiniteLength) out["length"] = s.length;
  out["quotient_sizes"] = s.quotient_sizes;
  out["socle_sizes"] = s.socle_sizes;
  return out;
}

Json json_nilpotency(const NilpotencyReport& r) {
  Json out;
  out["verdict"] = r.verdict;
  out["reasons"] = r.reasons;
  out["skipped"] = r.skipped;
  out["permutation_pair"] = r.permutation_pair;
  if (r.lyubashenko) out["lyubashenko"] = json_lyubashenko(*r.lyubashenko);
  if (r.rack_bound) out["rack_bound"] = json_rack_bound(*r.rack_bound);
  if (r.falsifier) out["falsifier"] = json_falsifier(*r.falsifier);
  return out;
}

Json analysis_report(const Solution& s, const AnalysisOptions& opts, bool with_timing) {
  const auto t0 = std::chrono::steady_clock::now();
  Json out;
  out["schema_version"] = 1;
  if (!s.name.empty()) out["name"] = s.name;
  out["n"] = s.n;
  auto v = validate_solution(s);
  out["validation"] = json_validation(v);
  if (v.valid) {
    auto rep = nilpotency_report(s, opts);
    out["stats"] = json_stats(rep.stats);
    out["retract"] = json_mpl(mpl_tower(s));
    out["groups"] = json_groups(rep.groups);
    out["d"] = json_d(rep.d);
    out["levels"] = json_levels(rep.levels);
    if (rep.nc) out["nc"] = json_nc(*rep.nc);
    out["nilpotency"] = json_nilpotency(rep);
  }
  if (with_timing) {
    const auto t1 = std::chrono::steady_clock::now();
    out["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  return out;
}

Json validation_report(const char* kind_name, const ValidationResult& v) {
  Json out;
  out["kind"] = kind_name;
  out["validation"] = json_validation(v);
  return out;
}

Json brace_socle_report(const SkewBrace& b) {
  Json out;
  if (!b.name.empty()) out["name"] = b.name;
  out["socle"] = json_subset(socle(b));
  out["series"] = json_socle_series(socle_series(b));
  return out;
}

Json brace_commutator_report(const SkewBrace& b) {
  Json out;
  if (!b.name.empty()) out["name"] = b.name;
  out["commutator"] = json_commutator(additive_commutator(b));
  return out;
}

}  // namespace ybcalc
