#pragma once
// Machine-readable reports. Each json_* helper renders one result struct;
// analysis_report runs the whole pipeline on a solution and assembles the
// full document. Key order is fixed so byte-identical reruns diff cleanly;
// the only nondeterministic field is timing_ms, added on request.

#include "json.hpp"
#include "ybcalc/brace.hpp"
#include "ybcalc/nilpotency.hpp"
#include "ybcalc/rack.hpp"
#include "ybcalc/retract.hpp"

namespace ybcalc {

using Json = nlohmann::ordered_json;

Json json_word(const Word& w);
Json json_subset(const std::vector<Pt>& s);
Json json_perm(const Perm& p);

Json json_validation(const ValidationResult& v);
Json json_stats(const SolutionStats& st);
Json json_mpl(const MplResult& m);
Json json_groups(const PermGroupReport& g);
Json json_lyubashenko(const LyubashenkoCriterion& c);
Json json_rack_bound(const RackBound& b);
Json json_d(const DConstant& d);
Json json_nc(const NcVerdict& v);
Json json_levels(const std::vector<UniformLevel>& levels);
Json json_falsifier(const FalsifierResult& f);
Json json_rack_data(const RackData& d);
Json json_commutator(const CommutatorReport& c);
Json json_socle_series(const SocleSeries& s);

// Verdict, reasons and the stage results that are not broken out at the top
// level of the analysis report (criterion, rack bound, falsifier).
Json json_nilpotency(const NilpotencyReport& r);

// Full pipeline: validation, stats, retract tower, groups, d, layer levels,
// the pair-condition verdict, and the nilpotency summary. On an invalid
// solution only the validation block is present.
Json analysis_report(const Solution& s, const AnalysisOptions& opts = {},
                     bool with_timing = true);

// Report bodies shared by the C surface and the golden corpus, so the two
// can never drift apart. Braces are validated (DomainError when invalid).
Json validation_report(const char* kind_name, const ValidationResult& v);
Json brace_socle_report(const SkewBrace& b);
Json brace_commutator_report(const SkewBrace& b);

}  // namespace ybcalc
