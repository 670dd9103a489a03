#pragma once

#include "json.hpp"

#include "densityforge/apset.hpp"
#include "densityforge/counterexamples.hpp"
#include "densityforge/darboux.hpp"
#include "densityforge/density.hpp"
#include "densityforge/harness.hpp"

namespace densityforge {

// Insertion-ordered documents so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json apset_json(const APSet& a);
Json estimate_json(const DensityEstimate& e);
Json split_json(const SplitResult& s);
Json stage_json(const Stage& s);
Json request_json(const DarbouxRequest& r, bool lower_mode);
Json trace_json(const DarbouxTrace& t);
Json axiom_report_json(const AxiomReport& r);
Json weak_darboux_json(const WeakDarbouxReport& r);
Json theta_json(const ThetaResult& r);
Json demo_report_json(const SymmetricDarbouxReport& r);

}  // namespace densityforge
