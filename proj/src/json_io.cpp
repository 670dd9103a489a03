#include "densityforge/json_io.hpp"

#include "densityforge/rational.hpp"

namespace densityforge {

Json apset_json(const APSet& a) {
  Json j;
  j["m"] = a.modulus();
  j["R"] = a.residue_list();
  j["add"] = a.added();
  j["del"] = a.removed();
  return j;
}

Json estimate_json(const DensityEstimate& e) {
  Json j;
  j["value"] = e.value;
  Json samples = Json::array();
  for (const auto& [n, ratio] : e.samples) samples.push_back(Json::array({n, ratio}));
  j["samples"] = std::move(samples);
  j["bound"] = e.bound ? Json(rat_to_fraction_string(*e.bound)) : Json(nullptr);
  return j;
}

Json split_json(const SplitResult& s) {
  Json j;
  j["k"] = s.k;
  j["H0"] = s.low_residues;
  j["h0"] = s.pivot;
  j["value_low"] = rat_to_fraction_string(s.value_low);
  j["value_high"] = rat_to_fraction_string(s.value_high);
  return j;
}

Json stage_json(const Stage& s) {
  Json j;
  j["n"] = s.index;
  j["A"] = apset_json(s.inner);
  j["B"] = apset_json(s.outer);
  j["k"] = s.gap_modulus;
  j["h"] = s.gap_residue;
  j["valA"] = rat_to_fraction_string(s.inner_value);
  j["valB"] = rat_to_fraction_string(s.outer_value);
  return j;
}

Json request_json(const DarbouxRequest& r, bool lower_mode) {
  Json j;
  j["x"] = apset_json(r.x);
  j["y"] = apset_json(r.y);
  j["target"] = rat_to_fraction_string(r.target);
  j["depth"] = r.depth;
  j["mode"] = lower_mode ? "lower" : "upper";
  return j;
}

Json trace_json(const DarbouxTrace& t) {
  Json j;
  j["request"] = request_json(t.request, t.lower_mode);
  Json stages = Json::array();
  for (const Stage& s : t.stages) stages.push_back(stage_json(s));
  j["stages"] = std::move(stages);
  Json certs = Json::array();
  for (const Rational& c : t.certificates) certs.push_back(rat_to_fraction_string(c));
  j["certificates"] = std::move(certs);
  j["capped"] = t.capped;
  j["note"] = t.cap_note;
  return j;
}

Json axiom_report_json(const AxiomReport& r) {
  Json j;
  j["functional"] = r.functional;
  j["trials"] = r.trials;
  Json checks = Json::array();
  for (const AxiomCheck& c : r.checks) {
    Json row;
    row["axiom"] = c.axiom;
    row["verdict"] = c.verdict == Verdict::Pass ? "pass" : "violated";
    row["tested"] = c.tested;
    if (c.verdict == Verdict::Violated) {
      Json w;
      w["lhs"] = c.witness_lhs;
      if (!c.witness_rhs.empty()) w["rhs"] = c.witness_rhs;
      if (c.witness_k) {
        w["k"] = c.witness_k;
        w["h"] = c.witness_h;
      }
      w["detail"] = c.detail;
      row["witness"] = std::move(w);
    } else {
      row["witness"] = nullptr;
    }
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json weak_darboux_json(const WeakDarbouxReport& r) {
  Json j;
  j["functional"] = r.functional;
  j["tested"] = r.tested;
  j["refuted"] = r.refuted;
  j["witness"] = r.witness;
  j["detail"] = r.detail;
  return j;
}

Json theta_json(const ThetaResult& r) {
  Json j;
  j["name"] = r.name;
  j["iota"] = r.iota;
  j["dstar_exact"] = r.dstar_exact ? Json(rat_to_fraction_string(*r.dstar_exact)) : Json(nullptr);
  j["dstar_estimate"] = estimate_json(r.dstar_estimate);
  j["theta_exact"] = r.theta_exact ? Json(rat_to_fraction_string(*r.theta_exact)) : Json(nullptr);
  j["theta_estimate"] = r.theta_estimate;
  j["upper_bound"] = r.upper_bound ? Json(rat_to_fraction_string(*r.upper_bound)) : Json(nullptr);
  j["equals_half"] = r.equals_half;
  j["note"] = r.side_note;
  return j;
}

Json demo_report_json(const SymmetricDarbouxReport& r) {
  Json j;
  j["n_max"] = r.n_max;
  Json entries = Json::array();
  for (const ThetaResult& t : r.entries) entries.push_back(theta_json(t));
  j["entries"] = std::move(entries);
  j["half_attained"] = r.half_attained;
  j["note"] = r.note;
  return j;
}

}  // namespace densityforge
