#include "densityforge/harness.hpp"

#include <algorithm>

#include "densityforge/rational.hpp"

namespace densityforge {

APSet APSetGenerator::corner(std::uint64_t which) {
  switch (which % 8) {
    case 0: return APSet::empty_set();
    case 1: return APSet::naturals();
    case 2: return APSet::progression(2, draw(2));
    case 3: return APSet::finite({1 + draw(2 * cfg_.max_modulus)});
    case 4: {  // cofinite
      std::vector<std::uint64_t> rem;
      for (std::size_t i = 0, n = 1 + draw(std::max<std::size_t>(cfg_.max_finite, 1)); i < n; ++i)
        rem.push_back(draw(4 * cfg_.max_modulus));
      Bitset bits(1);
      bits.set(0);
      return APSet::from_parts(1, std::move(bits), {}, std::move(rem));
    }
    case 5: {
      std::uint64_t k = 1 + draw(cfg_.max_modulus);
      return APSet::progression(k, draw(3 * k));
    }
    case 6: {
      std::uint64_t k = 1 + draw(cfg_.max_modulus);
      std::vector<std::uint64_t> rs;
      for (std::uint64_t r = 0; r < k; ++r)
        if (draw(4) == 0) rs.push_back(r);
      return APSet::residue_family(k, rs);
    }
    default: {
      std::vector<std::uint64_t> elems;
      for (std::size_t i = 0, n = draw(std::max<std::size_t>(cfg_.max_finite, 1) + 1); i < n; ++i)
        elems.push_back(draw(6 * cfg_.max_modulus));
      return APSet::finite(std::move(elems));
    }
  }
}

APSet APSetGenerator::random_set() {
  std::uint64_t m = 1 + draw(cfg_.max_modulus);
  Bitset bits(m);
  std::uint64_t density_mille = draw(1001);
  for (std::uint64_t r = 0; r < m; ++r)
    if (draw(1000) < density_mille) bits.set(r);

  std::vector<std::uint64_t> add, rem;
  std::size_t budget = cfg_.max_finite ? draw(cfg_.max_finite + 1) : 0;
  for (std::size_t i = 0; i < budget; ++i) {
    std::uint64_t x = draw(6 * m + 1);
    if (bits.test(x % m))
      rem.push_back(x);
    else
      add.push_back(x);
  }
  return APSet::from_parts(m, std::move(bits), std::move(add), std::move(rem));
}

APSet APSetGenerator::next() {
  std::uint64_t i = emitted_++;
  if (i == 0) return APSet::empty_set();
  if (i == 1) return APSet::naturals();
  if (i % 5 == 2) return corner(draw(8));
  return random_set();
}

std::vector<APSet> generate_apsets(const GeneratorConfig& cfg) {
  APSetGenerator gen(cfg);
  std::vector<APSet> out;
  out.reserve(cfg.trials);
  for (std::size_t i = 0; i < cfg.trials; ++i) out.push_back(gen.next());
  return out;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.verdict == Verdict::Pass; });
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const AxiomCheck& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

namespace {

struct CheckTable {
  std::vector<AxiomCheck> rows;

  AxiomCheck& row(const std::string& axiom) {
    for (AxiomCheck& c : rows)
      if (c.axiom == axiom) return c;
    AxiomCheck fresh;
    fresh.axiom = axiom;
    rows.push_back(std::move(fresh));
    return rows.back();
  }

  /// Records the first violation per axiom; later ones only bump `tested`.
  void note(const std::string& axiom, bool ok, const APSet& lhs, const APSet* rhs,
            std::uint64_t k, std::uint64_t h, const std::string& detail) {
    AxiomCheck& c = row(axiom);
    ++c.tested;
    if (ok || c.verdict == Verdict::Violated) return;
    c.verdict = Verdict::Violated;
    c.witness_lhs = lhs.to_expr_string();
    if (rhs) c.witness_rhs = rhs->to_expr_string();
    c.witness_k = k;
    c.witness_h = h;
    c.detail = detail;
  }
};

}  // namespace

AxiomReport check_axioms(const DensityFunctional& f, const GeneratorConfig& cfg) {
  std::vector<APSet> sets = generate_apsets(cfg);
  CheckTable table;
  // Fixed row order for reproducible reports.
  for (const char* axiom :
       {"F1", "F2", "F2b", "F3", "F4", "F4b", "F5", "nonneg", "image01", "finite_null"})
    table.row(axiom);

  const APSet nat = APSet::naturals();
  {
    Rational v = f.eval(nat);
    table.note("F1", v == 1, nat, nullptr, 0, 0, "value(N) = " + rat_to_string(v) + " != 1");
  }

  std::vector<Rational> values;
  values.reserve(sets.size());
  for (const APSet& s : sets) values.push_back(f.eval(s));

  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Rational& v = values[i];
    table.note("nonneg", v >= 0, sets[i], nullptr, 0, 0, "value = " + rat_to_string(v) + " < 0");
    table.note("image01", v >= 0 && v <= 1, sets[i], nullptr, 0, 0,
               "value = " + rat_to_string(v) + " outside [0,1]");
    table.note("F2b", v <= 1, sets[i], nullptr, 0, 0, "value = " + rat_to_string(v) + " > 1");
    if (sets[i].residues().none()) {  // finite set
      table.note("finite_null", v == 0, sets[i], nullptr, 0, 0,
                 "finite set has value " + rat_to_string(v));
    }
  }

  // Monotonicity on subset pairs (a, a ∪ b).
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const APSet& a = sets[i];
    const APSet& b = sets[(i + 1) % sets.size()];
    APSet u = set_union(a, b);
    Rational vu = f.eval(u);
    table.note("F2", values[i] <= vu, a, &u, 0, 0,
               "value(a) = " + rat_to_string(values[i]) + " > value(a∪b) = " + rat_to_string(vu));
  }

  // Subadditivity on all unordered pairs.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i; j < sets.size(); ++j) {
      Rational vu = f.eval(set_union(sets[i], sets[j]));
      bool ok = vu <= values[i] + values[j];
      table.note("F3", ok, sets[i], &sets[j], 0, 0,
                 "value(a∪b) = " + rat_to_string(vu) + " > " + rat_to_string(values[i]) + " + " +
                     rat_to_string(values[j]));
    }
  }

  // Affine scaling over k <= 12, h <= 12; h = 0 is the pure-scaling slice,
  // k = 1 the pure-shift slice.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t k = 1 + (cfg.seed + i) % 12;
    std::uint64_t h = (cfg.seed / 7 + 3 * i) % 13;
    for (auto [kk, hh] : {std::pair{k, h}, {k, std::uint64_t{0}}, {std::uint64_t{1}, h}}) {
      Rational image = f.eval(affine_image(sets[i], kk, hh));
      Rational expected = values[i] / BigInt(kk);
      bool ok = image == expected;
      std::string detail = "value(" + std::to_string(kk) + "·a+" + std::to_string(hh) +
                           ") = " + rat_to_string(image) + " != " + rat_to_string(expected);
      table.note("F4b", ok, sets[i], nullptr, kk, hh, detail);
      if (hh == 0) table.note("F4", ok, sets[i], nullptr, kk, hh, detail);
      if (kk == 1) table.note("F5", ok, sets[i], nullptr, kk, hh, detail);
    }
  }

  AxiomReport report;
  report.functional = f.name;
  report.trials = sets.size();
  report.checks = std::move(table.rows);
  return report;
}

WeakDarbouxReport check_weak_darboux_consequence(const DensityFunctional& f,
                                                 const GeneratorConfig& cfg) {
  WeakDarbouxReport report;
  report.functional = f.name;
  Rational base = f.eval(APSet::empty_set());

  std::vector<APSet> candidates = {APSet::finite({0}), APSet::finite({1}), APSet::finite({2}),
                                   APSet::finite({0, 1}), APSet::finite({1, 2, 3})};
  APSetGenerator gen(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    APSet s = gen.next();
    if (s.residues().none() && !s.empty()) candidates.push_back(std::move(s));
  }

  for (const APSet& x : candidates) {
    ++report.tested;
    Rational v = f.eval(x);
    if (v > base) {
      report.refuted = true;
      report.witness = x.to_expr_string();
      report.detail = "value(X) = " + rat_to_string(v) + " > value(EMPTY) = " +
                      rat_to_string(base) + "; a finite set has too few subsets for an " +
                      "intermediate value";
      break;
    }
  }
  return report;
}

}  // namespace densityforge
