#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "densityforge/apset.hpp"
#include "densityforge/density.hpp"

namespace densityforge {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_modulus = 60;
  std::size_t max_finite = 8;
  std::size_t trials = 500;
};

/// Deterministic stream of canonical APSets. The first two emitted sets are
/// always the empty set and N, and a fifth of the stream cycles through the
/// corner shapes axiom violations tend to live at (finite sets, shifts,
/// cofinite sets, pure progressions).
class APSetGenerator {
 public:
  explicit APSetGenerator(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  APSet next();

 private:
  std::uint64_t draw(std::uint64_t n) { return rng_() % n; }  // determinism over uniformity
  APSet corner(std::uint64_t which);
  APSet random_set();

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
  std::uint64_t emitted_ = 0;
};

std::vector<APSet> generate_apsets(const GeneratorConfig& cfg);

enum class Verdict { Pass, Violated };

/// One axiom row. "Pass" means no counterexample exists among the tested
/// instances under exact rational comparison, not a proof. A violation
/// always carries operands serialized as DSL expressions, replayable to the
/// same inequality.
struct AxiomCheck {
  std::string axiom;
  Verdict verdict = Verdict::Pass;
  std::uint64_t tested = 0;
  std::string witness_lhs;    // DSL expression
  std::string witness_rhs;    // second operand, when binary
  std::uint64_t witness_k = 0, witness_h = 0;  // affine parameters, when relevant
  std::string detail;         // the violated inequality with exact values
};

struct AxiomReport {
  std::string functional;
  std::uint64_t trials = 0;
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck* find(const std::string& axiom) const;
};

/// Exercises F1, F2, F2b, F3, F4, F4b, F5 plus nonnegativity, image in
/// [0,1], and vanishing on finite sets, with exact rational comparisons.
/// F4b runs over k <= 12, h <= 12; F5 is its k = 1 slice and F4 its h = 0
/// slice. Violations are data, not errors.
AxiomReport check_axioms(const DensityFunctional& f, const GeneratorConfig& cfg);

/// Searches finite sets for f(X) > f(empty) — a certificate that f lacks
/// the weak intermediate-value property (a finite set has finitely many
/// subsets, too few to realize a whole interval of values).
struct WeakDarbouxReport {
  std::string functional;
  std::uint64_t tested = 0;
  bool refuted = false;
  std::string witness;  // DSL expression
  std::string detail;
};

WeakDarbouxReport check_weak_darboux_consequence(const DensityFunctional& f,
                                                 const GeneratorConfig& cfg);

}  // namespace densityforge
