#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "densityforge/apset.hpp"
#include "densityforge/rational.hpp"

namespace densityforge {

/// Named density evaluator on the canonical set class. `exact` marks the
/// evaluators whose value is the one every admissible density functional is
/// forced to take on this class (so the refinement engine may rely on it);
/// the counterexample functionals compute exact rationals too, but their
/// values are their own, so they carry exact = false.
struct DensityFunctional {
  std::string name;
  std::function<Rational(const APSet&)> eval;
  bool exact = false;
};

/// The value shared by every admissible density functional on an eventually
/// periodic set: |R|/m. Finite perturbations never move it.
Rational canonical_value(const APSet& a);

/// DensityFunctional wrapper around canonical_value.
DensityFunctional canonical_functional();

/// Conjugate functional g(a) = 1 - f.eval(complement(a)). Applying it twice
/// returns to f.
DensityFunctional lower_conjugate(const DensityFunctional& f);

/// Finite-sample surrogate for the upper asymptotic density. `value` is the
/// max ratio over the tail half of the schedule; exact only in the limit,
/// so estimates are oracles and never feed the construction engine.
struct DensityEstimate {
  double value = 0.0;
  std::vector<std::pair<std::uint64_t, double>> samples;  // (N, |s ∩ [0,N)| / N)
  std::optional<Rational> bound;  // |sample - exact| bound, when the input is an APSet
};

/// Schedule must be nonempty and strictly increasing.
DensityEstimate estimate_upper_asymptotic(const std::function<bool(std::uint64_t)>& member,
                                          const std::vector<std::uint64_t>& schedule);
/// APSet overload: counts by period arithmetic and attaches the exact error
/// bound (m + |added| + |removed|) / N_last.
DensityEstimate estimate_upper_asymptotic(const APSet& a,
                                          const std::vector<std::uint64_t>& schedule);

/// Sliding-window surrogate for the upper Banach density: max over windows
/// [t, t+window) inside [0, scan) of count/window. Requires 1 <= window <= scan.
DensityEstimate estimate_banach(const std::function<bool(std::uint64_t)>& member,
                                std::uint64_t window, std::uint64_t scan);

}  // namespace densityforge
