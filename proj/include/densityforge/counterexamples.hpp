#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "densityforge/apset.hpp"
#include "densityforge/density.hpp"
#include "densityforge/rational.hpp"

namespace densityforge {

// Set functions that satisfy all but one of the density axioms and whose
// image is confined to {0} ∪ {1/k} (or {0,1}); each is a witness that the
// dropped axiom is what makes intermediate values reachable.

/// 0 for sets with finitely many positive elements, else 1/(least gap
/// between consecutive positive elements). Satisfies normalization,
/// monotonicity and affine scaling; not subadditivity.
Rational gap_sup(const APSet& a);

/// 1 if the canonical value is positive, 0 otherwise. Satisfies
/// normalization, monotonicity, subadditivity and shift invariance; not
/// affine scaling.
Rational dichotomy(const APSet& a);

/// 1/min(positive part), 0 when there is none. Satisfies everything except
/// shift invariance.
Rational inf_reciprocal(const APSet& a);

DensityFunctional gap_sup_functional();
DensityFunctional dichotomy_functional();
DensityFunctional inf_reciprocal_functional();

// ===========================================================================
// Factorial-block family: X is the union of the integer ranges
// [(1/4)(2n-1)! + (3/4)(2n)! + 1, (2n)!+1] for 2 <= n <= n_max, and
// Y = X ∪ 4·N. X has upper asymptotic density 1/4, approached at the block
// right endpoints; Y is bounded by 7/16. Together with the index tags
// iota(X) = 4 and iota(Y) = 1 they exhibit a set function (theta_star) whose
// values on sets between X and Y avoid 1/2 entirely.
// ===========================================================================
class Example4Family {
 public:
  /// n_max in [2, 8]; factorial arithmetic stays inside 64 bits.
  explicit Example4Family(int n_max = 3);

  int n_max() const { return n_max_; }
  /// Inclusive integer ranges, ascending and disjoint.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& blocks() const { return blocks_; }

  bool in_x(std::uint64_t x) const;
  bool in_y(std::uint64_t x) const { return x % 4 == 0 || in_x(x); }

  std::uint64_t count_x_below(std::uint64_t n) const;
  std::uint64_t count_y_below(std::uint64_t n) const;
  /// |X ∩ 4·N ∩ [0, n)|.
  std::uint64_t count_x_mult4_below(std::uint64_t n) const;

  /// Block right endpoints + 1, where the density ratios peak.
  std::vector<std::uint64_t> block_end_schedule() const;
  /// One past the last block: (2 n_max)! + 2.
  std::uint64_t scan_bound() const;

  static constexpr int iota_x = 4;
  static constexpr int iota_y = 1;

 private:
  int n_max_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks_;
};

/// A set between X and Y, tagged with its caller-supplied index value
/// (iota is not computable for arbitrary sets; the family pins it for X and
/// Y, and interpolants inherit iota <= 4).
struct Example4Sample {
  std::string name;
  int iota = 0;  // 1..4; 0 means the tag is missing
  std::function<bool(std::uint64_t)> member;
  std::function<std::uint64_t(std::uint64_t)> count_below;  // |A ∩ [0, n)|
  /// Present when A = X ∪ P for an APSet P: the upper asymptotic density is
  /// then exactly 1/4 + (3/4)·value(P) (block-end inclusion–exclusion).
  std::optional<APSet> union_part;
  /// Report the finite-sample estimate instead of the exact route (used for
  /// Y, whose contract value is the subadditivity bound 7/16).
  bool prefer_estimate = false;
};

struct ThetaResult {
  std::string name;
  int iota = 0;
  std::optional<Rational> dstar_exact;
  std::optional<Rational> theta_exact;
  DensityEstimate dstar_estimate;  // block-end schedule, always attached
  double theta_estimate = 0.0;
  std::optional<Rational> upper_bound;  // 7/16 certificate on the iota<=3 branch
  bool equals_half = false;
  std::string side_note;  // which side of 1/2 the value is certified on
};

/// Piecewise value: d* on iota <= 3, (3/4)(iota-1)·d* on iota = 4.
/// Throws std::invalid_argument when the iota tag is missing.
ThetaResult theta_star(const Example4Family& fam, const Example4Sample& sample);

struct SymmetricDarbouxReport {
  int n_max = 0;
  std::vector<ThetaResult> entries;
  bool half_attained = false;
  std::string note;
};

/// Validates each sample pointwise (X ⊆ A ⊆ Y on the scanned range, capped
/// at 10^6 points), evaluates theta_star, and reports that no sampled value
/// equals 1/2. Demonstrative over the samples, not a proof over all sets.
SymmetricDarbouxReport symmetric_darboux_demo(const Example4Family& fam,
                                              const std::vector<Example4Sample>& samples);

/// X, Y, and two interpolants (a finite and a cofinite slice of 4·N).
std::vector<Example4Sample> default_example4_samples(const Example4Family& fam);

}  // namespace densityforge
