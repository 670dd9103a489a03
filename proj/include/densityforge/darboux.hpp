#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "densityforge/apset.hpp"
#include "densityforge/density.hpp"
#include "densityforge/rational.hpp"

namespace densityforge {

// ===========================================================================
// Constructive realization of intermediate densities between nested sets.
//
// Core step: given A ⊆ B with value(A) <= a < b <= value(B) and k > 1/(b-a),
// there is a residue prefix H0 ⊆ [0,k) and a pivot residue h0 such that
//
//   a < value(A ∪ (B ∩ V_{k,H0})) < b <= value(A ∪ (B ∩ V_{k,H0∪{h0}})),
//
// where V_{k,H} is the union of the classes k·N+h, h in H. Iterating the
// step with growing k produces nested sets whose values converge to any
// rational target between value(X) and value(Y), with a certified error of
// 1/k_n <= 1/n at stage n.
//
// The engine evaluates densities only through canonical_value: the strict
// inequalities above are exact rational comparisons and would be meaningless
// under floating-point error.
// ===========================================================================

/// Result of one residue split. `low_residues` is H0 (ascending) and `pivot`
/// is h0, with pivot not in H0, value_low < b <= value_high, and
/// value_high - value_low <= 1/k.
struct SplitResult {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> low_residues;
  std::uint64_t pivot = 0;
  Rational value_low, value_high;
};

/// Witness families examined by the exhaustive reference split: the
/// minimal-cardinality subset with value above a, the maximal middle family
/// member, and the minimal subset at or above b.
struct SearchState {
  std::vector<std::uint64_t> minimal_witness;
  std::vector<std::uint64_t> maximal_middle;
  std::vector<std::uint64_t> minimal_upper;
};

/// One stage of the nested construction. The gap outer \ inner is contained
/// in the single class AP(gap_modulus, gap_residue), and gap_modulus >= index.
struct Stage {
  int index = 1;
  APSet inner, outer;
  std::uint64_t gap_modulus = 1;
  std::uint64_t gap_residue = 0;
  Rational inner_value, outer_value;
};

struct DarbouxRequest {
  APSet x, y;        // requires x ⊆ y
  Rational target;   // in [0, 1]
  int depth = 1;
};

/// Full record of a construction run. When the modulus cap trips before the
/// requested depth, `capped` is set and every completed stage remains fully
/// certified. In lower mode the stage values bracket the conjugate density:
/// inner_value <= target < outer_value.
struct DarbouxTrace {
  DarbouxRequest request;
  bool lower_mode = false;
  std::vector<Stage> stages;
  std::vector<Rational> certificates;  // 1/k_n per stage
  bool capped = false;
  std::string cap_note;
};

/// Greedy split: scans h = 0, 1, ... accumulating residue classes of B \ A;
/// each class adds at most 1/k < b-a, and the full family reaches value(B),
/// so the first crossing of b yields the pivot. O(k) exact evaluations.
SplitResult split_residues(const APSet& a_set, const APSet& b_set, const Rational& a,
                           const Rational& b, std::uint64_t k);

/// Literal minimal/maximal-cardinality subset search over all 2^k residue
/// families. Requires k <= limits().exhaustive_split_cap. Cross-validation
/// reference for split_residues; the chosen sets may differ, the sandwich
/// inequalities may not.
std::pair<SplitResult, SearchState> exhaustive_split(const APSet& a_set, const APSet& b_set,
                                                     const Rational& a, const Rational& b,
                                                     std::uint64_t k);

/// One refinement: k = max(index+1, floor(1/(target - inner_value)) + 1),
/// then a split at (inner_value, target). The new gap lives in one residue
/// class mod k.
Stage refine(const Stage& stage, const Rational& target);

/// Runs the full construction. Boundary targets return the single trivial
/// stage; targets above value(y) are rejected. A modulus-cap trip during
/// refinement ends the trace early with `capped` set.
DarbouxTrace construct(const DarbouxRequest& request);

/// Same construction for the conjugate (lower) density: conjugates the
/// request, runs construct, and complements every stage set.
DarbouxTrace dual_construct(const DarbouxRequest& request);

enum class MembershipKind { In, Out, Undecided };

struct MembershipVerdict {
  MembershipKind kind = MembershipKind::Undecided;
  int stage = 0;  // least stage index deciding x; 0 when undecided
};

/// Replays x through the computed stages: In(n) if x enters inner at stage n,
/// Out(n) if it leaves outer at stage n, Undecided if it stays in the gap
/// for every computed stage.
MembershipVerdict member_at_depth(const DarbouxTrace& trace, std::uint64_t x);

}  // namespace densityforge
