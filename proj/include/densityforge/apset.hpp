#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "densityforge/bitset.hpp"
#include "densityforge/limits.hpp"

namespace densityforge {

// ===========================================================================
// APSet — finitely-described eventually periodic subset of the naturals
// (0 included): a union of residue classes modulo m, perturbed by finitely
// many added and removed elements. Every density functional of interest is
// exactly computable on this class, which makes it the working universe for
// the whole library.
//
// Canonical form:
//   - m is the minimal period of the set's tail;
//   - `added` is disjoint from the periodic part, `removed` is contained in
//     it, and neither holds a redundant element;
//   - both finite parts are sorted and duplicate-free.
// Two APSets represent the same subset of N iff their canonical forms are
// field-identical, so operator== is plain field comparison.
//
// All instances are immutable after construction and all operations are
// pure, so unrestricted concurrent use is safe.
// ===========================================================================
class APSet {
 public:
  /// The empty set.
  APSet();

  static APSet empty_set() { return APSet(); }
  static APSet naturals();
  /// {k*t + h : t in N}. Requires k >= 1.
  static APSet progression(std::uint64_t k, std::uint64_t h);
  /// Union of the classes {k*t + h : t in N} for h in residues; residues
  /// must lie in [0, k).
  static APSet residue_family(std::uint64_t k, const std::vector<std::uint64_t>& residues);
  static APSet finite(std::vector<std::uint64_t> elements);
  /// General escape hatch; canonicalizes. `residues.size()` must equal
  /// `modulus`. Throws std::invalid_argument if added and removed intersect.
  static APSet from_parts(std::uint64_t modulus, Bitset residues,
                          std::vector<std::uint64_t> added, std::vector<std::uint64_t> removed);

  std::uint64_t modulus() const { return modulus_; }
  const Bitset& residues() const { return residues_; }
  const std::vector<std::uint64_t>& added() const { return added_; }
  const std::vector<std::uint64_t>& removed() const { return removed_; }

  std::uint64_t residue_count() const { return residues_.count(); }
  std::vector<std::uint64_t> residue_list() const;
  std::uint64_t finite_size() const { return added_.size() + removed_.size(); }

  bool contains(std::uint64_t x) const;
  /// |set ∩ [0, n)|, computed by period counting in O(m/64 + finite parts).
  std::uint64_t prefix_count(std::uint64_t n) const;
  bool empty() const;
  bool is_naturals() const;

  /// DSL expression that parses back to this set. Meant for small sets
  /// (witness reporting); size is proportional to the residue count.
  std::string to_expr_string() const;

  friend bool operator==(const APSet& a, const APSet& b) {
    return a.modulus_ == b.modulus_ && a.residues_ == b.residues_ && a.added_ == b.added_ &&
           a.removed_ == b.removed_;
  }
  friend bool operator!=(const APSet& a, const APSet& b) { return !(a == b); }

 private:
  std::uint64_t modulus_;
  Bitset residues_;  // size == modulus_
  std::vector<std::uint64_t> added_, removed_;
};

// Set algebra. Results are canonical; operations working at the lcm of the
// two moduli throw LcmCapExceeded when it exceeds limits().lcm_cap.
APSet set_union(const APSet& a, const APSet& b);
APSet set_intersect(const APSet& a, const APSet& b);
APSet set_difference(const APSet& a, const APSet& b);
/// Complement relative to N.
APSet set_complement(const APSet& a);
/// {k*x + h : x in a}. Requires k >= 1; the pre-canonical modulus is k*m.
APSet affine_image(const APSet& a, std::uint64_t k, std::uint64_t h);
/// True iff a \ b is empty (decided on the periodic parts plus the finite
/// perturbations; no canonicalization of the difference is materialized).
bool is_subset(const APSet& a, const APSet& b);

/// lcm with the configured cap; throws LcmCapExceeded past it.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

/// Sorted divisors of n (n >= 1), ascending.
std::vector<std::uint64_t> sorted_divisors(std::uint64_t n);

}  // namespace densityforge
