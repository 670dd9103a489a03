#pragma once

#include <cstdint>
#include <vector>

namespace densityforge {

// Packed bit vector used for residue sets. A canonical set with modulus m
// keeps one bit per residue class, so a modulus near the lcm cap (1e9) costs
// ~125 MB instead of the multi-GB a sorted element vector would need. The
// block-level helpers (tiling, periodicity check, prefix popcount) are what
// the set algebra and canonicalization are built from.
//
// Invariant: bits at positions >= size() are zero, including one guard word
// kept past the last payload word so 64-bit windows can be read anywhere.
class Bitset {
 public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  Bitset() = default;
  explicit Bitset(std::uint64_t nbits) : nbits_(nbits), words_(word_count(nbits) + 1, 0) {}

  static Bitset from_indices(std::uint64_t nbits, const std::vector<std::uint64_t>& indices);

  std::uint64_t size() const { return nbits_; }

  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::uint64_t i, bool v) { v ? set(i) : reset(i); }

  std::uint64_t count() const;
  /// Number of set bits in [0, n). n may equal size().
  std::uint64_t count_prefix(std::uint64_t n) const;
  bool none() const;

  std::uint64_t find_first() const;
  std::uint64_t find_next(std::uint64_t prev) const;

  /// Pattern repeated `copies` times; result size is size()*copies.
  Bitset tiled(std::uint64_t copies) const;

  /// True iff d divides size() and the word is a tiling of its first d bits
  /// (equivalently: invariant under cyclic rotation by d).
  bool is_periodic(std::uint64_t d) const;

  /// First n bits as a new Bitset (n <= size()).
  Bitset prefix(std::uint64_t n) const;

  void flip_all();

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  /// this &= ~o
  Bitset& and_not(const Bitset& o);

  bool operator==(const Bitset& o) const;
  bool is_subset_of(const Bitset& o) const;

 private:
  static std::uint64_t word_count(std::uint64_t nbits) { return (nbits + 63) >> 6; }
  /// 64 bits starting at bit position p, zero-padded past the end.
  std::uint64_t window(std::uint64_t p) const;
  void clear_excess();

  std::uint64_t nbits_ = 0;
  std::vector<std::uint64_t> words_;  // word_count(nbits_) payload words + 1 guard
};

}  // namespace densityforge
