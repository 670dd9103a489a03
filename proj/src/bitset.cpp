#include "densityforge/bitset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace densityforge {

Bitset Bitset::from_indices(std::uint64_t nbits, const std::vector<std::uint64_t>& indices) {
  Bitset b(nbits);
  for (std::uint64_t i : indices) {
    if (i >= nbits) throw std::out_of_range("bit index out of range");
    b.set(i);
  }
  return b;
}

std::uint64_t Bitset::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::uint64_t Bitset::count_prefix(std::uint64_t n) const {
  assert(n <= nbits_);
  std::uint64_t full = n >> 6, c = 0;
  for (std::uint64_t i = 0; i < full; ++i) c += std::popcount(words_[i]);
  if (n & 63) c += std::popcount(words_[full] & ((std::uint64_t{1} << (n & 63)) - 1));
  return c;
}

bool Bitset::none() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::uint64_t Bitset::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + std::countr_zero(words_[i]);
  return npos;
}

std::uint64_t Bitset::find_next(std::uint64_t prev) const {
  std::uint64_t i = prev + 1;
  if (i >= nbits_) return npos;
  std::uint64_t wi = i >> 6;
  std::uint64_t w = words_[wi] & ~((std::uint64_t{1} << (i & 63)) - 1);
  while (true) {
    if (w) return (wi << 6) + std::countr_zero(w);
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

std::uint64_t Bitset::window(std::uint64_t p) const {
  std::uint64_t wi = p >> 6, r = p & 63;
  std::uint64_t w = words_[wi] >> r;
  if (r) w |= words_[wi + 1] << (64 - r);
  return w;
}

void Bitset::clear_excess() {
  std::uint64_t payload = word_count(nbits_);
  if (nbits_ & 63) words_[payload - 1] &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  for (std::size_t i = payload; i < words_.size(); ++i) words_[i] = 0;
}

Bitset Bitset::tiled(std::uint64_t copies) const {
  Bitset out(nbits_ * copies);
  if (nbits_ == 0 || copies == 0) return out;
  std::uint64_t src_words = word_count(nbits_);
  std::uint64_t pos = 0;
  for (std::uint64_t c = 0; c < copies; ++c, pos += nbits_) {
    std::uint64_t wi = pos >> 6, r = pos & 63;
    if (r == 0) {
      for (std::uint64_t s = 0; s < src_words; ++s) out.words_[wi + s] |= words_[s];
    } else {
      for (std::uint64_t s = 0; s < src_words; ++s) {
        std::uint64_t w = words_[s];
        out.words_[wi + s] |= w << r;
        out.words_[wi + s + 1] |= w >> (64 - r);
      }
    }
  }
  out.clear_excess();
  return out;
}

bool Bitset::is_periodic(std::uint64_t d) const {
  if (d == 0 || d > nbits_ || nbits_ % d != 0) return false;
  if (d == nbits_) return true;
  std::uint64_t span = nbits_ - d;
  for (std::uint64_t off = 0; off < span; off += 64) {
    std::uint64_t len = std::min<std::uint64_t>(64, span - off);
    std::uint64_t a = window(off), b = window(off + d);
    if (len < 64) {
      std::uint64_t mask = (std::uint64_t{1} << len) - 1;
      a &= mask;
      b &= mask;
    }
    if (a != b) return false;
  }
  return true;
}

Bitset Bitset::prefix(std::uint64_t n) const {
  assert(n <= nbits_);
  Bitset out(n);
  std::uint64_t payload = word_count(n);
  std::copy(words_.begin(), words_.begin() + payload, out.words_.begin());
  out.clear_excess();
  return out;
}

void Bitset::flip_all() {
  for (auto& w : words_) w = ~w;
  clear_excess();
}

Bitset& Bitset::operator&=(const Bitset& o) {
  assert(nbits_ == o.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  assert(nbits_ == o.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::and_not(const Bitset& o) {
  assert(nbits_ == o.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool Bitset::operator==(const Bitset& o) const {
  return nbits_ == o.nbits_ && words_ == o.words_;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  assert(nbits_ == o.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

}  // namespace densityforge
