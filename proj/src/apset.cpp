#include "densityforge/apset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace densityforge {

Limits& limits() {
  static Limits instance;
  return instance;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  unsigned __int128 l = (unsigned __int128)(a / g) * b;
  if (l > limits().lcm_cap) {
    std::ostringstream msg;
    msg << "modulus lcm(" << a << ", " << b << ") exceeds cap " << limits().lcm_cap;
    throw LcmCapExceeded(msg.str());
  }
  return (std::uint64_t)l;
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::uint64_t count_below(const std::vector<std::uint64_t>& v, std::uint64_t n) {
  return std::lower_bound(v.begin(), v.end(), n) - v.begin();
}

void check_finite_cap(std::size_t total) {
  if (total > limits().finite_cap) {
    throw FiniteCapExceeded("finite perturbation size " + std::to_string(total) +
                            " exceeds cap " + std::to_string(limits().finite_cap));
  }
}

/// Canonicalizes raw parts: folds the residue word to its minimal period and
/// drops redundant finite perturbations. `added`/`removed` must be disjoint.
struct RawParts {
  std::uint64_t m;
  Bitset bits;
  std::vector<std::uint64_t> add, rem;
};

}  // namespace

APSet APSet::from_parts(std::uint64_t modulus, Bitset residues, std::vector<std::uint64_t> added,
                        std::vector<std::uint64_t> removed) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (residues.size() != modulus) throw std::invalid_argument("residue word size != modulus");

  sort_unique(added);
  sort_unique(removed);
  for (std::uint64_t x : added)
    if (sorted_contains(removed, x))
      throw std::invalid_argument("added and removed intersect at " + std::to_string(x));

  APSet out;
  // Minimal period of the tail: the finite parts do not affect it, so it is
  // the smallest divisor d of m the residue word tiles.
  std::uint64_t period = modulus;
  for (std::uint64_t d : sorted_divisors(modulus)) {
    if (residues.is_periodic(d)) {
      period = d;
      break;
    }
  }
  out.modulus_ = period;
  out.residues_ = (period == modulus) ? std::move(residues) : residues.prefix(period);

  out.added_.reserve(added.size());
  out.removed_.reserve(removed.size());
  for (std::uint64_t x : added)
    if (!out.residues_.test(x % period)) out.added_.push_back(x);
  for (std::uint64_t x : removed)
    if (out.residues_.test(x % period)) out.removed_.push_back(x);
  check_finite_cap(out.finite_size());
  return out;
}

APSet::APSet() : modulus_(1), residues_(1) {}

APSet APSet::naturals() {
  Bitset b(1);
  b.set(0);
  return from_parts(1, std::move(b), {}, {});
}

APSet APSet::progression(std::uint64_t k, std::uint64_t h) {
  if (k == 0) throw std::invalid_argument("progression step must be positive");
  lcm_checked(k, 1);
  Bitset b(k);
  b.set(h % k);
  // Class elements below the true start h are not in {k t + h : t >= 0}.
  std::vector<std::uint64_t> rem;
  for (std::uint64_t v = h % k; v < h; v += k) {
    rem.push_back(v);
    check_finite_cap(rem.size());
  }
  return from_parts(k, std::move(b), {}, std::move(rem));
}

APSet APSet::residue_family(std::uint64_t k, const std::vector<std::uint64_t>& residues) {
  if (k == 0) throw std::invalid_argument("residue family modulus must be positive");
  lcm_checked(k, 1);
  Bitset b(k);
  for (std::uint64_t r : residues) {
    if (r >= k) throw std::invalid_argument("residue out of range");
    b.set(r);
  }
  return from_parts(k, std::move(b), {}, {});
}

APSet APSet::finite(std::vector<std::uint64_t> elements) {
  return from_parts(1, Bitset(1), std::move(elements), {});
}

std::vector<std::uint64_t> APSet::residue_list() const {
  std::vector<std::uint64_t> out;
  out.reserve(residues_.count());
  for (std::uint64_t r = residues_.find_first(); r != Bitset::npos; r = residues_.find_next(r))
    out.push_back(r);
  return out;
}

bool APSet::contains(std::uint64_t x) const {
  if (sorted_contains(added_, x)) return true;
  if (sorted_contains(removed_, x)) return false;
  return residues_.test(x % modulus_);
}

std::uint64_t APSet::prefix_count(std::uint64_t n) const {
  std::uint64_t full = n / modulus_, tail = n % modulus_;
  std::uint64_t c = full * residues_.count() + residues_.count_prefix(tail);
  c += count_below(added_, n);
  c -= count_below(removed_, n);
  return c;
}

bool APSet::empty() const { return residues_.none() && added_.empty(); }

bool APSet::is_naturals() const {
  return modulus_ == 1 && residues_.test(0) && added_.empty() && removed_.empty();
}

std::string APSet::to_expr_string() const {
  if (empty()) return "EMPTY";
  std::ostringstream os;
  bool have_core = false;
  if (is_naturals()) {
    os << "N";
    have_core = true;
  } else {
    for (std::uint64_t r = residues_.find_first(); r != Bitset::npos;
         r = residues_.find_next(r)) {
      if (have_core) os << " + ";
      os << "AP(" << modulus_ << "," << r << ")";
      have_core = true;
    }
    if (!added_.empty()) {
      if (have_core) os << " + ";
      os << "{";
      for (std::size_t i = 0; i < added_.size(); ++i) os << (i ? "," : "") << added_[i];
      os << "}";
      have_core = true;
    }
  }
  if (removed_.empty()) return os.str();
  std::ostringstream full;
  full << "(" << os.str() << ") \\ {";
  for (std::size_t i = 0; i < removed_.size(); ++i) full << (i ? "," : "") << removed_[i];
  full << "}";
  return full.str();
}

namespace {

enum class BoolOp { Union, Intersect, Difference };

bool apply_op(BoolOp op, bool x, bool y) {
  switch (op) {
    case BoolOp::Union: return x || y;
    case BoolOp::Intersect: return x && y;
    case BoolOp::Difference: return x && !y;
  }
  return false;
}

/// Points where the combined set can deviate from its periodic part: they
/// come only from the operands' finite perturbations.
std::vector<std::uint64_t> correction_candidates(const APSet& a, const APSet& b) {
  std::vector<std::uint64_t> c;
  c.reserve(a.finite_size() + b.finite_size());
  c.insert(c.end(), a.added().begin(), a.added().end());
  c.insert(c.end(), a.removed().begin(), a.removed().end());
  c.insert(c.end(), b.added().begin(), b.added().end());
  c.insert(c.end(), b.removed().begin(), b.removed().end());
  sort_unique(c);
  return c;
}

APSet boolean_combine(const APSet& a, const APSet& b, BoolOp op) {
  std::uint64_t m = lcm_checked(a.modulus(), b.modulus());
  Bitset bits = a.residues().tiled(m / a.modulus());
  Bitset lift_b = b.residues().tiled(m / b.modulus());
  switch (op) {
    case BoolOp::Union: bits |= lift_b; break;
    case BoolOp::Intersect: bits &= lift_b; break;
    case BoolOp::Difference: bits.and_not(lift_b); break;
  }
  std::vector<std::uint64_t> add, rem;
  for (std::uint64_t x : correction_candidates(a, b)) {
    bool truth = apply_op(op, a.contains(x), b.contains(x));
    bool periodic = bits.test(x % m);
    if (truth != periodic) (truth ? add : rem).push_back(x);
  }
  return APSet::from_parts(m, std::move(bits), std::move(add), std::move(rem));
}

}  // namespace

APSet set_union(const APSet& a, const APSet& b) { return boolean_combine(a, b, BoolOp::Union); }
APSet set_intersect(const APSet& a, const APSet& b) {
  return boolean_combine(a, b, BoolOp::Intersect);
}
APSet set_difference(const APSet& a, const APSet& b) {
  return boolean_combine(a, b, BoolOp::Difference);
}

APSet set_complement(const APSet& a) {
  Bitset bits = a.residues();
  bits.flip_all();
  std::vector<std::uint64_t> add, rem;
  std::vector<std::uint64_t> candidates = a.added();
  candidates.insert(candidates.end(), a.removed().begin(), a.removed().end());
  sort_unique(candidates);
  for (std::uint64_t x : candidates) {
    bool truth = !a.contains(x);
    bool periodic = bits.test(x % a.modulus());
    if (truth != periodic) (truth ? add : rem).push_back(x);
  }
  return APSet::from_parts(a.modulus(), std::move(bits), std::move(add), std::move(rem));
}

APSet affine_image(const APSet& a, std::uint64_t k, std::uint64_t h) {
  if (k == 0) throw std::invalid_argument("affine coefficient must be positive");
  std::uint64_t m = lcm_checked(a.modulus(), 1);
  unsigned __int128 big = (unsigned __int128)k * m;
  if (big > limits().lcm_cap)
    throw LcmCapExceeded("affine modulus " + std::to_string(k) + "*" + std::to_string(m) +
                         " exceeds cap " + std::to_string(limits().lcm_cap));
  std::uint64_t big_m = k * m;

  auto map_elem = [&](std::uint64_t x) {
    if (x > (~std::uint64_t{0} - h) / k)
      throw std::overflow_error("affine image element exceeds 64-bit range");
    return k * x + h;
  };

  Bitset bits(big_m);
  std::vector<std::uint64_t> add, rem;
  for (std::uint64_t r = a.residues().find_first(); r != Bitset::npos;
       r = a.residues().find_next(r)) {
    std::uint64_t start = map_elem(r);  // first true element of the image class
    bits.set(start % big_m);
    for (std::uint64_t v = start % big_m; v < start; v += big_m) {
      rem.push_back(v);
      check_finite_cap(rem.size());
    }
  }
  for (std::uint64_t x : a.added()) add.push_back(map_elem(x));
  for (std::uint64_t x : a.removed()) rem.push_back(map_elem(x));
  check_finite_cap(add.size() + rem.size());
  return APSet::from_parts(big_m, std::move(bits), std::move(add), std::move(rem));
}

bool is_subset(const APSet& a, const APSet& b) {
  std::uint64_t m = lcm_checked(a.modulus(), b.modulus());
  Bitset lift_a = a.residues().tiled(m / a.modulus());
  Bitset lift_b = b.residues().tiled(m / b.modulus());
  // A periodic class of a missing from b cannot be patched by finitely many
  // perturbations, so the word test decides everything outside them.
  if (!lift_a.is_subset_of(lift_b)) return false;
  for (std::uint64_t x : correction_candidates(a, b))
    if (a.contains(x) && !b.contains(x)) return false;
  return true;
}

}  // namespace densityforge
