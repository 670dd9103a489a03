#include "densityforge/counterexamples.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace densityforge {

namespace {

/// Nearest element of a strictly below x (>= 1), or 0 when there is none.
/// Removals are finite, so the scan meets a surviving periodic element
/// within |removed|+2 periods.
std::uint64_t element_below(const APSet& a, std::uint64_t x) {
  for (std::uint64_t y = x; y-- > 1;)
    if (a.contains(y)) return y;
  return 0;
}

std::uint64_t element_above(const APSet& a, std::uint64_t x) {
  for (std::uint64_t y = x + 1; y != 0; ++y)
    if (a.contains(y)) return y;
  throw std::overflow_error("successor search past the 64-bit range");
}

}  // namespace

Rational gap_sup(const APSet& a) {
  if (a.residues().none()) return 0;  // only finitely many elements in total

  // Every gap between consecutive tail elements is a gap between cyclically
  // adjacent residues: removals merge gaps (never shrinking the minimum) and
  // each periodic gap survives them infinitely often.
  std::vector<std::uint64_t> rs = a.residue_list();
  std::uint64_t min_gap = a.modulus();  // single-residue wrap
  for (std::size_t i = 1; i < rs.size(); ++i) min_gap = std::min(min_gap, rs[i] - rs[i - 1]);
  if (rs.size() >= 2) min_gap = std::min(min_gap, rs.front() + a.modulus() - rs.back());

  // Added elements create new adjacencies with their actual neighbors.
  for (std::uint64_t x : a.added()) {
    if (x == 0) continue;  // gaps involve positive elements only
    std::uint64_t below = element_below(a, x);
    if (below >= 1) min_gap = std::min(min_gap, x - below);
    min_gap = std::min(min_gap, element_above(a, x) - x);
  }
  return Rational(1, BigInt(min_gap));
}

Rational dichotomy(const APSet& a) { return canonical_value(a) > 0 ? 1 : 0; }

Rational inf_reciprocal(const APSet& a) {
  std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t x : a.added())
    if (x >= 1) {
      least = std::min(least, x);
      break;  // added is sorted
    }
  for (std::uint64_t r = a.residues().find_first(); r != Bitset::npos;
       r = a.residues().find_next(r)) {
    std::uint64_t x = (r == 0) ? a.modulus() : r;
    while (!a.contains(x)) x += a.modulus();  // skip removed elements
    least = std::min(least, x);
  }
  if (least == std::numeric_limits<std::uint64_t>::max()) return 0;  // empty positive part
  return Rational(1, BigInt(least));
}

DensityFunctional gap_sup_functional() {
  return {"gap_sup", [](const APSet& a) { return gap_sup(a); }, false};
}

DensityFunctional dichotomy_functional() {
  return {"dichotomy", [](const APSet& a) { return dichotomy(a); }, false};
}

DensityFunctional inf_reciprocal_functional() {
  return {"inf_reciprocal", [](const APSet& a) { return inf_reciprocal(a); }, false};
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= (std::uint64_t)i;
  return f;
}

/// Multiples of 4 in [0, n).
std::uint64_t mult4_below(std::uint64_t n) { return n == 0 ? 0 : (n + 3) / 4; }

/// Multiples of 4 in the inclusive range [a, b], a >= 1.
std::uint64_t mult4_in(std::uint64_t a, std::uint64_t b) {
  if (a > b) return 0;
  return b / 4 - (a - 1) / 4;
}

}  // namespace

Example4Family::Example4Family(int n_max) : n_max_(n_max) {
  if (n_max < 2 || n_max > 8)
    throw std::invalid_argument("block cutoff must lie in [2, 8]");
  for (int n = 2; n <= n_max; ++n) {
    std::uint64_t odd_fact = factorial(2 * n - 1);
    std::uint64_t even_fact = factorial(2 * n);
    // First integer >= (1/4)(2n-1)! + (3/4)(2n)! + 1.
    std::uint64_t lo = (odd_fact + 3 * even_fact + 3) / 4 + 1;
    std::uint64_t hi = even_fact + 1;
    blocks_.emplace_back(lo, hi);
  }
}

bool Example4Family::in_x(std::uint64_t x) const {
  for (const auto& [lo, hi] : blocks_)
    if (x >= lo && x <= hi) return true;
  return false;
}

std::uint64_t Example4Family::count_x_below(std::uint64_t n) const {
  std::uint64_t c = 0;
  for (const auto& [lo, hi] : blocks_) {
    if (n <= lo) break;
    c += std::min(hi, n - 1) - lo + 1;
  }
  return c;
}

std::uint64_t Example4Family::count_x_mult4_below(std::uint64_t n) const {
  std::uint64_t c = 0;
  for (const auto& [lo, hi] : blocks_) {
    if (n <= lo) break;
    c += mult4_in(lo, std::min(hi, n - 1));
  }
  return c;
}

std::uint64_t Example4Family::count_y_below(std::uint64_t n) const {
  return count_x_below(n) + mult4_below(n) - count_x_mult4_below(n);
}

std::vector<std::uint64_t> Example4Family::block_end_schedule() const {
  std::vector<std::uint64_t> s;
  s.reserve(blocks_.size());
  for (const auto& b : blocks_) s.push_back(b.second);
  return s;
}

std::uint64_t Example4Family::scan_bound() const { return blocks_.back().second + 1; }

namespace {

DensityEstimate estimate_from_counts(const std::vector<std::uint64_t>& schedule,
                                     const std::function<std::uint64_t(std::uint64_t)>& count) {
  DensityEstimate est;
  est.samples.reserve(schedule.size());
  for (std::uint64_t n : schedule)
    est.samples.emplace_back(n, n ? double(count(n)) / double(n) : 0.0);
  double best = 0.0;
  for (std::size_t i = est.samples.size() / 2; i < est.samples.size(); ++i)
    best = std::max(best, est.samples[i].second);
  est.value = best;
  return est;
}

const Rational kQuarter(1, 4);
const Rational kHalf(1, 2);
const Rational kYBound(7, 16);

}  // namespace

ThetaResult theta_star(const Example4Family& fam, const Example4Sample& sample) {
  if (sample.iota < 1 || sample.iota > 4)
    throw std::invalid_argument("sample '" + sample.name + "' is missing a valid iota tag");

  ThetaResult res;
  res.name = sample.name;
  res.iota = sample.iota;
  res.dstar_estimate = estimate_from_counts(fam.block_end_schedule(), sample.count_below);

  auto theta_branch_exact = [&](const Rational& dstar) {
    return sample.iota <= 3 ? dstar : Rational(3 * (sample.iota - 1), 4) * dstar;
  };
  double branch_factor = sample.iota <= 3 ? 1.0 : 0.75 * (sample.iota - 1);
  res.theta_estimate = branch_factor * res.dstar_estimate.value;

  if (sample.union_part && !sample.prefer_estimate) {
    Rational dstar = kQuarter + Rational(3, 4) * canonical_value(*sample.union_part);
    res.dstar_exact = dstar;
    res.theta_exact = theta_branch_exact(dstar);
    res.equals_half = (*res.theta_exact == kHalf);
    res.side_note = *res.theta_exact < kHalf ? "theta* < 1/2 (exact)"
                    : *res.theta_exact > kHalf ? "theta* > 1/2 (exact)"
                                               : "theta* = 1/2";
  } else if (sample.iota == 4) {
    // A ⊇ X forces d*(A) >= 1/4, so theta*(A) = (9/4) d*(A) >= 9/16 > 1/2.
    res.equals_half = false;
    res.side_note = "theta* >= 9/16 (since d* >= 1/4 on any superset of X)";
  } else {
    // theta*(A) = d*(A) <= d*(Y) <= 7/16 < 1/2.
    res.upper_bound = kYBound;
    res.equals_half = false;
    res.side_note = "theta* <= 7/16 (subadditivity bound for subsets of Y)";
  }
  return res;
}

std::vector<Example4Sample> default_example4_samples(const Example4Family& fam) {
  std::vector<Example4Sample> samples;

  Example4Sample x;
  x.name = "X";
  x.iota = Example4Family::iota_x;
  x.member = [fam](std::uint64_t v) { return fam.in_x(v); };
  x.count_below = [fam](std::uint64_t n) { return fam.count_x_below(n); };
  x.union_part = APSet::empty_set();
  samples.push_back(std::move(x));

  Example4Sample y;
  y.name = "Y";
  y.iota = Example4Family::iota_y;
  y.member = [fam](std::uint64_t v) { return fam.in_y(v); };
  y.count_below = [fam](std::uint64_t n) { return fam.count_y_below(n); };
  y.union_part = APSet::progression(4, 0);
  y.prefer_estimate = true;
  samples.push_back(std::move(y));

  // X plus a finite slice of 4·N: still iota = 4, and d* stays 1/4 exactly.
  constexpr std::uint64_t kSlice = 720;
  Example4Sample fin;
  fin.name = "X + (4N & [0,720])";
  fin.iota = 4;
  fin.member = [fam](std::uint64_t v) { return fam.in_x(v) || (v % 4 == 0 && v <= kSlice); };
  fin.count_below = [fam](std::uint64_t n) {
    std::uint64_t cut = std::min<std::uint64_t>(n, kSlice + 1);
    return fam.count_x_below(n) + mult4_below(cut) - fam.count_x_mult4_below(cut);
  };
  {
    std::vector<std::uint64_t> elems;
    for (std::uint64_t v = 0; v <= kSlice; v += 4) elems.push_back(v);
    fin.union_part = APSet::finite(std::move(elems));
  }
  samples.push_back(std::move(fin));

  // X plus the cofinite slice: contains a full affine copy of N up to
  // finitely many elements, so it carries iota = 1.
  Example4Sample cof;
  cof.name = "X + (4N \\ [0,720])";
  cof.iota = 1;
  cof.member = [fam](std::uint64_t v) { return fam.in_x(v) || (v % 4 == 0 && v > kSlice); };
  cof.count_below = [fam](std::uint64_t n) {
    std::uint64_t cut = std::min<std::uint64_t>(n, kSlice + 1);
    return fam.count_x_below(n) + (mult4_below(n) - mult4_below(cut)) -
           (fam.count_x_mult4_below(n) - fam.count_x_mult4_below(cut));
  };
  {
    std::vector<std::uint64_t> removed;
    for (std::uint64_t v = 0; v <= kSlice; v += 4) removed.push_back(v);
    Bitset bits(4);
    bits.set(0);
    cof.union_part = APSet::from_parts(4, std::move(bits), {}, std::move(removed));
  }
  samples.push_back(std::move(cof));

  return samples;
}

SymmetricDarbouxReport symmetric_darboux_demo(const Example4Family& fam,
                                              const std::vector<Example4Sample>& samples) {
  SymmetricDarbouxReport report;
  report.n_max = fam.n_max();
  report.note =
      "Demonstrative only: the sampled interpolants avoid 1/2; no claim is made over all sets "
      "between X and Y.";

  std::uint64_t scan = std::min<std::uint64_t>(fam.scan_bound(), 1'000'000);
  for (const Example4Sample& s : samples) {
    for (std::uint64_t v = 0; v < scan; ++v) {
      bool in_a = s.member(v);
      if ((fam.in_x(v) && !in_a) || (in_a && !fam.in_y(v)))
        throw std::invalid_argument("sample '" + s.name + "' violates X ⊆ A ⊆ Y at " +
                                    std::to_string(v));
    }
    report.entries.push_back(theta_star(fam, s));
  }
  report.half_attained = std::any_of(report.entries.begin(), report.entries.end(),
                                     [](const ThetaResult& r) { return r.equals_half; });
  return report;
}

}  // namespace densityforge
