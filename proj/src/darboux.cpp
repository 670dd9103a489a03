#include "densityforge/darboux.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "densityforge/limits.hpp"

namespace densityforge {

namespace {

struct SplitPre {
  Rational value_a, value_b;
};

SplitPre check_split_preconditions(const APSet& a_set, const APSet& b_set, const Rational& a,
                                   const Rational& b, std::uint64_t k) {
  if (!is_subset(a_set, b_set)) throw std::invalid_argument("split requires A ⊆ B");
  if (!(a < b)) throw std::invalid_argument("split requires a < b");
  Rational va = canonical_value(a_set), vb = canonical_value(b_set);
  if (!(va <= a)) throw std::invalid_argument("split requires value(A) <= a");
  if (!(b <= vb)) throw std::invalid_argument("split requires b <= value(B)");
  if (k == 0 || !(Rational(BigInt(k)) * (b - a) > 1))
    throw std::invalid_argument("split requires k > 1/(b-a)");
  return {std::move(va), std::move(vb)};
}

/// Greedy split plus the gap set B \ A it was computed from (the refinement
/// step reuses it to materialize the next stage).
SplitResult split_with_gap(const APSet& a_set, const APSet& b_set, const Rational& a,
                           const Rational& b, std::uint64_t k, APSet* gap_out) {
  SplitPre pre = check_split_preconditions(a_set, b_set, a, b, k);
  APSet gap = set_difference(b_set, a_set);
  std::uint64_t class_lcm = lcm_checked(gap.modulus(), k);
  lcm_checked(a_set.modulus(), class_lcm);  // modulus of the materialized stage sets

  // Adding the class k·N+h to the accumulated set contributes one class mod
  // class_lcm for every residue r of the gap with r ≡ h (mod gcd). The
  // counts are therefore g-periodic in h.
  std::uint64_t g = std::gcd(gap.modulus(), k);
  std::unordered_map<std::uint64_t, std::uint64_t> bucket;
  for (std::uint64_t r = gap.residues().find_first(); r != Bitset::npos;
       r = gap.residues().find_next(r))
    ++bucket[r % g];
  auto count_for = [&](std::uint64_t h) -> BigInt {
    auto it = bucket.find(h % g);
    return it == bucket.end() ? BigInt(0) : BigInt(it->second);
  };

  BigInt big_lcm(class_lcm);
  // First h with value(A) + c/class_lcm >= b, c the accumulated class count.
  BigInt threshold = rat_ceil((b - pre.value_a) * Rational(big_lcm));
  BigInt accumulated = 0;
  std::uint64_t pivot = k;  // sentinel
  BigInt before = 0;
  for (std::uint64_t h = 0; h < k; ++h) {
    BigInt next = accumulated + count_for(h);
    if (next >= threshold) {
      pivot = h;
      before = accumulated;
      accumulated = next;
      break;
    }
    accumulated = next;
  }
  if (pivot == k)
    throw std::logic_error("split never reached b although value(B) >= b");

  SplitResult out;
  out.k = k;
  out.low_residues.reserve(pivot);
  for (std::uint64_t h = 0; h < pivot; ++h) out.low_residues.push_back(h);
  out.pivot = pivot;
  out.value_low = pre.value_a + Rational(before, big_lcm);
  out.value_high = pre.value_a + Rational(accumulated, big_lcm);

  if (!(a < out.value_low && out.value_low < b && b <= out.value_high) ||
      !(out.value_high - out.value_low <= Rational(1, BigInt(k))))
    throw std::logic_error("split result violates its sandwich inequalities");
  if (gap_out) *gap_out = std::move(gap);
  return out;
}

}  // namespace

SplitResult split_residues(const APSet& a_set, const APSet& b_set, const Rational& a,
                           const Rational& b, std::uint64_t k) {
  return split_with_gap(a_set, b_set, a, b, k, nullptr);
}

std::pair<SplitResult, SearchState> exhaustive_split(const APSet& a_set, const APSet& b_set,
                                                     const Rational& a, const Rational& b,
                                                     std::uint64_t k) {
  if (k > limits().exhaustive_split_cap)
    throw std::invalid_argument("k exceeds the exhaustive split cap " +
                                std::to_string(limits().exhaustive_split_cap));
  check_split_preconditions(a_set, b_set, a, b, k);

  auto mask_to_list = [k](std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t h = 0; h < k; ++h)
      if (mask & (std::uint64_t{1} << h)) out.push_back(h);
    return out;
  };

  // Literal evaluation of every residue family, by materialized set algebra.
  std::uint64_t total = std::uint64_t{1} << k;
  std::vector<Rational> value(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    APSet family = APSet::residue_family(k, mask_to_list(mask));
    value[mask] = canonical_value(set_union(a_set, set_intersect(b_set, family)));
  }

  // Minimal-cardinality family with value above a. Ties break toward the
  // numerically least mask so results are deterministic.
  auto better = [](int pc_a, std::uint64_t m_a, int pc_b, std::uint64_t m_b) {
    return pc_a < pc_b || (pc_a == pc_b && m_a < m_b);
  };
  std::uint64_t witness = total - 1;
  bool found = false;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (value[mask] > a) {
      if (!found || better(std::popcount(mask), mask, std::popcount(witness), witness)) {
        witness = mask;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("no residue family exceeds a although value(B) > a");
  if (!(value[witness] < b))
    throw std::logic_error("minimal witness family already reaches b");

  // Maximal family containing the witness whose value stays inside (a, b).
  std::uint64_t middle = witness;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & witness) == witness && a < value[mask] && value[mask] < b) {
      if (std::popcount(mask) > std::popcount(middle) ||
          (std::popcount(mask) == std::popcount(middle) && mask < middle))
        middle = mask;
    }
  }

  // Minimal family above b that contains the middle one; it must exceed it
  // by exactly one residue.
  std::uint64_t upper = total - 1;
  found = false;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & middle) == middle && value[mask] >= b) {
      if (!found || better(std::popcount(mask), mask, std::popcount(upper), upper)) {
        upper = mask;
        found = true;
      }
    }
  }
  if (!found || std::popcount(upper) != std::popcount(middle) + 1)
    throw std::logic_error("minimal upper family does not exceed the middle one by one residue");

  SplitResult res;
  res.k = k;
  res.low_residues = mask_to_list(middle);
  res.pivot = mask_to_list(upper & ~middle).front();
  res.value_low = value[middle];
  res.value_high = value[upper];

  SearchState state{mask_to_list(witness), mask_to_list(middle), mask_to_list(upper)};
  return {std::move(res), std::move(state)};
}

Stage refine(const Stage& stage, const Rational& target) {
  if (!(stage.inner_value < target && target <= stage.outer_value))
    throw std::invalid_argument("refine requires inner_value < target <= outer_value");

  BigInt k_big = rat_floor(Rational(1) / (target - stage.inner_value)) + 1;
  BigInt k_min(stage.index + 1);
  if (k_big < k_min) k_big = k_min;
  if (k_big > limits().lcm_cap)
    throw LcmCapExceeded("refinement modulus " + k_big.str() + " exceeds cap " +
                         std::to_string(limits().lcm_cap));
  std::uint64_t k = k_big.convert_to<std::uint64_t>();

  APSet gap;
  SplitResult split = split_with_gap(stage.inner, stage.outer, stage.inner_value, target, k, &gap);

  APSet kept = APSet::residue_family(k, split.low_residues);
  APSet inner_next = set_union(stage.inner, set_intersect(gap, kept));
  APSet pivot_class = set_intersect(gap, APSet::progression(k, split.pivot));
  APSet outer_next = set_union(inner_next, pivot_class);

  if (canonical_value(inner_next) != split.value_low ||
      canonical_value(outer_next) != split.value_high)
    throw std::logic_error("materialized stage values disagree with the split accounting");

  Stage next;
  next.index = stage.index + 1;
  next.inner = std::move(inner_next);
  next.outer = std::move(outer_next);
  next.gap_modulus = k;
  next.gap_residue = split.pivot;
  next.inner_value = split.value_low;
  next.outer_value = split.value_high;
  return next;
}

namespace {

Stage trivial_stage(const APSet& s, const Rational& v) {
  Stage st;
  st.index = 1;
  st.inner = s;
  st.outer = s;
  st.gap_modulus = 1;
  st.gap_residue = 0;
  st.inner_value = v;
  st.outer_value = v;
  return st;
}

void attach_certificates(DarbouxTrace& trace) {
  trace.certificates.clear();
  trace.certificates.reserve(trace.stages.size());
  for (const Stage& st : trace.stages)
    trace.certificates.emplace_back(1, BigInt(st.gap_modulus));
}

}  // namespace

DarbouxTrace construct(const DarbouxRequest& request) {
  if (request.depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (request.target < 0 || request.target > 1)
    throw std::invalid_argument("target must lie in [0, 1]");
  if (!is_subset(request.x, request.y)) throw std::invalid_argument("construct requires X ⊆ Y");

  Rational vx = canonical_value(request.x);
  Rational vy = canonical_value(request.y);
  if (vx > vy)
    throw std::invalid_argument(
        "value(X) > value(Y) cannot occur for the canonical evaluator on X ⊆ Y; inputs are "
        "inconsistent");

  DarbouxTrace trace;
  trace.request = request;

  if (request.target <= vx) {
    trace.stages.push_back(trivial_stage(request.x, vx));
    attach_certificates(trace);
    return trace;
  }
  if (request.target == vy) {
    trace.stages.push_back(trivial_stage(request.y, vy));
    attach_certificates(trace);
    return trace;
  }
  if (request.target > vy)
    throw std::invalid_argument("target " + rat_to_string(request.target) +
                                " exceeds value(Y) = " + rat_to_string(vy));

  Stage first;
  first.index = 1;
  first.inner = request.x;
  first.outer = request.y;
  first.gap_modulus = 1;
  first.gap_residue = 0;
  first.inner_value = vx;
  first.outer_value = vy;
  trace.stages.push_back(std::move(first));

  for (int n = 2; n <= request.depth; ++n) {
    try {
      trace.stages.push_back(refine(trace.stages.back(), request.target));
    } catch (const LcmCapExceeded& e) {
      trace.capped = true;
      trace.cap_note = e.what();
      break;
    }
  }
  attach_certificates(trace);
  return trace;
}

DarbouxTrace dual_construct(const DarbouxRequest& request) {
  if (request.depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (request.target < 0 || request.target > 1)
    throw std::invalid_argument("target must lie in [0, 1]");
  if (!is_subset(request.x, request.y))
    throw std::invalid_argument("dual_construct requires X ⊆ Y");

  Rational lx = 1 - canonical_value(set_complement(request.x));
  Rational ly = 1 - canonical_value(set_complement(request.y));

  DarbouxTrace trace;
  trace.request = request;
  trace.lower_mode = true;

  if (request.target <= lx) {
    trace.stages.push_back(trivial_stage(request.x, lx));
    attach_certificates(trace);
    return trace;
  }
  if (request.target == ly) {
    trace.stages.push_back(trivial_stage(request.y, ly));
    attach_certificates(trace);
    return trace;
  }
  if (request.target > ly)
    throw std::invalid_argument("lower target " + rat_to_string(request.target) +
                                " exceeds lower value(Y) = " + rat_to_string(ly));

  DarbouxRequest conjugate;
  conjugate.x = set_complement(request.y);
  conjugate.y = set_complement(request.x);
  conjugate.target = 1 - request.target;
  conjugate.depth = request.depth;

  DarbouxTrace upper = construct(conjugate);
  trace.capped = upper.capped;
  trace.cap_note = upper.cap_note;
  trace.stages.reserve(upper.stages.size());
  for (const Stage& st : upper.stages) {
    Stage dual;
    dual.index = st.index;
    dual.inner = set_complement(st.outer);
    dual.outer = set_complement(st.inner);
    dual.gap_modulus = st.gap_modulus;  // the gap set is unchanged by conjugation
    dual.gap_residue = st.gap_residue;
    dual.inner_value = 1 - st.outer_value;
    dual.outer_value = 1 - st.inner_value;
    trace.stages.push_back(std::move(dual));
  }
  attach_certificates(trace);
  return trace;
}

MembershipVerdict member_at_depth(const DarbouxTrace& trace, std::uint64_t x) {
  for (const Stage& st : trace.stages) {
    if (st.inner.contains(x)) return {MembershipKind::In, st.index};
    if (!st.outer.contains(x)) return {MembershipKind::Out, st.index};
  }
  return {MembershipKind::Undecided, 0};
}

}  // namespace densityforge
