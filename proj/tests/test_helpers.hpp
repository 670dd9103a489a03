#pragma once

#include <random>
#include <string_view>

#include "densityforge/apset.hpp"
#include "densityforge/limits.hpp"
#include "densityforge/setexpr.hpp"

namespace testutil {

/// Saves and restores the process-wide limits around a test.
struct LimitsGuard {
  densityforge::Limits saved;
  LimitsGuard() : saved(densityforge::limits()) {}
  ~LimitsGuard() { densityforge::limits() = saved; }
};

inline densityforge::APSet ap(std::string_view text) {
  return densityforge::normalize(densityforge::parse_set_expr(text));
}

/// Random expression trees for property tests. Purely a test-side generator;
/// keeps moduli and shifts small so normalization never hits the caps.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  densityforge::SetExpr next(int depth = 3) {
    using densityforge::SetExpr;
    if (depth == 0 || draw(4) == 0) {
      switch (draw(4)) {
        case 0: return SetExpr::nat();
        case 1: return SetExpr::empty();
        case 2: return SetExpr::progression(1 + draw(10), draw(20));
        default: {
          std::vector<std::uint64_t> elems;
          for (std::uint64_t i = 0, n = draw(4); i < n; ++i) elems.push_back(draw(40));
          if (elems.empty()) elems.push_back(draw(40));
          return SetExpr::finite_set(std::move(elems));
        }
      }
    }
    switch (draw(5)) {
      case 0: return SetExpr::union_of(next(depth - 1), next(depth - 1));
      case 1: return SetExpr::intersect_of(next(depth - 1), next(depth - 1));
      case 2: return SetExpr::difference_of(next(depth - 1), next(depth - 1));
      case 3: return SetExpr::complement_of(next(depth - 1));
      default: return SetExpr::affine_of(1 + draw(4), next(depth - 1), draw(6));
    }
  }

  std::uint64_t draw(std::uint64_t n) { return rng_() % n; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testutil
