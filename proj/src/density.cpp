#include "densityforge/density.hpp"

#include <stdexcept>

namespace densityforge {

Rational canonical_value(const APSet& a) {
  return Rational(BigInt(a.residue_count()), BigInt(a.modulus()));
}

DensityFunctional canonical_functional() {
  return DensityFunctional{"canonical", [](const APSet& a) { return canonical_value(a); }, true};
}

DensityFunctional lower_conjugate(const DensityFunctional& f) {
  std::string name = f.name.rfind("lower(", 0) == 0 && f.name.back() == ')'
                         ? f.name.substr(6, f.name.size() - 7)  // involution: peel the wrapper
                         : "lower(" + f.name + ")";
  auto inner = f.eval;
  return DensityFunctional{
      std::move(name), [inner](const APSet& a) { return 1 - inner(set_complement(a)); }, f.exact};
}

namespace {

void check_schedule(const std::vector<std::uint64_t>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
    if (schedule[i] >= schedule[i + 1])
      throw std::invalid_argument("schedule must be strictly increasing");
}

DensityEstimate finish_estimate(std::vector<std::pair<std::uint64_t, double>> samples,
                                std::optional<Rational> bound) {
  DensityEstimate est;
  est.samples = std::move(samples);
  est.bound = std::move(bound);
  double best = 0.0;
  for (std::size_t i = est.samples.size() / 2; i < est.samples.size(); ++i)
    best = std::max(best, est.samples[i].second);
  est.value = best;
  return est;
}

}  // namespace

DensityEstimate estimate_upper_asymptotic(const std::function<bool(std::uint64_t)>& member,
                                          const std::vector<std::uint64_t>& schedule) {
  check_schedule(schedule);
  std::vector<std::pair<std::uint64_t, double>> samples;
  samples.reserve(schedule.size());
  std::uint64_t count = 0, x = 0;
  for (std::uint64_t n : schedule) {
    for (; x < n; ++x)
      if (member(x)) ++count;
    samples.emplace_back(n, n ? double(count) / double(n) : 0.0);
  }
  return finish_estimate(std::move(samples), std::nullopt);
}

DensityEstimate estimate_upper_asymptotic(const APSet& a,
                                          const std::vector<std::uint64_t>& schedule) {
  check_schedule(schedule);
  std::vector<std::pair<std::uint64_t, double>> samples;
  samples.reserve(schedule.size());
  for (std::uint64_t n : schedule)
    samples.emplace_back(n, n ? double(a.prefix_count(n)) / double(n) : 0.0);
  Rational bound(BigInt(a.modulus() + a.finite_size()), BigInt(schedule.back()));
  return finish_estimate(std::move(samples), bound);
}

DensityEstimate estimate_banach(const std::function<bool(std::uint64_t)>& member,
                                std::uint64_t window, std::uint64_t scan) {
  if (window == 0 || window > scan)
    throw std::invalid_argument("window length must satisfy 1 <= window <= scan bound");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < window; ++x)
    if (member(x)) ++count;
  std::uint64_t best = count, best_at = 0;
  for (std::uint64_t t = 1; t + window <= scan; ++t) {
    count += member(t + window - 1) ? 1 : 0;
    count -= member(t - 1) ? 1 : 0;
    if (count > best) {
      best = count;
      best_at = t;
    }
  }
  DensityEstimate est;
  est.value = double(best) / double(window);
  est.samples = {{best_at, est.value}};
  return est;
}

}  // namespace densityforge
