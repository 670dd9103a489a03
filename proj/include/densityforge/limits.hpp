#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace densityforge {

// Resource guards. The nested-refinement construction multiplies moduli at
// every stage, so it needs a predictable failure mode long before memory
// runs out; hitting a cap signals resource exhaustion, never wrong input.
struct Limits {
  std::uint64_t lcm_cap = 1'000'000'000ULL;  // max modulus of any canonical form
  std::size_t finite_cap = 10'000;           // max |added| + |removed|
  std::uint64_t exhaustive_split_cap = 12;   // max k for the 2^k reference split
};

/// Process-wide limits. Set once at startup (e.g. from CLI flags) before any
/// concurrent use; all set operations read them.
Limits& limits();

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

class LcmCapExceeded : public ResourceLimitError {
 public:
  explicit LcmCapExceeded(const std::string& what) : ResourceLimitError(what) {}
};

class FiniteCapExceeded : public ResourceLimitError {
 public:
  explicit FiniteCapExceeded(const std::string& what) : ResourceLimitError(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace densityforge
