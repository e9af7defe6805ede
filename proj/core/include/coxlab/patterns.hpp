#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxlab/group.hpp"

namespace coxlab {

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

// D = max |w(x) - x| over the unfrozen integers (one period suffices).
std::int64_t displacement_bound(const Element& w);

// Unfrozen positions i < j < k with w(i) > w(j) > w(k).
struct PatternWitness {
  std::int64_t i = 0, j = 0, k = 0;
  std::int64_t wi = 0, wj = 0, wk = 0;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// Global 321 search. The middle position j runs over the class
// representatives 1..n in ascending order (domain symmetries carry
// witnesses to witnesses); i is taken nearest below j inside
// [w(j) - D + 1, j - 1] and k nearest above j inside [j + 1, w(j) + D - 1].
std::optional<PatternWitness> contains_global_321(const Element& w);

// A signed permutation window used as a classical pattern.
class SignedPattern {
 public:
  explicit SignedPattern(std::vector<std::int64_t> entries);  // throws WindowInvalid
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::int64_t> entries_;
};

// Classical signed containment among positions 1..n. Accepts B elements and
// A elements (all-positive embedding); throws FamilyMismatch for affine ones.
bool classical_contains(const Element& w, const SignedPattern& p);

// The six patterns 1(-2), (-1)(-2), 321, 32(-1), (-3)21, (-3)2(-1).
const std::array<SignedPattern, 6>& pattern_set_P();

// True iff w classically avoids every pattern of pattern_set_P().
bool avoids_P(const Element& w);

}  // namespace coxlab
