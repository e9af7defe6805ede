#pragma once

#include <cstdint>
#include <optional>

#include "coxlab/group.hpp"

namespace coxlab {

class FrozenPosition : public Error {
 public:
  using Error::Error;
};

// dis(w) = sum over the window of |w(i) - i|. Always even.
std::int64_t disarray(const Element& w);

// Crossing numbers at an unfrozen position i:
//   a = #{unfrozen j <= i : w(j) > i},  b = #{unfrozen j > i : w(j) <= i}.
struct Crossing {
  std::int64_t position = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

// Throws FrozenPosition when i is frozen (or outside a finite domain).
Crossing crossing_numbers(const Element& w, std::int64_t i);

// coxeter_length(w) - dis(w)/2; never negative.
std::int64_t gap(const Element& w);
bool is_tight(const Element& w);

// Change of disarray under right multiplication by an ascent s = <(i i+1)>
// whose two positions lie in different symmetry classes.
struct AscentStep {
  std::int64_t delta = 0;  // dis(v * s) - dis(v)
  bool crossing = false;   // v(i) <= i < v(i+1)
};

// nullopt when s_letter is a descent of v or a mirror transposition.
std::optional<AscentStep> ascent_step(const Element& v, int letter);

}  // namespace coxlab
