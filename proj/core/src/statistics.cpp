#include "coxlab/statistics.hpp"

#include <cstdlib>
#include <stdexcept>

#include "coxlab/patterns.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

std::int64_t disarray(const Element& w) {
  std::int64_t total = 0;
  std::int64_t i = 1;
  for (std::int64_t v : w.window()) total += std::llabs(v - i++);
  if (total % 2 != 0) {
    throw std::logic_error("odd disarray " + std::to_string(total) + " for " + format_window(w));
  }
  return total;
}

Crossing crossing_numbers(const Element& w, std::int64_t i) {
  if (w.spec().is_frozen(i)) {
    throw FrozenPosition("position " + std::to_string(i) + " is frozen in " +
                         w.spec().to_string());
  }
  // |w(j) - j| <= D, so j <= i - D cannot reach above i and j > i + D
  // cannot land at or below i.
  const std::int64_t d = displacement_bound(w);
  Crossing c;
  c.position = i;
  for (std::int64_t j = i - d + 1; j <= i; ++j) {
    if (!w.spec().is_frozen(j) && w.apply(j) > i) ++c.a;
  }
  for (std::int64_t j = i + 1; j <= i + d; ++j) {
    if (!w.spec().is_frozen(j) && w.apply(j) <= i) ++c.b;
  }
  return c;
}

std::int64_t gap(const Element& w) { return coxeter_length(w) - disarray(w) / 2; }

bool is_tight(const Element& w) { return gap(w) == 0; }

std::optional<AscentStep> ascent_step(const Element& v, int letter) {
  if (is_mirror_transposition(v.spec(), letter) || is_right_descent(v, letter)) {
    return std::nullopt;
  }
  const auto [i, next] = transposed_pair(v.spec(), letter);
  AscentStep step;
  step.delta = disarray(right_multiply(v, letter)) - disarray(v);
  step.crossing = v.apply(i) <= i && i < v.apply(next);
  return step;
}

}  // namespace coxlab
