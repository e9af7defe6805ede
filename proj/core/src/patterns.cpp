#include "coxlab/patterns.hpp"

#include <algorithm>
#include <cstdlib>

namespace coxlab {

namespace {

bool order_isomorphic_abs(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if ((std::llabs(a[x]) < std::llabs(a[y])) != (std::llabs(b[x]) < std::llabs(b[y]))) {
        return false;
      }
    }
  }
  return true;
}

bool matches_at(const Element& w, const SignedPattern& p, const std::vector<std::int64_t>& pos) {
  std::vector<std::int64_t> values;
  values.reserve(pos.size());
  for (std::size_t t = 0; t < pos.size(); ++t) {
    const std::int64_t v = w.apply(pos[t]);
    if (v * p.entries()[t] <= 0) return false;
    values.push_back(v);
  }
  return order_isomorphic_abs(values, p.entries());
}

bool search(const Element& w, const SignedPattern& p, std::vector<std::int64_t>& pos,
            std::int64_t next) {
  if (pos.size() == p.size()) return matches_at(w, p, pos);
  const std::int64_t n = w.rank();
  const auto remaining = static_cast<std::int64_t>(p.size() - pos.size());
  for (std::int64_t i = next; i <= n - remaining + 1; ++i) {
    pos.push_back(i);
    if (search(w, p, pos, i + 1)) return true;
    pos.pop_back();
  }
  return false;
}

}  // namespace

std::int64_t displacement_bound(const Element& w) {
  std::int64_t d = 0;
  for (std::int64_t x : sample_positions(w.spec(), 1)) {
    d = std::max<std::int64_t>(d, std::llabs(w.apply(x) - x));
  }
  return d;
}

std::optional<PatternWitness> contains_global_321(const Element& w) {
  const GroupSpec& spec = w.spec();
  const std::int64_t d = displacement_bound(w);
  for (std::int64_t j = 1; j <= spec.rank(); ++j) {
    const std::int64_t wj = w.apply(j);
    std::optional<std::int64_t> i, k;
    for (std::int64_t x = j - 1; x >= wj - d + 1; --x) {
      if (!spec.is_frozen(x) && w.apply(x) > wj) {
        i = x;
        break;
      }
    }
    if (!i) continue;
    for (std::int64_t x = j + 1; x <= wj + d - 1; ++x) {
      if (!spec.is_frozen(x) && w.apply(x) < wj) {
        k = x;
        break;
      }
    }
    if (!k) continue;
    return PatternWitness{*i, j, *k, w.apply(*i), wj, w.apply(*k)};
  }
  return std::nullopt;
}

SignedPattern::SignedPattern(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw WindowInvalid("a signed pattern needs at least one entry");
  Element::from_window(GroupSpec(Family::B, static_cast<int>(entries_.size())), entries_);
}

bool classical_contains(const Element& w, const SignedPattern& p) {
  if (w.spec().is_affine()) {
    throw FamilyMismatch("classical signed patterns need a B (or A) element, got " +
                         w.spec().to_string());
  }
  if (p.size() > static_cast<std::size_t>(w.rank())) return false;
  std::vector<std::int64_t> pos;
  return search(w, p, pos, 1);
}

const std::array<SignedPattern, 6>& pattern_set_P() {
  static const std::array<SignedPattern, 6> patterns = {
      SignedPattern({1, -2}),     SignedPattern({-1, -2}),   SignedPattern({3, 2, 1}),
      SignedPattern({3, 2, -1}),  SignedPattern({-3, 2, 1}), SignedPattern({-3, 2, -1}),
  };
  return patterns;
}

bool avoids_P(const Element& w) {
  return std::none_of(pattern_set_P().begin(), pattern_set_P().end(),
                      [&](const SignedPattern& p) { return classical_contains(w, p); });
}

}  // namespace coxlab
