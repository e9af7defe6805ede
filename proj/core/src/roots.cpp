#include "coxlab/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "coxlab/statistics.hpp"

namespace coxlab {

namespace {

struct WeightedReflection {
  Element reflection;
  std::int64_t cost;
};

std::vector<WeightedReflection> weighted_reflections(const RootSystemSpec& rs, int max_height,
                                                     std::size_t budget) {
  std::vector<WeightedReflection> out;
  for (auto& r : positive_roots_up_to_height(rs, max_height, budget)) {
    out.push_back({std::move(r.reflection), height(r.root)});
  }
  return out;
}

// Dijkstra from the identity over right multiplication by reflections,
// settling elements of cost <= max_cost. Ties break by window order.
std::unordered_map<Element, std::int64_t, ElementHash> cost_search(
    const GroupSpec& spec, const std::vector<WeightedReflection>& edges, std::int64_t max_cost,
    const Element* target, std::size_t budget) {
  using Entry = std::pair<std::int64_t, Element>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_map<Element, std::int64_t, ElementHash> best;
  std::unordered_map<Element, std::int64_t, ElementHash> settled;
  const Element start = Element::identity(spec);
  best.emplace(start, 0);
  frontier.emplace(0, start);
  while (!frontier.empty()) {
    auto [cost, u] = frontier.top();
    frontier.pop();
    if (settled.contains(u)) continue;
    settled.emplace(u, cost);
    if (settled.size() > budget) {
      throw BudgetExceeded("height-cost search of " + spec.to_string() +
                           " exceeded the element budget of " + std::to_string(budget));
    }
    if (target && u == *target) break;
    for (const auto& e : edges) {
      const std::int64_t c = cost + e.cost;
      if (c > max_cost) continue;
      Element v = u * e.reflection;
      if (settled.contains(v)) continue;
      auto it = best.find(v);
      if (it != best.end() && it->second <= c) continue;
      best.insert_or_assign(v, c);
      frontier.emplace(c, std::move(v));
    }
  }
  return settled;
}

}  // namespace

std::string_view variant_code(RootVariant v) {
  return v == RootVariant::Standard ? "standard" : "long-zero";
}

RootVariant parse_variant(std::string_view text) {
  if (text == "standard" || text == "short-zero") return RootVariant::Standard;
  if (text == "long-zero") return RootVariant::LongZero;
  throw ParseError("unknown root-system variant '" + std::string(text) +
                   "' (expected standard|long-zero)");
}

std::int64_t height(const RootVector& v) {
  std::int64_t h = 0;
  for (std::int64_t c : v.coefficients) h += c;
  return h;
}

std::size_t RootSystemSpec::index_of(int letter) const {
  letter = group.normalize_letter(letter);
  const auto it = std::find(generators.begin(), generators.end(), letter);
  return static_cast<std::size_t>(it - generators.begin());
}

RootVector RootSystemSpec::simple_root(int letter) const {
  RootVector v{std::vector<std::int64_t>(generators.size(), 0)};
  v.coefficients[index_of(letter)] = 1;
  return v;
}

RootSystemSpec root_system_for(const GroupSpec& spec, RootVariant variant) {
  RootSystemSpec rs{spec, variant, spec.alphabet(), {}, {}, {}};
  const std::size_t count = rs.generators.size();
  const int n = spec.rank();
  rs.length_squared.assign(count, 2);
  // Only edges with m = 4 see the length ratio; m = infinity ends stay equal.
  const bool has_double_edges =
      (spec.family() == Family::B && n >= 2) || (spec.family() == Family::AffineC && n >= 2);
  if (has_double_edges) {
    rs.length_squared[rs.index_of(0)] = variant == RootVariant::Standard ? 1 : 4;
    if (spec.family() == Family::AffineC) rs.length_squared[rs.index_of(n)] = 1;
  }
  rs.m.assign(count, std::vector<int>(count, 1));
  rs.d.assign(count, std::vector<int>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      const int m = coxeter_m(spec, rs.generators[a], rs.generators[b]);
      rs.m[a][b] = m;
      int d = 0;
      if (m == 3) {
        d = 1;
      } else if (m == kInfiniteOrder) {
        d = 2;
      } else if (m == 4) {
        d = rs.length_squared[b] == 2 * rs.length_squared[a] ? 2 : 1;
      }
      rs.d[a][b] = d;
    }
  }
  return rs;
}

RootVector reflect_root(const RootSystemSpec& rs, int letter, const RootVector& v) {
  const std::size_t s = rs.index_of(letter);
  RootVector out = v;
  std::int64_t c = -v.coefficients[s];
  for (std::size_t t = 0; t < v.coefficients.size(); ++t) {
    if (t != s) c += rs.d[s][t] * v.coefficients[t];
  }
  out.coefficients[s] = c;
  return out;
}

std::vector<PositiveRoot> positive_roots_up_to_height(const RootSystemSpec& rs, int max_height,
                                                      std::size_t budget) {
  std::vector<PositiveRoot> found;
  std::map<RootVector, std::size_t> index;
  std::deque<std::size_t> queue;
  if (max_height >= 1) {
    for (int letter : rs.generators) {
      RootVector v = rs.simple_root(letter);
      index.emplace(v, found.size());
      queue.push_back(found.size());
      found.push_back({std::move(v), simple_reflection(rs.group, letter), Word{letter}});
    }
  }
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (int letter : rs.generators) {
      RootVector next = reflect_root(rs, letter, found[at].root);
      if (next == found[at].root || height(next) > max_height) continue;
      if (std::any_of(next.coefficients.begin(), next.coefficients.end(),
                      [](std::int64_t c) { return c < 0; })) {
        continue;
      }
      if (index.contains(next)) continue;
      if (found.size() >= budget) {
        throw BudgetExceeded("positive-root search exceeded the budget of " +
                             std::to_string(budget));
      }
      const Element s = simple_reflection(rs.group, letter);
      Word witness{letter};
      witness.insert(witness.end(), found[at].witness.begin(), found[at].witness.end());
      witness.push_back(letter);
      index.emplace(next, found.size());
      queue.push_back(found.size());
      found.push_back({std::move(next), s * found[at].reflection * s, std::move(witness)});
    }
  }
  std::sort(found.begin(), found.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    const auto ha = height(a.root), hb = height(b.root);
    return ha != hb ? ha < hb : a.root < b.root;
  });
  return found;
}

std::size_t DisHeightReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const DisHeightRow& r) { return !r.matches(); }));
}

DisHeightReport check_dis_equals_height(const GroupSpec& spec, int max_height,
                                        RootVariant variant, std::size_t budget) {
  DisHeightReport report{spec, variant, max_height, {}};
  const RootSystemSpec rs = root_system_for(spec, variant);
  for (auto& root : positive_roots_up_to_height(rs, max_height, budget)) {
    const std::int64_t half = disarray(root.reflection) / 2;
    report.rows.push_back({std::move(root), half});
  }
  return report;
}

std::int64_t min_height_cost(const Element& w, const RootSystemSpec& rs,
                             std::optional<int> horizon, std::size_t budget) {
  if (!(w.spec() == rs.group)) {
    throw SpecMismatch("root system for " + rs.group.to_string() + " used with element of " +
                       w.spec().to_string());
  }
  const int length = coxeter_length(w);
  if (length == 0) return 0;
  // An edge of weight h only helps when h < cost <= length, so roots up to
  // height `length` always suffice.
  const int h = std::max(1, horizon.value_or(length));
  const auto edges = weighted_reflections(rs, h, budget);
  const auto settled = cost_search(w.spec(), edges, length, &w, budget);
  const std::int64_t cost = settled.at(w);
  if (cost > h + 1) {
    throw InsufficientRootHorizon("root horizon " + std::to_string(h) +
                                  " cannot certify cost " + std::to_string(cost) + " of " +
                                  format_window(w));
  }
  return cost;
}

Prop43Report check_prop_4_3(const GroupSpec& spec, int max_length, RootVariant variant,
                            std::size_t budget) {
  Prop43Report report{spec, variant, max_length, 0, 0, {}, {}};
  const RootSystemSpec rs = root_system_for(spec, variant);
  const LengthCensus census = bfs_by_length(spec, max_length, budget);
  const auto edges = weighted_reflections(rs, std::max(1, max_length), budget);
  const auto costs = cost_search(spec, edges, max_length, nullptr, budget);

  // s s' s is allowed only across an infinite edge or with the longer root
  // in the middle.
  std::vector<Word> bad_factors;
  for (int s : rs.generators) {
    for (int t : rs.generators) {
      const int m = coxeter_m(spec, s, t);
      if (s == t || m == 2 || m == kInfiniteOrder) continue;
      if (!rs.longer(t, s)) bad_factors.push_back({s, t, s});
    }
  }

  for (std::size_t len = 0; len < census.layers.size(); ++len) {
    for (const Element& w : census.layers[len]) {
      ++report.elements;
      const std::vector<std::int64_t> window(w.window().begin(), w.window().end());
      const auto it = costs.find(w);
      if (it == costs.end() || it->second > static_cast<std::int64_t>(len)) {
        report.violations.push_back({window, "height-cost exceeds Coxeter length"});
        continue;
      }
      const bool factor_ok = !some_reduced_word_contains(w, bad_factors);
      if (it->second == static_cast<std::int64_t>(len)) {
        ++report.cost_tight;
        if (!factor_ok) report.violations.push_back({window, "braid factor with short middle root"});
        if (!is_fully_commutative(w)) report.violations.push_back({window, "not fully commutative"});
      } else if (factor_ok) {
        report.converse_candidates.push_back(window);
      }
    }
  }
  return report;
}

}  // namespace coxlab
