#pragma once

// Integer root-system computations in the rescaled simple-root basis
// lambda_s = c_s alpha_s, where every simple reflection acts by
//   s(lambda_t) = lambda_t + d(s, t) lambda_s,   s(lambda_s) = -lambda_s.
// The bilinear form is never materialized.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxlab/enumeration.hpp"
#include "coxlab/group.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

class InsufficientRootHorizon : public Error {
 public:
  using Error::Error;
};

// Which simple roots are short where the diagram allows a choice.
//   standard:  B has lambda_0 short; affine C has lambda_0 and lambda_n short
//              (the C-dual system).
//   long-zero: lambda_0 is the long end instead.
enum class RootVariant { Standard, LongZero };

std::string_view variant_code(RootVariant v);    // "standard", "long-zero"
RootVariant parse_variant(std::string_view text);  // throws ParseError

struct RootVector {
  std::vector<std::int64_t> coefficients;  // indexed like RootSystemSpec::generators

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

std::int64_t height(const RootVector& v);

struct RootSystemSpec {
  GroupSpec group;
  RootVariant variant = RootVariant::Standard;
  std::vector<int> generators;               // the alphabet
  std::vector<int> length_squared;           // c_s^2 up to a common scale
  std::vector<std::vector<int>> m;           // Coxeter matrix
  std::vector<std::vector<int>> d;           // d(s, t)

  std::size_t index_of(int letter) const;    // throws LetterOutOfAlphabet
  int d_of(int s, int t) const { return d[index_of(s)][index_of(t)]; }
  bool longer(int s, int t) const {          // c_s > c_t
    return length_squared[index_of(s)] > length_squared[index_of(t)];
  }
  RootVector simple_root(int letter) const;
};

RootSystemSpec root_system_for(const GroupSpec& spec,
                               RootVariant variant = RootVariant::Standard);

RootVector reflect_root(const RootSystemSpec& rs, int letter, const RootVector& v);

struct PositiveRoot {
  RootVector root;      // lambda_t = u(lambda_s)
  Element reflection;   // t = u s u^-1
  Word witness;         // palindromic word for t
};

// Breadth-first closure of the simple roots under reflect_root, keeping
// positive roots of height <= max_height. Sorted by (height, coefficients).
std::vector<PositiveRoot> positive_roots_up_to_height(const RootSystemSpec& rs, int max_height,
                                                      std::size_t budget = kDefaultBudget);

struct DisHeightRow {
  PositiveRoot root;
  std::int64_t half_disarray = 0;
  bool matches() const { return half_disarray == height(root.root); }
};

struct DisHeightReport {
  GroupSpec spec;
  RootVariant variant = RootVariant::Standard;
  int max_height = 0;
  std::vector<DisHeightRow> rows;

  std::size_t mismatches() const;
  bool passed() const { return mismatches() == 0; }
};

DisHeightReport check_dis_equals_height(const GroupSpec& spec, int max_height,
                                        RootVariant variant = RootVariant::Standard,
                                        std::size_t budget = kDefaultBudget);

// Cheapest reflection factorization of w, a reflection t costing
// height(lambda_t). Reflections are harvested up to `horizon` (default
// coxeter_length(w), which is always enough). Throws
// InsufficientRootHorizon when the horizon cannot certify the result.
std::int64_t min_height_cost(const Element& w, const RootSystemSpec& rs,
                             std::optional<int> horizon = std::nullopt,
                             std::size_t budget = kDefaultBudget);

struct Prop43Violation {
  std::vector<std::int64_t> window;
  std::string what;
};

struct Prop43Report {
  GroupSpec spec;
  RootVariant variant = RootVariant::Standard;
  int max_length = 0;
  std::size_t elements = 0;
  std::size_t cost_tight = 0;
  std::vector<Prop43Violation> violations;
  // Cost below length although every braid factor s s' s of every reduced
  // word has m = infinity or a longer middle root. Informational only.
  std::vector<std::vector<std::int64_t>> converse_candidates;

  bool passed() const { return violations.empty(); }
};

// For every w with length <= L and min height-cost equal to its length,
// checks the middle-root condition on all reduced words and full
// commutativity; also checks cost <= length everywhere.
Prop43Report check_prop_4_3(const GroupSpec& spec, int max_length,
                            RootVariant variant = RootVariant::Standard,
                            std::size_t budget = kDefaultBudget);

}  // namespace coxlab
