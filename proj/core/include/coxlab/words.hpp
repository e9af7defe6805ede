#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxlab/group.hpp"

namespace coxlab {

// Sequence of generator letters, read left to right as s_{i1} s_{i2} ...
using Word = std::vector<int>;

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Coxeter matrix entry m(s_a, s_b); kInfiniteOrder for the dihedral edges
// of affine A n=2 and affine C n=1.
inline constexpr int kInfiniteOrder = -1;
int coxeter_m(const GroupSpec& spec, int a, int b);

struct DescentSet {
  std::vector<int> letters;  // ascending

  bool contains(int letter) const noexcept;
  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

// s = <(a a')> is a right descent iff w(a) > w(a').
DescentSet right_descents(const Element& w);
bool is_right_descent(const Element& w, int letter);

// w * s_letter.
Element right_multiply(const Element& w, int letter);

// Number of steps of greedy right-descent reduction to the identity.
int coxeter_length(const Element& w);

// Left-to-right product; throws LetterOutOfAlphabet.
Element word_to_element(const GroupSpec& spec, std::span<const int> word);
bool is_reduced(const GroupSpec& spec, std::span<const int> word);

struct ReducedWords {
  std::vector<Word> words;  // lexicographically sorted
  bool truncated = false;
};

// All reduced words of w, or the first `cap` found with `truncated` set.
// With require_complete, truncation throws CapExceeded instead.
ReducedWords reduced_words(const Element& w, std::optional<std::size_t> cap = std::nullopt,
                           bool require_complete = false);

// Number of reduced words, saturating at UINT64_MAX.
std::uint64_t reduced_word_count(const Element& w);

// Does some reduced word of w contain one of `factors` as a consecutive
// block? Explores the prefix lattice with memoization instead of listing
// words.
bool some_reduced_word_contains(const Element& w, std::span<const Word> factors);

// Factors s_i s_{i+-1} s_i for i in [n-1], by generator identity.
std::vector<Word> braid_factors(const GroupSpec& spec);
// Alternating factors of length m(s, s') for every finite non-commuting pair.
std::vector<Word> long_braid_factors(const GroupSpec& spec);

// In every reduced word, for all i in [n-1], every two copies of s_i are
// separated by both s_{i-1} and s_{i+1} (generators that do not exist can
// never separate).
bool condition_B(const Element& w);
// No reduced word contains a factor s_i s_{i+-1} s_i with i in [n-1].
bool condition_Bprime(const Element& w);
bool is_fully_commutative(const Element& w);

// Whitespace- or comma-separated letters; affine A letter n becomes 0.
Word parse_word(const GroupSpec& spec, std::string_view text);
std::string format_word(std::span<const int> word);

}  // namespace coxlab
