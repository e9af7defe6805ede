#pragma once

// Unbranched George groups in window notation: the symmetric group S_n,
// the hyperoctahedral group S^B_n, the affine symmetric group (affine A)
// and the affine signed permutations (affine C). Every element is a
// bijection of Z that fixes the frozen integers and commutes with the
// domain symmetries of its family, so the window w(1..n) determines it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class WindowInvalid : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class LetterOutOfAlphabet : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Family { A, B, AffineA, AffineC };

std::string_view family_code(Family f);   // "a", "b", "affa", "affc"
Family parse_family(std::string_view code);  // throws ParseError

class GroupSpec {
 public:
  // Throws InvalidSpec when the rank is too small for the family.
  GroupSpec(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  bool is_affine() const noexcept {
    return family_ == Family::AffineA || family_ == Family::AffineC;
  }
  // S_n, S^B_n for n >= 1, affine A for n >= 3, affine C for n >= 2.
  bool is_nondegenerate() const noexcept;

  // Generator letters in increasing order.
  std::vector<int> alphabet() const;
  bool in_alphabet(int letter) const noexcept;
  // Letter of the generator s_k when it exists (affine A reduces k mod n).
  std::optional<int> generator_letter(int k) const noexcept;
  // Normalizes an input letter (affine A: n -> 0); throws LetterOutOfAlphabet.
  int normalize_letter(int letter) const;

  // Frozen test per family; out-of-domain integers of finite families count
  // as frozen.
  bool is_frozen(std::int64_t i) const noexcept;

  // Length of one fundamental stretch of positions: the domain span for
  // finite families, n for affine A and 2(n+1) for affine C.
  std::int64_t period() const noexcept;

  // Largest Coxeter length in the group; nullopt for affine families.
  std::optional<int> longest_length() const noexcept;

  std::string to_string() const;  // e.g. "affc n=2"

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  int rank_;
};

// x = sign * representative + offset, where representative lies in [1, n]
// and y -> sign * y + offset is a symmetry of the domain.
struct ClassDecomposition {
  int representative;
  int sign;
  std::int64_t offset;
};

std::optional<ClassDecomposition> decompose(const GroupSpec& spec, std::int64_t x);

// Symmetry class representative in [1, n]; nullopt for frozen integers.
std::optional<int> symmetry_class(const GroupSpec& spec, std::int64_t i);
inline bool is_frozen(const GroupSpec& spec, std::int64_t i) { return spec.is_frozen(i); }

// Unfrozen integers in [lo, hi], ascending.
std::vector<std::int64_t> unfrozen_positions(const GroupSpec& spec, std::int64_t lo,
                                             std::int64_t hi);
// Unfrozen positions covering `periods` consecutive periods around the
// window (the whole domain for finite families).
std::vector<std::int64_t> sample_positions(const GroupSpec& spec, int periods);

class Element {
 public:
  // Validates the window; throws WindowInvalid naming the violated invariant.
  static Element from_window(const GroupSpec& spec, std::vector<std::int64_t> window);
  static Element identity(const GroupSpec& spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::span<const std::int64_t> window() const noexcept { return window_; }
  int rank() const noexcept { return spec_.rank(); }

  // w(i) for any integer i; frozen integers are fixed.
  std::int64_t apply(std::int64_t i) const noexcept;
  std::int64_t operator()(std::int64_t i) const noexcept { return apply(i); }

  bool is_identity() const noexcept;

  friend bool operator==(const Element& a, const Element& b) {
    return a.spec_ == b.spec_ && a.window_ == b.window_;
  }
  // Lexicographic on windows; only meaningful within one spec.
  friend bool operator<(const Element& a, const Element& b) { return a.window_ < b.window_; }

 private:
  Element(GroupSpec spec, std::vector<std::int64_t> window)
      : spec_(spec), window_(std::move(window)) {}

  GroupSpec spec_;
  std::vector<std::int64_t> window_;

  friend Element multiply(const Element&, const Element&);
  friend Element inverse(const Element&);
  friend Element simple_reflection(const GroupSpec&, int);
};

// (u * v)(x) = u(v(x)). Throws SpecMismatch.
Element multiply(const Element& u, const Element& v);
inline Element operator*(const Element& u, const Element& v) { return multiply(u, v); }
Element inverse(const Element& u);

inline Element identity(const GroupSpec& spec) { return Element::identity(spec); }
inline Element from_window(const GroupSpec& spec, std::vector<std::int64_t> values) {
  return Element::from_window(spec, std::move(values));
}

// The simple transposition s_k extended by the symmetries.
// Throws LetterOutOfAlphabet.
Element simple_reflection(const GroupSpec& spec, int letter);

// The pair a < a' of consecutive unfrozen integers swapped by s_letter:
// (k, k+1) for adjacent transpositions, (-1, 1) for s_0 in B / affine C,
// (n, n+2) for s_n in affine C, (0, 1) for s_0 in affine A.
std::pair<std::int64_t, std::int64_t> transposed_pair(const GroupSpec& spec, int letter);

// True when s_letter swaps two integers of the same symmetry class across
// a mirror (the sign-change transpositions).
bool is_mirror_transposition(const GroupSpec& spec, int letter);

struct WindowHash {
  std::size_t operator()(std::span<const std::int64_t> w) const noexcept;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return WindowHash{}(e.window()); }
};

// Text formats: "-1,-2" for windows; "1 0 1" or "1,0,1" for words.
std::vector<std::int64_t> parse_window(std::string_view text);
std::string format_window(std::span<const std::int64_t> window);
inline std::string format_window(const Element& e) { return format_window(e.window()); }

}  // namespace coxlab
