#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/group.hpp"

namespace coxlab {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// Dense integer polynomial in q; coefficient index = degree. Trailing
// zeros are dropped, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::int64_t> coefficients);

  static QPolynomial one() { return QPolynomial({1}); }
  static QPolynomial monomial(int degree, std::int64_t coefficient = 1);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int degree) const noexcept;
  std::int64_t evaluate(std::int64_t q) const noexcept;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Multiply by q^k.
  QPolynomial shifted(int k) const;

  std::string to_string() const;  // "1 + 2q + 2q^2"

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

// Elements grouped by Coxeter length, each layer sorted by window.
struct LengthCensus {
  GroupSpec spec;
  int max_length = 0;
  bool saturated = false;  // the group is exhausted within max_length
  std::vector<std::vector<Element>> layers;

  std::size_t total() const noexcept;
};

// Breadth-first search of the Cayley graph from the identity, deduplicated
// by window. Throws BudgetExceeded when more than `budget` elements would
// be stored.
LengthCensus bfs_by_length(const GroupSpec& spec, int max_length,
                           std::size_t budget = kDefaultBudget);

struct AvoiderPolynomial {
  QPolynomial polynomial;  // q^length per globally 321-avoiding element
  int max_length = 0;
  bool truncated = false;  // true unless the census is saturated
};

AvoiderPolynomial avoider_polynomial(const LengthCensus& census);
// Finite families default to the full group; affine families need L.
AvoiderPolynomial avoider_polynomial(const GroupSpec& spec, std::optional<int> max_length,
                                     std::size_t budget = kDefaultBudget);

// C_0 = 1, C_{n+1} = C_n + sum_{k=0}^{n-1} q^{k+1} C_k C_{n-k}.
QPolynomial catalan_poly_recurrence(int n);
// C^B_0 = 1, C^B_{m+1} = (1 - q^{m+1}) C_m + sum_{k=0}^{m} (q^{m-k+1} + q^{k+1}) C_{m-k} C^B_k.
QPolynomial typeB_poly_recurrence(int n);

struct RecurrenceReport {
  Family family = Family::A;
  int rank = 0;
  QPolynomial from_census;
  QPolynomial from_recurrence;
  std::optional<int> first_mismatch;  // lowest differing degree

  bool passed() const noexcept { return !first_mismatch; }
};

// Finite families only; throws InvalidSpec otherwise.
RecurrenceReport verify_recurrence(const GroupSpec& spec, std::size_t budget = kDefaultBudget);

struct ElementVerdict {
  std::vector<std::int64_t> window;
  int length = 0;
  std::int64_t disarray = 0;
  bool tight = false;                      // (A)
  bool separated = false;                  // (B)
  std::optional<bool> no_braid_factor;     // (B'), nondegenerate specs only
  bool avoids_321 = false;                 // (C)

  bool consistent() const noexcept;
};

struct LayerSummary {
  int length = 0;
  std::size_t count = 0;
  std::size_t tight = 0;
  std::size_t avoiding = 0;
  std::size_t separated = 0;
  std::size_t no_braid_factor = 0;
};

struct TheoremReport {
  GroupSpec spec;
  int max_length = 0;
  bool saturated = false;
  std::vector<LayerSummary> layers;
  std::vector<ElementVerdict> disagreements;
  bool uniformly_true = true;  // every predicate held for every element

  std::size_t elements() const noexcept;
  bool passed() const noexcept { return disagreements.empty(); }
};

ElementVerdict evaluate_conditions(const Element& w);
TheoremReport verify_main_theorem(const GroupSpec& spec, int max_length,
                                  std::size_t budget = kDefaultBudget);
TheoremReport verify_main_theorem(const LengthCensus& census);

// w -> f^-1 o w o f with f(z) = 2z + 1, from affine C n=1 to affine A n=2.
Element degenerate_image(const Element& w);

struct IsomorphismMismatch {
  std::vector<std::int64_t> source;
  std::vector<std::int64_t> image;
  std::string what;
};

struct IsomorphismReport {
  int max_length = 0;
  std::size_t checked = 0;
  std::vector<IsomorphismMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

// Checks that the image preserves Coxeter length, disarray and global 321
// status, and that it hits each affine A n=2 element of length <= L once.
IsomorphismReport degenerate_isomorphism_check(int max_length,
                                               std::size_t budget = kDefaultBudget);

}  // namespace coxlab
