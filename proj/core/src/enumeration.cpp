#include "coxlab/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "coxlab/patterns.hpp"
#include "coxlab/statistics.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

QPolynomial::QPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

QPolynomial QPolynomial::monomial(int degree, std::int64_t coefficient) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coefficient;
  return QPolynomial(std::move(c));
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPolynomial::coefficient(int degree) const noexcept {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

std::int64_t QPolynomial::evaluate(std::int64_t q) const noexcept {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(int k) const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = c < 0 ? -c : c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (d == 0 || c != 1) out += std::to_string(c);
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::size_t LengthCensus::total() const noexcept {
  std::size_t t = 0;
  for (const auto& layer : layers) t += layer.size();
  return t;
}

LengthCensus bfs_by_length(const GroupSpec& spec, int max_length, std::size_t budget) {
  LengthCensus census{spec, max_length, false, {}};
  std::vector<Element> generators;
  for (int letter : spec.alphabet()) generators.push_back(simple_reflection(spec, letter));

  std::unordered_set<Element, ElementHash> seen;
  census.layers.push_back({Element::identity(spec)});
  seen.insert(census.layers.back().front());
  for (int length = 1; length <= max_length; ++length) {
    std::vector<Element> next;
    for (const Element& w : census.layers.back()) {
      for (const Element& s : generators) {
        Element ws = w * s;
        if (seen.contains(ws)) continue;
        if (seen.size() >= budget) {
          throw BudgetExceeded("breadth-first search of " + spec.to_string() +
                               " exceeded the element budget of " + std::to_string(budget));
        }
        seen.insert(ws);
        next.push_back(std::move(ws));
      }
    }
    if (next.empty()) {
      census.saturated = true;
      break;
    }
    std::sort(next.begin(), next.end());
    census.layers.push_back(std::move(next));
  }
  // A finite group whose last layer holds the longest element is exhausted
  // even when max_length stops exactly there.
  if (!census.saturated && spec.longest_length() &&
      static_cast<int>(census.layers.size()) - 1 >= *spec.longest_length()) {
    census.saturated = true;
  }
  return census;
}

AvoiderPolynomial avoider_polynomial(const LengthCensus& census) {
  std::vector<std::int64_t> coeffs(census.layers.size(), 0);
  for (std::size_t len = 0; len < census.layers.size(); ++len) {
    for (const Element& w : census.layers[len]) {
      if (!contains_global_321(w)) ++coeffs[len];
    }
  }
  return {QPolynomial(std::move(coeffs)), census.max_length, !census.saturated};
}

AvoiderPolynomial avoider_polynomial(const GroupSpec& spec, std::optional<int> max_length,
                                     std::size_t budget) {
  const auto longest = spec.longest_length();
  if (!max_length && !longest) {
    throw InvalidSpec("affine family " + spec.to_string() + " needs an explicit maximum length");
  }
  return avoider_polynomial(bfs_by_length(spec, max_length.value_or(longest.value_or(0)), budget));
}

QPolynomial catalan_poly_recurrence(int n) {
  std::vector<QPolynomial> c{QPolynomial::one()};
  for (int m = 0; m < n; ++m) {
    QPolynomial next = c[static_cast<std::size_t>(m)];
    for (int k = 0; k <= m - 1; ++k) {
      next += (c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - k)]).shifted(k + 1);
    }
    c.push_back(std::move(next));
  }
  return c[static_cast<std::size_t>(n)];
}

QPolynomial typeB_poly_recurrence(int n) {
  std::vector<QPolynomial> cat;
  for (int m = 0; m <= n; ++m) cat.push_back(catalan_poly_recurrence(m));
  std::vector<QPolynomial> b{QPolynomial::one()};
  for (int m = 0; m < n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    QPolynomial next = cat[um] - cat[um].shifted(m + 1);
    for (int k = 0; k <= m; ++k) {
      const QPolynomial weight = QPolynomial::monomial(m - k + 1) + QPolynomial::monomial(k + 1);
      next += weight * cat[static_cast<std::size_t>(m - k)] * b[static_cast<std::size_t>(k)];
    }
    b.push_back(std::move(next));
  }
  return b[static_cast<std::size_t>(n)];
}

RecurrenceReport verify_recurrence(const GroupSpec& spec, std::size_t budget) {
  if (spec.is_affine()) {
    throw InvalidSpec("recurrences exist only for finite families, got " + spec.to_string());
  }
  RecurrenceReport report;
  report.family = spec.family();
  report.rank = spec.rank();
  report.from_census = avoider_polynomial(spec, std::nullopt, budget).polynomial;
  report.from_recurrence = spec.family() == Family::A ? catalan_poly_recurrence(spec.rank())
                                                      : typeB_poly_recurrence(spec.rank());
  const int top = std::max(report.from_census.degree(), report.from_recurrence.degree());
  for (int d = 0; d <= top; ++d) {
    if (report.from_census.coefficient(d) != report.from_recurrence.coefficient(d)) {
      report.first_mismatch = d;
      break;
    }
  }
  return report;
}

bool ElementVerdict::consistent() const noexcept {
  if (tight != separated || tight != avoids_321) return false;
  return !no_braid_factor || *no_braid_factor == tight;
}

ElementVerdict evaluate_conditions(const Element& w) {
  ElementVerdict v;
  v.window.assign(w.window().begin(), w.window().end());
  v.length = coxeter_length(w);
  v.disarray = disarray(w);
  v.tight = v.disarray / 2 == v.length;
  v.separated = condition_B(w);
  if (w.spec().is_nondegenerate()) v.no_braid_factor = condition_Bprime(w);
  v.avoids_321 = !contains_global_321(w);
  return v;
}

std::size_t TheoremReport::elements() const noexcept {
  std::size_t t = 0;
  for (const auto& l : layers) t += l.count;
  return t;
}

TheoremReport verify_main_theorem(const LengthCensus& census) {
  TheoremReport report{census.spec, census.max_length, census.saturated, {}, {}, true};
  for (std::size_t len = 0; len < census.layers.size(); ++len) {
    LayerSummary summary;
    summary.length = static_cast<int>(len);
    for (const Element& w : census.layers[len]) {
      const ElementVerdict v = evaluate_conditions(w);
      ++summary.count;
      summary.tight += v.tight;
      summary.avoiding += v.avoids_321;
      summary.separated += v.separated;
      summary.no_braid_factor += v.no_braid_factor.value_or(false);
      const bool all_true =
          v.tight && v.separated && v.avoids_321 && v.no_braid_factor.value_or(true);
      report.uniformly_true = report.uniformly_true && all_true;
      if (!v.consistent() || v.length != summary.length) report.disagreements.push_back(v);
    }
    report.layers.push_back(summary);
  }
  return report;
}

TheoremReport verify_main_theorem(const GroupSpec& spec, int max_length, std::size_t budget) {
  return verify_main_theorem(bfs_by_length(spec, max_length, budget));
}

Element degenerate_image(const Element& w) {
  if (!(w.spec() == GroupSpec(Family::AffineC, 1))) {
    throw SpecMismatch("degenerate isomorphism expects affc n=1, got " + w.spec().to_string());
  }
  // f^-1(w(f(z))) = (w(2z + 1) - 1) / 2 for z = 1, 2.
  std::vector<std::int64_t> window;
  for (std::int64_t z : {1, 2}) window.push_back((w.apply(2 * z + 1) - 1) / 2);
  return Element::from_window(GroupSpec(Family::AffineA, 2), std::move(window));
}

IsomorphismReport degenerate_isomorphism_check(int max_length, std::size_t budget) {
  IsomorphismReport report;
  report.max_length = max_length;
  const LengthCensus source = bfs_by_length(GroupSpec(Family::AffineC, 1), max_length, budget);
  const LengthCensus target = bfs_by_length(GroupSpec(Family::AffineA, 2), max_length, budget);
  std::unordered_set<Element, ElementHash> expected;
  for (const auto& layer : target.layers) expected.insert(layer.begin(), layer.end());

  for (const auto& layer : source.layers) {
    for (const Element& w : layer) {
      ++report.checked;
      const Element img = degenerate_image(w);
      auto mismatch = [&](std::string what) {
        report.mismatches.push_back({std::vector<std::int64_t>(w.window().begin(), w.window().end()),
                                     std::vector<std::int64_t>(img.window().begin(), img.window().end()),
                                     std::move(what)});
      };
      if (coxeter_length(w) != coxeter_length(img)) mismatch("length");
      if (disarray(w) != disarray(img)) mismatch("disarray");
      if (contains_global_321(w).has_value() != contains_global_321(img).has_value()) {
        mismatch("321 status");
      }
      if (expected.erase(img) != 1) mismatch("image outside the target ball or repeated");
    }
  }
  for (const Element& missed : expected) {
    report.mismatches.push_back(
        {{}, std::vector<std::int64_t>(missed.window().begin(), missed.window().end()),
         "target element not hit"});
  }
  return report;
}

}  // namespace coxlab
