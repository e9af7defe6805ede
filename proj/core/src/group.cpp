#include "coxlab/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace coxlab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

int min_rank(Family f) { return f == Family::AffineA ? 2 : 1; }

}  // namespace

std::string_view family_code(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::AffineA: return "affa";
    case Family::AffineC: return "affc";
  }
  return "?";
}

Family parse_family(std::string_view code) {
  if (code == "a") return Family::A;
  if (code == "b") return Family::B;
  if (code == "affa") return Family::AffineA;
  if (code == "affc") return Family::AffineC;
  throw ParseError("unknown family code '" + std::string(code) + "' (expected a|b|affa|affc)");
}

GroupSpec::GroupSpec(Family family, int rank) : family_(family), rank_(rank) {
  if (rank < min_rank(family)) {
    throw InvalidSpec("family " + std::string(family_code(family)) + " requires n >= " +
                      std::to_string(min_rank(family)) + ", got n = " + std::to_string(rank));
  }
}

bool GroupSpec::is_nondegenerate() const noexcept {
  switch (family_) {
    case Family::A:
    case Family::B: return true;
    case Family::AffineA: return rank_ >= 3;
    case Family::AffineC: return rank_ >= 2;
  }
  return false;
}

std::vector<int> GroupSpec::alphabet() const {
  std::vector<int> out;
  const int first = family_ == Family::A ? 1 : 0;
  const int last = family_ == Family::AffineC ? rank_ : rank_ - 1;
  for (int k = first; k <= last; ++k) out.push_back(k);
  return out;
}

bool GroupSpec::in_alphabet(int letter) const noexcept {
  switch (family_) {
    case Family::A: return letter >= 1 && letter <= rank_ - 1;
    case Family::B:
    case Family::AffineA: return letter >= 0 && letter <= rank_ - 1;
    case Family::AffineC: return letter >= 0 && letter <= rank_;
  }
  return false;
}

std::optional<int> GroupSpec::generator_letter(int k) const noexcept {
  if (family_ == Family::AffineA) return static_cast<int>(floor_mod(k, rank_));
  if (in_alphabet(k)) return k;
  return std::nullopt;
}

int GroupSpec::normalize_letter(int letter) const {
  if (family_ == Family::AffineA && letter == rank_) letter = 0;
  if (!in_alphabet(letter)) {
    throw LetterOutOfAlphabet("letter " + std::to_string(letter) + " is not a generator of " +
                              to_string());
  }
  return letter;
}

bool GroupSpec::is_frozen(std::int64_t i) const noexcept {
  switch (family_) {
    case Family::A: return i < 1 || i > rank_;
    case Family::B: return i == 0 || i < -rank_ || i > rank_;
    case Family::AffineA: return false;
    case Family::AffineC: return floor_mod(i, rank_ + 1) == 0;
  }
  return true;
}

std::int64_t GroupSpec::period() const noexcept {
  switch (family_) {
    case Family::A: return rank_;
    case Family::B: return 2 * static_cast<std::int64_t>(rank_) + 1;
    case Family::AffineA: return rank_;
    case Family::AffineC: return 2 * (static_cast<std::int64_t>(rank_) + 1);
  }
  return rank_;
}

std::optional<int> GroupSpec::longest_length() const noexcept {
  if (family_ == Family::A) return rank_ * (rank_ - 1) / 2;
  if (family_ == Family::B) return rank_ * rank_;
  return std::nullopt;
}

std::string GroupSpec::to_string() const {
  return std::string(family_code(family_)) + " n=" + std::to_string(rank_);
}

std::optional<ClassDecomposition> decompose(const GroupSpec& spec, std::int64_t x) {
  const std::int64_t n = spec.rank();
  switch (spec.family()) {
    case Family::A:
      if (x < 1 || x > n) return std::nullopt;
      return ClassDecomposition{static_cast<int>(x), 1, 0};
    case Family::B:
      if (x == 0 || x < -n || x > n) return std::nullopt;
      if (x > 0) return ClassDecomposition{static_cast<int>(x), 1, 0};
      return ClassDecomposition{static_cast<int>(-x), -1, 0};
    case Family::AffineA: {
      const std::int64_t q = floor_div(x - 1, n);
      return ClassDecomposition{static_cast<int>(x - q * n), 1, q * n};
    }
    case Family::AffineC: {
      const std::int64_t mirror = n + 1;
      const std::int64_t p = 2 * mirror;
      if (floor_mod(x, mirror) == 0) return std::nullopt;
      const std::int64_t q = floor_div(x, p);
      const std::int64_t r = x - q * p;
      if (r < mirror) return ClassDecomposition{static_cast<int>(r), 1, q * p};
      return ClassDecomposition{static_cast<int>(p - r), -1, (q + 1) * p};
    }
  }
  return std::nullopt;
}

std::optional<int> symmetry_class(const GroupSpec& spec, std::int64_t i) {
  if (auto d = decompose(spec, i)) return d->representative;
  return std::nullopt;
}

std::vector<std::int64_t> unfrozen_positions(const GroupSpec& spec, std::int64_t lo,
                                             std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (!spec.is_frozen(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> sample_positions(const GroupSpec& spec, int periods) {
  const std::int64_t n = spec.rank();
  switch (spec.family()) {
    case Family::A: return unfrozen_positions(spec, 1, n);
    case Family::B: return unfrozen_positions(spec, -n, n);
    case Family::AffineA:
    case Family::AffineC: {
      const std::int64_t p = spec.period();
      const std::int64_t lo = 1 - (periods / 2) * p;
      return unfrozen_positions(spec, lo, lo + periods * p - 1);
    }
  }
  return {};
}

Element Element::identity(const GroupSpec& spec) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(spec.rank()));
  std::iota(w.begin(), w.end(), std::int64_t{1});
  return Element(spec, std::move(w));
}

Element Element::from_window(const GroupSpec& spec, std::vector<std::int64_t> window) {
  const std::int64_t n = spec.rank();
  if (static_cast<std::int64_t>(window.size()) != n) {
    throw WindowInvalid("wrong length: expected " + std::to_string(n) + " values, got " +
                        std::to_string(window.size()));
  }
  auto fail = [&](const std::string& why) {
    throw WindowInvalid(why + " in window " + format_window(window) + " for " + spec.to_string());
  };
  switch (spec.family()) {
    case Family::A:
    case Family::B: {
      std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
      for (std::int64_t v : window) {
        const std::int64_t a = spec.family() == Family::B ? std::llabs(v) : v;
        if (a < 1 || a > n) fail("value " + std::to_string(v) + " out of range");
        if (seen[a]) fail("duplicate value " + std::to_string(v));
        seen[a] = true;
      }
      break;
    }
    case Family::AffineA: {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::int64_t sum = 0;
      for (std::int64_t v : window) {
        const auto r = static_cast<std::size_t>(floor_mod(v, n));
        if (seen[r]) fail("duplicate residue of " + std::to_string(v) + " mod " + std::to_string(n));
        seen[r] = true;
        sum += v;
      }
      if (sum != n * (n + 1) / 2) {
        fail("wrong sum " + std::to_string(sum) + " (expected " + std::to_string(n * (n + 1) / 2) +
             ")");
      }
      break;
    }
    case Family::AffineC: {
      const std::int64_t mirror = n + 1;
      const std::int64_t p = 2 * mirror;
      std::vector<bool> seen(static_cast<std::size_t>(p), false);
      for (std::int64_t v : window) {
        if (floor_mod(v, mirror) == 0) fail("frozen value " + std::to_string(v) + " as image");
        for (std::int64_t s : {v, -v}) {
          const auto r = static_cast<std::size_t>(floor_mod(s, p));
          if (seen[r]) {
            fail("duplicate residue of " + std::to_string(s) + " mod " + std::to_string(p));
          }
          seen[r] = true;
        }
      }
      break;
    }
  }
  return Element(spec, std::move(window));
}

std::int64_t Element::apply(std::int64_t i) const noexcept {
  const auto d = decompose(spec_, i);
  if (!d) return i;
  return d->sign * window_[static_cast<std::size_t>(d->representative - 1)] + d->offset;
}

bool Element::is_identity() const noexcept {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<std::int64_t>(i) + 1) return false;
  }
  return true;
}

Element multiply(const Element& u, const Element& v) {
  if (!(u.spec_ == v.spec_)) {
    throw SpecMismatch("cannot multiply " + u.spec_.to_string() + " by " + v.spec_.to_string());
  }
  std::vector<std::int64_t> w(v.window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u.apply(v.window_[i]);
  return Element(u.spec_, std::move(w));
}

Element inverse(const Element& u) {
  std::vector<std::int64_t> w(u.window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto d = decompose(u.spec_, u.window_[i]);
    const auto pos = static_cast<std::int64_t>(i) + 1;
    w[static_cast<std::size_t>(d->representative - 1)] = d->sign * (pos - d->offset);
  }
  return Element(u.spec_, std::move(w));
}

Element simple_reflection(const GroupSpec& spec, int letter) {
  letter = spec.normalize_letter(letter);
  const int n = spec.rank();
  Element s = Element::identity(spec);
  auto& w = s.window_;
  if (letter >= 1 && letter <= n - 1) {
    std::swap(w[letter - 1], w[letter]);
  } else if (spec.family() == Family::AffineA) {  // s_0 = <(0 1)> = <(n n+1)>
    w[0] = 0;
    w[n - 1] = n + 1;
  } else if (letter == 0) {  // <(-1 1)>
    w[0] = -1;
  } else {  // affine C s_n = <(n n+2)>
    w[n - 1] = n + 2;
  }
  return s;
}

std::pair<std::int64_t, std::int64_t> transposed_pair(const GroupSpec& spec, int letter) {
  letter = spec.normalize_letter(letter);
  const int n = spec.rank();
  if (letter >= 1 && letter <= n - 1) return {letter, letter + 1};
  if (spec.family() == Family::AffineA) return {0, 1};
  if (letter == 0) return {-1, 1};
  return {n, n + 2};
}

bool is_mirror_transposition(const GroupSpec& spec, int letter) {
  letter = spec.normalize_letter(letter);
  if (spec.family() == Family::B) return letter == 0;
  if (spec.family() == Family::AffineC) return letter == 0 || letter == spec.rank();
  return false;
}

std::size_t WindowHash::operator()(std::span<const std::int64_t> w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : w) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::int64_t> parse_window(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw ParseError("cannot parse window entry '" + std::string(tok) + "' in '" +
                       std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string format_window(std::span<const std::int64_t> window) {
  std::string out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(window[i]);
  }
  return out;
}

}  // namespace coxlab
