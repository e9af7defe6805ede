#include "coxlab/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace coxlab {

namespace {

// Reads letters of a reduced word from right to left; `step` returns
// false when the word read so far must be rejected.
class SuffixAutomaton {
 public:
  virtual ~SuffixAutomaton() = default;
  virtual std::vector<std::int64_t> initial() const = 0;
  virtual bool step(std::vector<std::int64_t>& state, int letter) const = 0;
};

struct StateKey {
  std::vector<std::int64_t> data;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept { return WindowHash{}(k.data); }
};

class RejectionSearch {
 public:
  explicit RejectionSearch(const SuffixAutomaton& automaton) : automaton_(automaton) {}

  bool rejects(const Element& u, const std::vector<std::int64_t>& state) {
    if (u.is_identity()) return false;
    StateKey key;
    key.data.assign(u.window().begin(), u.window().end());
    key.data.insert(key.data.end(), state.begin(), state.end());
    if (!visited_.insert(std::move(key)).second) return false;
    for (int letter : right_descents(u).letters) {
      auto next = state;
      if (!automaton_.step(next, letter)) return true;
      if (rejects(right_multiply(u, letter), next)) return true;
    }
    return false;
  }

 private:
  const SuffixAutomaton& automaton_;
  std::unordered_set<StateKey, StateKeyHash> visited_;
};

// Remembers the last (k-1) letters; rejects when a reversed factor ends
// at the current letter.
class FactorAutomaton final : public SuffixAutomaton {
 public:
  explicit FactorAutomaton(std::span<const Word> factors) {
    for (const Word& f : factors) {
      if (f.empty()) continue;
      reversed_.emplace_back(f.rbegin(), f.rend());
      memory_ = std::max(memory_, f.size() - 1);
    }
  }

  std::vector<std::int64_t> initial() const override { return {}; }

  bool step(std::vector<std::int64_t>& state, int letter) const override {
    state.push_back(letter);
    for (const Word& f : reversed_) {
      if (f.size() > state.size()) continue;
      if (std::equal(f.begin(), f.end(), state.end() - static_cast<std::ptrdiff_t>(f.size()))) {
        return false;
      }
    }
    if (state.size() > memory_) state.erase(state.begin());
    return true;
  }

 private:
  std::vector<Word> reversed_;
  std::size_t memory_ = 0;
};

// Per i in [n-1]: {seen s_i, seen s_{i-1} since, seen s_{i+1} since}.
class SeparationAutomaton final : public SuffixAutomaton {
 public:
  explicit SeparationAutomaton(const GroupSpec& spec) {
    for (int i = 1; i <= spec.rank() - 1; ++i) {
      Slot slot;
      slot.letter = *spec.generator_letter(i);
      slot.left = spec.generator_letter(i - 1);
      slot.right = spec.generator_letter(i + 1);
      slots_.push_back(slot);
    }
  }

  std::vector<std::int64_t> initial() const override {
    return std::vector<std::int64_t>(slots_.size(), 0);
  }

  bool step(std::vector<std::int64_t>& state, int letter) const override {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      const Slot& slot = slots_[k];
      std::int64_t& bits = state[k];
      if (letter == slot.letter) {
        if ((bits & kSeen) && !((bits & kLeft) && (bits & kRight))) return false;
        bits = kSeen;
        continue;
      }
      if (!(bits & kSeen)) continue;
      if (slot.left && letter == *slot.left) bits |= kLeft;
      if (slot.right && letter == *slot.right) bits |= kRight;
    }
    return true;
  }

 private:
  static constexpr std::int64_t kSeen = 1, kLeft = 2, kRight = 4;
  struct Slot {
    int letter = 0;
    std::optional<int> left, right;
  };
  std::vector<Slot> slots_;
};

bool all_reduced_words_accepted(const Element& w, const SuffixAutomaton& automaton) {
  RejectionSearch search(automaton);
  return !search.rejects(w, automaton.initial());
}

void collect_words(const Element& u, Word& suffix, std::vector<Word>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (u.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int letter : right_descents(u).letters) {
    suffix.push_back(letter);
    collect_words(right_multiply(u, letter), suffix, out, limit);
    suffix.pop_back();
    if (out.size() >= limit) return;
  }
}

std::uint64_t count_words(const Element& u,
                          std::unordered_map<Element, std::uint64_t, ElementHash>& memo) {
  if (u.is_identity()) return 1;
  if (auto it = memo.find(u); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int letter : right_descents(u).letters) {
    const std::uint64_t c = count_words(right_multiply(u, letter), memo);
    total = c > std::numeric_limits<std::uint64_t>::max() - total
                ? std::numeric_limits<std::uint64_t>::max()
                : total + c;
  }
  memo.emplace(u, total);
  return total;
}

}  // namespace

int coxeter_m(const GroupSpec& spec, int a, int b) {
  a = spec.normalize_letter(a);
  b = spec.normalize_letter(b);
  if (a == b) return 1;
  if (a > b) std::swap(a, b);
  const int n = spec.rank();
  switch (spec.family()) {
    case Family::A: return b - a == 1 ? 3 : 2;
    case Family::B:
      if (a == 0 && b == 1) return 4;
      return b - a == 1 ? 3 : 2;
    case Family::AffineA:
      if (n == 2) return kInfiniteOrder;
      return (b - a == 1 || (a == 0 && b == n - 1)) ? 3 : 2;
    case Family::AffineC:
      if (n == 1) return kInfiniteOrder;
      if (b - a != 1) return 2;
      return (a == 0 || b == n) ? 4 : 3;
  }
  return 2;
}

bool DescentSet::contains(int letter) const noexcept {
  return std::binary_search(letters.begin(), letters.end(), letter);
}

bool is_right_descent(const Element& w, int letter) {
  const auto [a, b] = transposed_pair(w.spec(), letter);
  return w.apply(a) > w.apply(b);
}

DescentSet right_descents(const Element& w) {
  DescentSet d;
  for (int letter : w.spec().alphabet()) {
    if (is_right_descent(w, letter)) d.letters.push_back(letter);
  }
  return d;
}

Element right_multiply(const Element& w, int letter) {
  return multiply(w, simple_reflection(w.spec(), letter));
}

int coxeter_length(const Element& w) {
  Element u = w;
  int length = 0;
  const auto alphabet = w.spec().alphabet();
  for (;;) {
    auto it = std::find_if(alphabet.begin(), alphabet.end(),
                           [&](int letter) { return is_right_descent(u, letter); });
    if (it == alphabet.end()) break;
    u = right_multiply(u, *it);
    ++length;
  }
  return length;
}

Element word_to_element(const GroupSpec& spec, std::span<const int> word) {
  Element w = Element::identity(spec);
  for (int letter : word) w = right_multiply(w, letter);
  return w;
}

bool is_reduced(const GroupSpec& spec, std::span<const int> word) {
  return coxeter_length(word_to_element(spec, word)) == static_cast<int>(word.size());
}

ReducedWords reduced_words(const Element& w, std::optional<std::size_t> cap,
                           bool require_complete) {
  ReducedWords result;
  const std::size_t limit =
      cap ? *cap + 1 : std::numeric_limits<std::size_t>::max();
  Word suffix;
  collect_words(w, suffix, result.words, limit);
  if (cap && result.words.size() > *cap) {
    if (require_complete) {
      throw CapExceeded("element " + format_window(w) + " has more than " +
                        std::to_string(*cap) + " reduced words");
    }
    result.words.resize(*cap);
    result.truncated = true;
  }
  std::sort(result.words.begin(), result.words.end());
  result.words.erase(std::unique(result.words.begin(), result.words.end()), result.words.end());
  return result;
}

std::uint64_t reduced_word_count(const Element& w) {
  std::unordered_map<Element, std::uint64_t, ElementHash> memo;
  return count_words(w, memo);
}

bool some_reduced_word_contains(const Element& w, std::span<const Word> factors) {
  FactorAutomaton automaton(factors);
  return !all_reduced_words_accepted(w, automaton);
}

std::vector<Word> braid_factors(const GroupSpec& spec) {
  std::vector<Word> out;
  for (int i = 1; i <= spec.rank() - 1; ++i) {
    const int x = *spec.generator_letter(i);
    for (int j : {i - 1, i + 1}) {
      if (auto y = spec.generator_letter(j); y && *y != x) out.push_back({x, *y, x});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> long_braid_factors(const GroupSpec& spec) {
  std::vector<Word> out;
  for (int s : spec.alphabet()) {
    for (int t : spec.alphabet()) {
      if (s == t) continue;
      const int m = coxeter_m(spec, s, t);
      if (m == kInfiniteOrder || m < 3) continue;
      Word f;
      for (int k = 0; k < m; ++k) f.push_back(k % 2 == 0 ? s : t);
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool condition_B(const Element& w) {
  SeparationAutomaton automaton(w.spec());
  return all_reduced_words_accepted(w, automaton);
}

bool condition_Bprime(const Element& w) {
  const auto factors = braid_factors(w.spec());
  return !some_reduced_word_contains(w, factors);
}

bool is_fully_commutative(const Element& w) {
  const auto factors = long_braid_factors(w.spec());
  return !some_reduced_word_contains(w, factors);
}

Word parse_word(const GroupSpec& spec, std::string_view text) {
  Word out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw ParseError("cannot parse word letter '" + std::string(tok) + "'");
    }
    out.push_back(spec.normalize_letter(v));
    pos = end;
  }
  return out;
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace coxlab
