#include <gtest/gtest.h>

#include <random>

#include "coxlab/coxlab.hpp"
#include "support/oracles.hpp"

namespace coxlab {
namespace {

using W = std::vector<std::int64_t>;

const GroupSpec kA3(Family::A, 3);
const GroupSpec kB2(Family::B, 2);
const GroupSpec kAffA2(Family::AffineA, 2);
const GroupSpec kAffA3(Family::AffineA, 3);
const GroupSpec kAffC1(Family::AffineC, 1);
const GroupSpec kAffC2(Family::AffineC, 2);

W win(const Element& e) { return W(e.window().begin(), e.window().end()); }

TEST(GroupSpec, RankLimits) {
  EXPECT_THROW(GroupSpec(Family::A, 0), InvalidSpec);
  EXPECT_THROW(GroupSpec(Family::B, 0), InvalidSpec);
  EXPECT_THROW(GroupSpec(Family::AffineA, 1), InvalidSpec);
  EXPECT_THROW(GroupSpec(Family::AffineC, 0), InvalidSpec);
  EXPECT_NO_THROW(GroupSpec(Family::AffineC, 1));
  EXPECT_NO_THROW(GroupSpec(Family::A, 1));
}

TEST(GroupSpec, Nondegenerate) {
  EXPECT_TRUE(kA3.is_nondegenerate());
  EXPECT_TRUE(kAffA3.is_nondegenerate());
  EXPECT_FALSE(kAffA2.is_nondegenerate());
  EXPECT_FALSE(kAffC1.is_nondegenerate());
  EXPECT_TRUE(kAffC2.is_nondegenerate());
}

TEST(GroupSpec, Alphabets) {
  EXPECT_EQ(kA3.alphabet(), (std::vector<int>{1, 2}));
  EXPECT_EQ(kB2.alphabet(), (std::vector<int>{0, 1}));
  EXPECT_EQ(kAffA3.alphabet(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(kAffC2.alphabet(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(kAffA3.normalize_letter(3), 0);
  EXPECT_THROW(kA3.normalize_letter(0), LetterOutOfAlphabet);
  EXPECT_THROW(kB2.normalize_letter(2), LetterOutOfAlphabet);
}

TEST(GroupSpec, FamilyCodes) {
  for (Family f : {Family::A, Family::B, Family::AffineA, Family::AffineC}) {
    EXPECT_EQ(parse_family(family_code(f)), f);
  }
  EXPECT_THROW(parse_family("x"), ParseError);
}

TEST(GroupSpec, FrozenIntegers) {
  EXPECT_TRUE(kB2.is_frozen(0));
  EXPECT_TRUE(kB2.is_frozen(3));
  EXPECT_FALSE(kB2.is_frozen(-2));
  EXPECT_TRUE(kAffC2.is_frozen(0));
  EXPECT_TRUE(kAffC2.is_frozen(3));
  EXPECT_TRUE(kAffC2.is_frozen(-6));
  EXPECT_FALSE(kAffC2.is_frozen(4));
  EXPECT_FALSE(kAffA2.is_frozen(0));
  EXPECT_TRUE(kA3.is_frozen(0));
  EXPECT_TRUE(kA3.is_frozen(4));
}

TEST(Element, WindowValidation) {
  EXPECT_NO_THROW(Element::from_window(kA3, {3, 1, 2}));
  EXPECT_THROW(Element::from_window(kA3, {1, 1, 2}), WindowInvalid);
  EXPECT_THROW(Element::from_window(kA3, {1, 2}), WindowInvalid);
  EXPECT_THROW(Element::from_window(kA3, {0, 1, 2}), WindowInvalid);
  EXPECT_NO_THROW(Element::from_window(kB2, {-1, -2}));
  EXPECT_THROW(Element::from_window(kB2, {1, -1}), WindowInvalid);
  EXPECT_THROW(Element::from_window(kB2, {0, 1}), WindowInvalid);
  EXPECT_NO_THROW(Element::from_window(kAffA2, {0, 3}));
  EXPECT_THROW(Element::from_window(kAffA2, {1, 3}), WindowInvalid);  // residues collide
  EXPECT_THROW(Element::from_window(kAffA2, {-1, 3}), WindowInvalid);  // wrong sum
  EXPECT_NO_THROW(Element::from_window(kAffC2, {1, 4}));
  EXPECT_NO_THROW(Element::from_window(kAffC2, {5, 2}));
  EXPECT_THROW(Element::from_window(kAffC2, {3, 1}), WindowInvalid);  // frozen value
  EXPECT_THROW(Element::from_window(kAffC2, {1, -1}), WindowInvalid);
}

TEST(Element, ApplyOutsideWindow) {
  const Element b = Element::from_window(kB2, {-1, -2});
  EXPECT_EQ(b.apply(-1), 1);
  EXPECT_EQ(b.apply(-2), 2);
  EXPECT_EQ(b.apply(0), 0);
  EXPECT_EQ(b.apply(7), 7);

  const Element a = Element::from_window(kAffA2, {0, 3});
  EXPECT_EQ(a.apply(3), 2);
  EXPECT_EQ(a.apply(4), 5);
  EXPECT_EQ(a.apply(-1), -2);

  const Element c = simple_reflection(kAffC2, 2);  // (1,4)
  EXPECT_EQ(c.apply(2), 4);
  EXPECT_EQ(c.apply(4), 2);
  EXPECT_EQ(c.apply(3), 3);
  EXPECT_EQ(c.apply(8), 10);
  EXPECT_EQ(c.apply(-2), -4);
  EXPECT_EQ(c.apply(5), 5);
}

TEST(Element, MultiplyExample) {
  const Element s0 = simple_reflection(kB2, 0), s1 = simple_reflection(kB2, 1);
  EXPECT_EQ(win(s0 * s1 * s0), (W{-2, -1}));
  EXPECT_EQ(win(s1 * s0 * s1), (W{1, -2}));
  EXPECT_EQ(win(s0), (W{-1, 2}));
  EXPECT_EQ(win(s1), (W{2, 1}));
}

TEST(Element, SimpleReflections) {
  EXPECT_EQ(win(simple_reflection(kAffC2, 0)), (W{-1, 2}));
  EXPECT_EQ(win(simple_reflection(kAffC2, 2)), (W{1, 4}));
  EXPECT_EQ(win(simple_reflection(kAffA3, 0)), (W{0, 2, 4}));
  EXPECT_EQ(win(simple_reflection(kAffA3, 3)), (W{0, 2, 4}));
  EXPECT_EQ(win(simple_reflection(kAffC1, 1)), (W{3}));
  EXPECT_EQ(win(simple_reflection(kAffA2, 0)), (W{0, 3}));
  EXPECT_THROW(simple_reflection(kA3, 3), LetterOutOfAlphabet);
}

TEST(Element, TransposedPairs) {
  EXPECT_EQ(transposed_pair(kA3, 2), (std::pair<std::int64_t, std::int64_t>{2, 3}));
  EXPECT_EQ(transposed_pair(kB2, 0), (std::pair<std::int64_t, std::int64_t>{-1, 1}));
  EXPECT_EQ(transposed_pair(kAffC2, 2), (std::pair<std::int64_t, std::int64_t>{2, 4}));
  EXPECT_EQ(transposed_pair(kAffA3, 0), (std::pair<std::int64_t, std::int64_t>{0, 1}));
  EXPECT_TRUE(is_mirror_transposition(kB2, 0));
  EXPECT_TRUE(is_mirror_transposition(kAffC2, 2));
  EXPECT_FALSE(is_mirror_transposition(kAffC2, 1));
  EXPECT_FALSE(is_mirror_transposition(kAffA3, 0));
}

TEST(Element, SpecMismatch) {
  EXPECT_THROW(Element::identity(kA3) * Element::identity(kB2), SpecMismatch);
}

TEST(Element, Inverse) {
  const Element w = Element::from_window(kAffC2, {5, 2});
  EXPECT_TRUE((w * inverse(w)).is_identity());
  const Element u = Element::from_window(kA3, {3, 1, 2});
  EXPECT_EQ(win(inverse(u)), (W{2, 3, 1}));
}

TEST(Decompose, Classes) {
  EXPECT_EQ(symmetry_class(kB2, -2), 2);
  EXPECT_EQ(symmetry_class(kB2, 0), std::nullopt);
  EXPECT_EQ(symmetry_class(kAffA3, 7), 1);
  EXPECT_EQ(symmetry_class(kAffA3, 0), 3);
  EXPECT_EQ(symmetry_class(kAffC2, 4), 2);
  EXPECT_EQ(symmetry_class(kAffC2, 5), 1);
  EXPECT_EQ(symmetry_class(kAffC2, -4), 2);
  EXPECT_EQ(symmetry_class(kAffC2, 6), std::nullopt);
  for (std::int64_t x = -20; x <= 20; ++x) {
    const auto d = decompose(kAffC2, x);
    if (!d) continue;
    EXPECT_EQ(d->sign * d->representative + d->offset, x);
  }
}

TEST(Text, WindowRoundTrip) {
  EXPECT_EQ(parse_window("-1,-2"), (W{-1, -2}));
  EXPECT_EQ(parse_window(" 3, 1 ,2"), (W{3, 1, 2}));
  EXPECT_EQ(format_window(W{-1, -2}), "-1,-2");
  EXPECT_THROW(parse_window("1,,2"), ParseError);
  EXPECT_THROW(parse_window("a"), ParseError);
  EXPECT_THROW(parse_window(""), ParseError);
}

// Property checks over random words.
class RandomElements : public ::testing::TestWithParam<GroupSpec> {};

Element random_element(const GroupSpec& spec, std::mt19937& rng, int len) {
  const auto alphabet = spec.alphabet();
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Element e = Element::identity(spec);
  for (int i = 0; i < len; ++i) e = e * simple_reflection(spec, alphabet[pick(rng)]);
  return e;
}

TEST_P(RandomElements, SymmetriesAndGroupLaws) {
  const GroupSpec spec = GetParam();
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Element u = random_element(spec, rng, 12);
    const Element v = random_element(spec, rng, 12);
    const Element x = random_element(spec, rng, 12);
    EXPECT_EQ((u * v) * x, u * (v * x));
    EXPECT_TRUE((u * inverse(u)).is_identity());
    EXPECT_TRUE((inverse(u) * u).is_identity());
    const std::int64_t n = spec.rank();
    std::set<std::int64_t> image;
    const auto [lo, hi] = oracle::five_period_range(spec);
    for (std::int64_t i = lo; i <= hi; ++i) {
      const std::int64_t wi = u.apply(i);
      if (spec.is_frozen(i)) {
        EXPECT_EQ(wi, i);
        continue;
      }
      EXPECT_FALSE(spec.is_frozen(wi));
      image.insert(wi);
      if (spec.family() == Family::AffineA) EXPECT_EQ(u.apply(i + n), wi + n);
      if (spec.family() == Family::AffineC) {
        EXPECT_EQ(u.apply(i + 2 * (n + 1)), wi + 2 * (n + 1));
        EXPECT_EQ(u.apply(-i), -wi);
      }
      if (spec.family() == Family::B) EXPECT_EQ(u.apply(-i), -wi);
      EXPECT_EQ(inverse(u).apply(wi), i);
    }
    if (!spec.is_affine()) {
      EXPECT_EQ(image.size(), static_cast<std::size_t>(spec.family() == Family::A ? n : 2 * n));
    }
    if (spec.family() == Family::AffineA) {
      std::int64_t sum = 0;
      for (std::int64_t y : u.window()) sum += y;
      EXPECT_EQ(sum, n * (n + 1) / 2);
    }
  }
  for (int s : spec.alphabet()) {
    const Element r = simple_reflection(spec, s);
    EXPECT_TRUE((r * r).is_identity());
    const auto [a, b] = transposed_pair(spec, s);
    EXPECT_EQ(r.apply(a), b);
    EXPECT_EQ(r.apply(b), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Families, RandomElements,
                         ::testing::Values(GroupSpec(Family::A, 5), GroupSpec(Family::B, 4),
                                           GroupSpec(Family::AffineA, 2),
                                           GroupSpec(Family::AffineA, 4),
                                           GroupSpec(Family::AffineC, 1),
                                           GroupSpec(Family::AffineC, 3)));

}  // namespace
}  // namespace coxlab
