#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "common.hpp"

using namespace alcove;

namespace {

// Every element of length <= maxlen, reached from Omega by right multiplication with s_0..s_n.
std::set<ExtAffElt> ball(const AffineWeyl& W, int maxlen) {
  std::set<ExtAffElt> seen(W.omega_group().begin(), W.omega_group().end());
  std::deque<std::pair<ExtAffElt, int>> q;
  for (auto& g : W.omega_group()) q.push_back({g, 0});
  while (!q.empty()) {
    auto [x, d] = q.front();
    q.pop_front();
    if (d == maxlen) continue;
    for (int i = 0; i <= W.rank(); ++i) {
      ExtAffElt y = W.mult(x, W.s(i));
      if (seen.insert(y).second) q.push_back({y, d + 1});
    }
  }
  return seen;
}

}  // namespace

TEST(AffineWeyl, ClosedFormLengthMatchesHyperplaneCountC2) {
  AffineWeyl W(RootDatum('C', 2));
  auto B = ball(W, 12);
  int counted = 0;
  for (auto& x : B) {
    int l = W.length(x);
    if (l > 12) continue;
    ++counted;
    EXPECT_EQ(l, W.length_oracle(x));
  }
  EXPECT_EQ(counted, static_cast<int>(B.size()));
  EXPECT_GT(counted, 400);
}

TEST(AffineWeyl, LengthsOfTranslationsAndCosetExtremesC2) {
  AffineWeyl W(RootDatum('C', 2));
  Weight l{0, 2};
  EXPECT_EQ(W.length(W.translation(l)), 6);
  auto [m, n] = W.double_coset_extremes(l);
  EXPECT_EQ(W.length(m), 3);
  EXPECT_EQ(W.length(n), 10);
  EXPECT_EQ(W.double_coset(l).size(), 32u);
}

TEST(AffineWeyl, ReducedExpressionsRoundTrip) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}) {
    AffineWeyl W(RootDatum(f, n));
    const RootDatum& R = W.datum();
    for (auto& mu : testutil::box(n, -2, 2))
      for (auto& w : R.weyl_group()) {
        ExtAffElt x{mu, w};
        for (bool lf : {false, true}) {
          AffineWord rw = W.reduced_expression(x, lf);
          EXPECT_EQ(W.word_to_elt(rw), x);
          EXPECT_EQ(static_cast<int>(rw.letters.size()), W.length(x));
        }
      }
  }
}

TEST(AffineWeyl, SimpleReflectionsAreInvolutionsOfLengthOne) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'C', 2}, {'G', 2}}) {
    AffineWeyl W(RootDatum(f, n));
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(W.length(W.s(i)), 1);
      EXPECT_EQ(W.mult(W.s(i), W.s(i)), W.identity());
    }
  }
}

TEST(AffineWeyl, OmegaIsLengthZeroAndPermutesGenerators) {
  for (auto [f, n, order] : std::vector<std::tuple<char, int, std::size_t>>{
           {'A', 1, 2}, {'A', 2, 3}, {'A', 3, 4}, {'C', 2, 2}, {'B', 3, 2}, {'G', 2, 1}, {'D', 4, 4}}) {
    AffineWeyl W(RootDatum(f, n));
    EXPECT_EQ(W.omega_group().size(), order) << f << n;
    for (std::size_t g = 0; g < W.omega_group().size(); ++g) {
      const ExtAffElt& x = W.omega_group()[g];
      EXPECT_EQ(W.length(x), 0);
      for (int i = 0; i <= n; ++i)
        EXPECT_EQ(W.mult(W.mult(x, W.s(i)), W.inv(x)), W.s(W.omega_perm(static_cast<int>(g))[i]));
    }
  }
}

TEST(AffineWeyl, LengthAdditivityForDominantTranslations) {
  AffineWeyl W(RootDatum('C', 2));
  for (auto& a : testutil::dominant_box(2, 2))
    for (auto& b : testutil::dominant_box(2, 2))
      EXPECT_EQ(W.length(W.translation(a + b)), W.length(W.translation(a)) + W.length(W.translation(b)));
}
