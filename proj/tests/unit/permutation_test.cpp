// Copyright 2026 The fsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <gtest/gtest.h>

#include "fsgraph/permutation.hpp"

namespace fsg {
namespace {

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  }
  return count;
}

TEST(PermutationTest, FromImagesValidates) {
  EXPECT_NO_THROW(Permutation::from_images({2, 0, 1}));
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), InvalidArgument);
  std::vector<int> big(21);
  std::iota(big.begin(), big.end(), 0);
  EXPECT_THROW(Permutation::from_images(big), InvalidArgument);
}

TEST(PermutationTest, ComposeAndInverse) {
  const Permutation s = Permutation::from_images({1, 2, 0, 3});
  const Permutation p = Permutation::from_images({3, 1, 0, 2});
  const Permutation sp = compose(s, p);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(sp[i], s[p[i]]);
  EXPECT_EQ(compose(s, s.inverse()), Permutation::identity(4));
  EXPECT_EQ(compose(s.inverse(), s), Permutation::identity(4));
  EXPECT_EQ(s.position_of(0), 2);
}

TEST(PermutationTest, SwappedIsRightMultiplicationByTransposition) {
  const Permutation s = Permutation::from_images({4, 2, 0, 3, 1});
  EXPECT_EQ(s.swapped(1, 3), compose(s, transposition(5, 1, 3)));
  EXPECT_EQ(apply_transposition(s, 0, 4), compose(s, transposition(5, 0, 4)));
  EXPECT_THROW(transposition(5, 2, 2), InvalidArgument);
}

TEST(PermutationTest, SignMatchesInversionParity) {
  for (std::uint64_t r = 0; r < factorial(6); ++r) {
    const Permutation p = unrank(6, r);
    EXPECT_EQ(sign(p), inversions(p) % 2 == 0 ? 1 : -1);
  }
}

TEST(PermutationTest, RankIsLexicographicIndex) {
  std::vector<int> v(6);
  std::iota(v.begin(), v.end(), 0);
  std::uint64_t expected = 0;
  do {
    const Permutation p = Permutation::from_images(v);
    EXPECT_EQ(rank(p), expected);
    EXPECT_EQ(unrank(6, expected), p);
    ++expected;
  } while (std::next_permutation(v.begin(), v.end()));
  EXPECT_EQ(expected, factorial(6));
  EXPECT_THROW(unrank(4, 24), InvalidArgument);
}

TEST(PermutationTest, OrderingIsLexicographic) {
  for (std::uint64_t r = 0; r + 1 < factorial(5); ++r) EXPECT_LT(unrank(5, r), unrank(5, r + 1));
}

TEST(PermutationTest, CyclicShiftRotatesTheWord) {
  const Permutation s = parse_permutation("31524");
  EXPECT_EQ(to_string(cyclic_shift(s)), "15243");
  EXPECT_EQ(to_string(cyclic_shift(Permutation::identity(5))), "23451");
  for (int n = 1; n <= 8; ++n) {
    Permutation u = cyclic_shift(Permutation::identity(n));
    int order = 1;
    while (u != Permutation::identity(n)) {
      u = cyclic_shift(u);
      ++order;
    }
    EXPECT_EQ(order, n);
  }
  Permutation t = s;
  for (int i = 0; i < 5; ++i) t = cyclic_shift(t);
  EXPECT_EQ(t, s);
}

TEST(PermutationTest, TextRoundTrip) {
  EXPECT_EQ(to_string(parse_permutation("12354")), "12354");
  const Permutation ten = parse_permutation("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(ten.size(), 10);
  EXPECT_EQ(ten[0], 9);
  EXPECT_EQ(to_string(ten), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_THROW(parse_permutation("1a3"), InvalidArgument);
  EXPECT_THROW(parse_permutation("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_permutation("112"), InvalidArgument);
  EXPECT_THROW(parse_permutation(""), InvalidArgument);
}

TEST(PermutationTest, HashSeparatesAllPermutationsOfSix) {
  std::unordered_set<std::size_t> hashes;
  for (std::uint64_t r = 0; r < factorial(6); ++r) hashes.insert(std::hash<Permutation>{}(unrank(6, r)));
  EXPECT_EQ(hashes.size(), factorial(6));
}

}  // namespace
}  // namespace fsg
