// Copyright 2026 The mpha Authors
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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mpha/mpa.hpp"

namespace mpha {
namespace {

const ExtendedWeight e = kEps;

MaxPlusAutomaton TwoSymbol() {
  return MaxPlusAutomaton({"1", "2", "3"}, {"a", "b"}, {0, e, e},
                          {{"a", {{e, 1, 3}, {e, e, 4}, {e, e, e}}},
                           {"b", {{e, e, e}, {2, 1, e}, {7, 5, 1}}}},
                          {2, e, e});
}

// Maximum over all state paths of alpha(s0) + weights + beta(sk).
ExtendedWeight PathOracle(const MaxPlusAutomaton& a, const Word& w) {
  const std::size_t n = a.num_states();
  ExtendedWeight best = kEps;
  std::vector<std::size_t> path(w.size() + 1, 0);
  for (;;) {
    ExtendedWeight total = a.alpha()[path[0]];
    for (std::size_t k = 0; k < w.size(); ++k)
      total = otimes(total, a.mu(w[k])(path[k], path[k + 1]));
    total = otimes(total, a.beta()[path.back()]);
    best = oplus(best, total);
    std::size_t pos = 0;
    while (pos < path.size() && ++path[pos] == n) path[pos++] = 0;
    if (pos == path.size()) break;
  }
  return best;
}

TEST(MpaTest, StateExamples) {
  const auto a = TwoSymbol();
  EXPECT_EQ(eval_state(a, {"a"}), (Vector{e, 1, 3}));
  EXPECT_EQ(eval_state(a, {"a", "b"}), (Vector{10, 8, 4}));
  EXPECT_EQ(eval_state(a, {}), (Vector{0, e, e}));
  EXPECT_EQ(eval_state(a, {"a", "a", "b"}), (Vector{12, 10, 6}));
}

TEST(MpaTest, OutputExamples) {
  const auto a = TwoSymbol();
  EXPECT_EQ(eval_output(a, {"a", "b"}), ExtendedWeight(12));
  EXPECT_EQ(eval_output(a, {"a", "a", "b"}), ExtendedWeight(14));
  EXPECT_TRUE(eval_output(a, {"b"}).is_epsilon());
  EXPECT_TRUE(accepts(a, {"a", "b"}));
  EXPECT_TRUE(accepts(a, {"a", "a", "b"}));
  EXPECT_FALSE(accepts(a, {"b"}));
  EXPECT_FALSE(accepts(a, {"a", "a", "a"}));
  EXPECT_TRUE(is_all_epsilon(mat_power(a.mu("a"), 3)));
  EXPECT_THROW(eval_output(a, {"c"}), ModelError);
}

TEST(MpaTest, ConstructionChecks) {
  EXPECT_THROW(MaxPlusAutomaton({"1"}, {"a"}, {e}, {{"a", {{0}}}}, {0}), ModelError);
  EXPECT_THROW(MaxPlusAutomaton({"1"}, {"a"}, {0}, {{"a", {{kTop}}}}, {0}), ModelError);
  EXPECT_THROW(MaxPlusAutomaton({"1"}, {"a"}, {0}, {{"a", {{0, 0}}}}, {0}), ModelError);
  EXPECT_THROW(MaxPlusAutomaton({"1"}, {"a", "b"}, {0}, {{"a", {{0}}}}, {0}), ModelError);
}

TEST(MpaTest, LanguageUpToThree) {
  const auto a = TwoSymbol();
  const Language l = language_upto(a, 3);
  for (const Word& w : {Word{"a", "b"}, Word{"a", "a", "b"}, Word{"a", "b", "b"}})
    EXPECT_TRUE(l.count(w)) << to_string(w);
  for (const Word& w : {Word{"a"}, Word{"b"}, Word{"a", "a"}, Word{"b", "b"},
                        Word{"a", "a", "a"}})
    EXPECT_FALSE(l.count(w)) << to_string(w);
  EXPECT_EQ(language_upto(a, 0), (Language{Word{}}));
}

TEST(MpaTest, EmptyWordNeedsInitialFinalOverlap) {
  const MaxPlusAutomaton a({"1", "2"}, {"a"}, {0, e}, {{"a", {{e, 0}, {e, e}}}}, {e, 0});
  EXPECT_TRUE(language_upto(a, 0).empty());
  EXPECT_EQ(language_upto(a, 3), (Language{Word{"a"}}));
  const MaxPlusAutomaton none({"1"}, {"a"}, {0}, {{"a", {{0}}}}, {e});
  EXPECT_TRUE(language_upto(none, 4).empty());
}

TEST(MpaTest, FiniteAbstractionOfTwoSymbolAutomaton) {
  const FiniteAutomaton fa = to_finite_abstraction(TwoSymbol());
  EXPECT_EQ(fa.initial(), (std::set<std::size_t>{0}));
  EXPECT_EQ(fa.final_states(), (std::set<std::size_t>{0}));
  const std::size_t a = fa.symbol_index("a"), b = fa.symbol_index("b");
  EXPECT_EQ(fa.successors(0, a), (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(fa.successors(1, a), (std::set<std::size_t>{2}));
  EXPECT_TRUE(fa.successors(2, a).empty());
  EXPECT_TRUE(fa.successors(0, b).empty());
  EXPECT_EQ(fa.successors(1, b), (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(fa.successors(2, b), (std::set<std::size_t>{0, 1, 2}));
  EXPECT_EQ(fa.num_transitions(), 8u);
}

TEST(MpaTest, AllEpsilonMuHasNoTransitions) {
  const MaxPlusAutomaton a({"1", "2"}, {"a"}, {0, e},
                           {{"a", TropicalMatrix::epsilon(2, 2)}}, {0, 0});
  EXPECT_EQ(to_finite_abstraction(a).num_transitions(), 0u);
}

TEST(MpaTest, RecursionMatchesPathOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_mpa(3, {"a", "b"}, rng, 0.4);
    for (std::size_t len = 0; len <= 5; ++len)
      for (const auto& w : words_of_length(a.alphabet(), len))
        ASSERT_EQ(eval_output(a, w), PathOracle(a, w)) << to_string(w);
  }
  const auto g = TwoSymbol();
  for (std::size_t len = 0; len <= 5; ++len)
    for (const auto& w : words_of_length(g.alphabet(), len))
      ASSERT_EQ(eval_output(g, w), PathOracle(g, w)) << to_string(w);
}

TEST(MpaTest, AcceptsMatchesBoundedLanguage) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_mpa(3, {"a", "b"}, rng);
    const Language l = language_upto(a, 6);
    for (std::size_t len = 0; len <= 6; ++len)
      for (const auto& w : words_of_length(a.alphabet(), len))
        ASSERT_EQ(accepts(a, w), l.count(w) > 0);
  }
}

TEST(MpaTest, AbstractionHasTheSameLanguage) {
  std::mt19937_64 rng(23);
  std::vector<MaxPlusAutomaton> autos{TwoSymbol()};
  for (int i = 0; i < 10; ++i) autos.push_back(random_mpa(4, {"a", "b", "c"}, rng, 0.6));
  for (const auto& a : autos) {
    const FiniteAutomaton fa = to_finite_abstraction(a);
    for (std::size_t len = 0; len <= 6; ++len)
      for (const auto& w : words_of_length(a.alphabet(), len))
        ASSERT_EQ(accepts(a, w), fa.accepts(w)) << to_string(w);
  }
}

TEST(MpaTest, MonoidProperty) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_mpa(3, {"a", "b"}, rng, 0.3);
    Word w1, w2;
    for (std::size_t k = len(rng); k > 0; --k) w1.push_back(rng() % 2 ? "a" : "b");
    for (std::size_t k = len(rng); k > 0; --k) w2.push_back(rng() % 2 ? "a" : "b");
    Word w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    ASSERT_EQ(eval_state(a, w), otimes(eval_state(a, w1), word_matrix(a, w2)));
  }
}

TEST(WordTest, PrintAndParse) {
  EXPECT_EQ(to_string(Word{"a", "b"}), "ab");
  EXPECT_EQ(to_string(Word{"go", "hold"}), "go,hold");
  EXPECT_EQ(parse_word("aab", {"a", "b"}), (Word{"a", "a", "b"}));
  EXPECT_EQ(parse_word("go,hold", {"go", "hold"}), (Word{"go", "hold"}));
  EXPECT_EQ(parse_word("go", {"go", "hold"}), (Word{"go"}));
  EXPECT_THROW(parse_word("ac", {"a", "b"}), ModelError);
  EXPECT_EQ(words_of_length({"a", "b"}, 3).size(), 8u);
}

}  // namespace
}  // namespace mpha
