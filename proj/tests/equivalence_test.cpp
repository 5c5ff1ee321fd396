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

#include "mpha/equivalence.hpp"

namespace mpha {
namespace {

const ExtendedWeight e = kEps;

MaxPlusAutomaton TwoSymbol() {
  return MaxPlusAutomaton({"1", "2", "3"}, {"a", "b"}, {0, e, e},
                          {{"a", {{e, 1, 3}, {e, e, 4}, {e, e, e}}},
                           {"b", {{e, e, e}, {2, 1, e}, {7, 5, 1}}}},
                          {2, e, e});
}

FiniteAutomaton Fused(const MaxPlusAutomaton& a) {
  return specialized_abstraction_for_mpa_translation(from_smpl_open(from_mpa(a)));
}

// a.(b + c): one a-move then a choice.
FiniteAutomaton LateChoice() {
  FiniteAutomaton fa({"a", "b", "c"});
  for (const char* s : {"0", "1", "2"}) fa.add_state(s);
  fa.add_transition("0", "a", "1");
  fa.add_transition("1", "b", "2");
  fa.add_transition("1", "c", "2");
  fa.set_initial(0);
  fa.set_final(2);
  return fa;
}

// a.b + a.c: the choice is made by the first move.
FiniteAutomaton EarlyChoice() {
  FiniteAutomaton fa({"a", "b", "c"});
  for (const char* s : {"0", "1", "2", "3"}) fa.add_state(s);
  fa.add_transition("0", "a", "1");
  fa.add_transition("0", "a", "2");
  fa.add_transition("1", "b", "3");
  fa.add_transition("2", "c", "3");
  fa.set_initial(0);
  fa.set_final(3);
  return fa;
}

FiniteAutomaton RandomNfa(std::mt19937_64& rng, std::size_t n) {
  FiniteAutomaton fa({"a", "b"});
  for (std::size_t i = 0; i < n; ++i) fa.add_state(std::to_string(i));
  std::bernoulli_distribution edge(0.3), mark(0.4);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t q = 0; q < n; ++q)
        if (edge(rng)) fa.add_transition(p, s, q);
  fa.set_initial(0);
  for (std::size_t q = 0; q < n; ++q)
    if (mark(rng)) fa.set_final(q);
  return fa;
}

// Every pair's moves are matched inside the relation.
bool TransitionClosed(const FiniteAutomaton& a, const FiniteAutomaton& b,
                      const SimulationWitness& w) {
  for (const auto& [p, q] : w.pairs) {
    if (a.is_final(p) != b.is_final(q)) return false;
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      const std::size_t sb = b.symbol_index(a.alphabet()[s]);
      for (auto p2 : a.successors(p, s)) {
        bool ok = false;
        for (auto q2 : b.successors(q, sb)) ok = ok || w.contains(p2, q2);
        if (!ok) return false;
      }
    }
  }
  return true;
}

TEST(LanguageTest, Examples) {
  const FiniteAutomaton at = to_finite_abstraction(TwoSymbol());
  EXPECT_EQ(language_upto(at, 3),
            (Language{{}, {"a", "b"}, {"a", "a", "b"}, {"a", "b", "b"}}));
  FiniteAutomaton single({"a"});
  single.add_state("0");
  single.set_initial(0);
  single.set_final(0);
  EXPECT_EQ(language_upto(single, 5), (Language{Word{}}));
  FiniteAutomaton unreachable({"a"});
  unreachable.add_state("0");
  unreachable.add_state("1");
  unreachable.set_initial(0);
  unreachable.set_final(1);
  EXPECT_TRUE(language_upto(unreachable, 5).empty());
}

TEST(LanguageTest, EqualityChecks) {
  const auto a = TwoSymbol();
  const FiniteAutomaton at = to_finite_abstraction(a);
  EXPECT_TRUE(language_equal_upto(at, Fused(a), 6).equal);
  EXPECT_TRUE(language_equal_exact(at, Fused(a)).equal);
  EXPECT_TRUE(language_equal_upto(at, at, 6).equal);
  EXPECT_TRUE(language_equal_upto(LateChoice(), EarlyChoice(), 6).equal);
  EXPECT_TRUE(language_equal_exact(LateChoice(), EarlyChoice()).equal);
}

TEST(LanguageTest, RemovingAFinalStateGivesAWitness) {
  const FiniteAutomaton full = EarlyChoice();
  FiniteAutomaton cut({"a", "b", "c"});
  for (const auto& s : full.states()) cut.add_state(s);
  for (std::size_t p = 0; p < full.num_states(); ++p)
    for (std::size_t s = 0; s < 3; ++s)
      for (auto q : full.successors(p, s)) cut.add_transition(p, s, q);
  cut.set_initial(0);
  FiniteAutomaton extra = cut;
  extra.set_final(1);
  const auto r = language_equal_upto(full, extra, 6);
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (Word{"a"}));
  const auto none = language_equal_upto(full, cut, 6);
  EXPECT_FALSE(none.equal);
  EXPECT_EQ(*none.witness, (Word{"a", "b"}));
  EXPECT_EQ(*language_equal_exact(full, cut).witness, (Word{"a", "b"}));
}

TEST(LanguageTest, AlphabetMismatchIsAnError) {
  FiniteAutomaton other({"a", "z"});
  EXPECT_THROW(language_equal_upto(LateChoice(), other, 3), ModelError);
  EXPECT_THROW(greatest_simulation(LateChoice(), other), ModelError);
}

TEST(SimulationTest, AutomatonAndFusedAbstraction) {
  const auto a = TwoSymbol();
  const FiniteAutomaton at = to_finite_abstraction(a);
  const FiniteAutomaton fused = Fused(a);
  const auto sim = greatest_simulation(at, fused);
  ASSERT_TRUE(sim);
  for (Mode q = 1; q <= 2; ++q)
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_TRUE(sim->contains(i, fused.state_index(abstraction_state_name(q, state_label(i)))));
  EXPECT_TRUE(is_simulation(at, fused, *sim));
  EXPECT_TRUE(greatest_simulation(fused, at));
  const auto bis = bisimulation(at, fused);
  ASSERT_TRUE(bis);
  EXPECT_TRUE(TransitionClosed(at, fused, *bis));
  EXPECT_TRUE(TransitionClosed(fused, at, converse(*bis)));
}

TEST(SimulationTest, Reflexive) {
  for (const auto& fa : {LateChoice(), EarlyChoice(), to_finite_abstraction(TwoSymbol())}) {
    const auto sim = greatest_simulation(fa, fa);
    ASSERT_TRUE(sim);
    for (std::size_t q = 0; q < fa.num_states(); ++q) EXPECT_TRUE(sim->contains(q, q));
    const auto bis = bisimulation(fa, fa);
    ASSERT_TRUE(bis);
    for (std::size_t q = 0; q < fa.num_states(); ++q) EXPECT_TRUE(bis->contains(q, q));
  }
}

TEST(SimulationTest, BranchingDistinguishesEqualLanguages) {
  EXPECT_TRUE(greatest_simulation(EarlyChoice(), LateChoice()));
  EXPECT_FALSE(greatest_simulation(LateChoice(), EarlyChoice()));
  EXPECT_FALSE(bisimulation(LateChoice(), EarlyChoice()));
}

TEST(SimulationTest, ChainIsNotSimulatedByALoopWithoutB) {
  FiniteAutomaton chain({"a", "b"});
  for (const char* s : {"0", "1", "2"}) chain.add_state(s);
  chain.add_transition("0", "a", "1");
  chain.add_transition("1", "b", "2");
  chain.set_initial(0);
  chain.set_final(2);
  FiniteAutomaton loop({"a", "b"});
  loop.add_state("0");
  loop.add_transition("0", "a", "0");
  loop.set_initial(0);
  loop.set_final(0);
  EXPECT_FALSE(greatest_simulation(chain, loop));
  EXPECT_FALSE(bisimulation(chain, loop));
}

TEST(SimulationTest, RandomPairsRespectLanguageInclusion) {
  std::mt19937_64 rng(51);
  int found = 0;
  for (int trial = 0; trial < 5000 && found < 20; ++trial) {
    const auto a = RandomNfa(rng, 3), b = RandomNfa(rng, 3);
    const auto sim = greatest_simulation(a, b);
    if (!sim) continue;
    ++found;
    EXPECT_TRUE(TransitionClosed(a, b, *sim));
    const Language la = language_upto(a, 6), lb = language_upto(b, 6);
    EXPECT_TRUE(std::includes(lb.begin(), lb.end(), la.begin(), la.end(), ShortLex{}));
  }
  EXPECT_EQ(found, 20);
}

TEST(SimulationTest, WitnessesAreClosedAndBisimulationSymmetric) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = RandomNfa(rng, 4), b = RandomNfa(rng, 4);
    if (const auto sim = greatest_simulation(a, b)) {
      ASSERT_TRUE(TransitionClosed(a, b, *sim));
      ASSERT_TRUE(is_simulation(a, b, *sim));
    }
    const auto ab = bisimulation(a, b), ba = bisimulation(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) {
      ASSERT_EQ(converse(*ab).pairs, ba->pairs);
      ASSERT_TRUE(TransitionClosed(a, b, *ab));
      ASSERT_TRUE(TransitionClosed(b, a, *ba));
      for (auto p : a.initial()) {
        bool paired = false;
        for (auto q : b.initial()) paired = paired || ab->contains(p, q);
        ASSERT_TRUE(paired);
      }
    }
  }
}

TEST(SimulationTest, PreorderOnSampledTriples) {
  std::mt19937_64 rng(53);
  std::vector<FiniteAutomaton> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(RandomNfa(rng, 2));
  std::size_t chains = 0;
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool)
        if (greatest_simulation(x, y) && greatest_simulation(y, z)) {
          ++chains;
          ASSERT_TRUE(greatest_simulation(x, z));
        }
  EXPECT_GT(chains, pool.size());
}

TEST(BehaviourTest, AutomatonIsIncludedInItsSmplTranslation) {
  const auto a = TwoSymbol();
  const auto r = behavioural_inclusion_upto(behaviour_of(a), behaviour_of(from_mpa(a)), 6);
  EXPECT_TRUE(r.included);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.checked, 126u);
  const SmplSystem s = from_mpa(a);
  EXPECT_TRUE(behavioural_inclusion_upto(behaviour_of(s), behaviour_of(s), 6).included);
  EXPECT_TRUE(
      behavioural_inclusion_upto(behaviour_of(s), behaviour_of(from_smpl_open(s)), 6).included);
}

TEST(BehaviourTest, MutatedOutputHasAWitness) {
  const auto a = TwoSymbol();
  const SmplSystem s = from_mpa(a);
  SmplSystem mutated = s;
  for (auto& m : mutated.modes) {
    MatrixForm mf = *m.matrix_form();
    mf.C[0](0, 0) = ExtendedWeight(3);
    m = mf;
  }
  const auto r = behavioural_inclusion_upto(behaviour_of(s), behaviour_of(mutated), 6);
  EXPECT_FALSE(r.included);
  ASSERT_TRUE(r.witness);
  Word w;
  for (const auto& st : *r.witness) w.push_back(*st.theta.w);
  EXPECT_EQ(w, (Word{"a", "b"}));
  const auto from_mpa_side =
      behavioural_inclusion_upto(behaviour_of(a), behaviour_of(mutated), 6);
  EXPECT_FALSE(from_mpa_side.included);
  EXPECT_EQ(from_mpa_side.witness->size(), 2u);
}

TEST(BehaviourTest, ContinuousChannelsAreSampled) {
  SmplSystem s;
  s.dims = {1, 0, 0, 1, 1};
  s.mode_names = {"only"};
  s.modes.emplace_back(linear_form(TropicalMatrix{{1}}, TropicalMatrix{{0}}, TropicalMatrix{{0}},
                                   TropicalMatrix{{e}}));
  s.switching = {SwitchingKind::kStateDependentAutonomous,
                 [](const SwitchContext&) { return ModeSet{1}; }, std::nullopt};
  s.x0 = {0};
  const auto r = behavioural_inclusion_upto(behaviour_of(s), behaviour_of(from_smpl_open(s)), 4,
                                            7, 50);
  EXPECT_TRUE(r.included);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.checked, 200u);
  EXPECT_THROW(behavioural_inclusion_upto(behaviour_of(s), behaviour_of(TwoSymbol()), 2),
               ModelError);
}

TEST(TraceComparisonTest, SmplAndMahaAgree) {
  const SmplSystem s = from_mpa(TwoSymbol());
  const HybridAutomaton h = from_smpl_open(s);
  for (std::size_t len = 1; len <= 5; ++len)
    for (const auto& w : words_of_length(s.alphabet, len))
      ASSERT_TRUE(compare_smpl_maha(s, h, word_inputs(w)).equal) << to_string(w);
  HybridAutomaton broken = h;
  broken.dynamics[0] = linear_form(TropicalMatrix{{e, e, e}, {0, e, e}, {3, 4, e}},
                                   TropicalMatrix::row({2, e, e}));
  const auto r = compare_smpl_maha(s, broken, word_inputs({"a", "b"}));
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.detail, "traces differ at k=1");
}

}  // namespace
}  // namespace mpha
