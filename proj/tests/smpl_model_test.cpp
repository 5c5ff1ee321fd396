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

#include "mpha/expression.hpp"
#include "mpha/smpl.hpp"

namespace mpha {
namespace {

const ExtendedWeight e = kEps;

MaxPlusAutomaton TwoSymbol() {
  return MaxPlusAutomaton({"1", "2", "3"}, {"a", "b"}, {0, e, e},
                          {{"a", {{e, 1, 3}, {e, e, 4}, {e, e, e}}},
                           {"b", {{e, e, e}, {2, 1, e}, {7, 5, 1}}}},
                          {2, e, e});
}

SmplSystem ProductionLine() {
  const char* x3 = "max(x1 + 1, x2 + 2, x3 + 6, min(x1 + 4, x2 + 5))";
  auto mode = [&](const char* f1, const char* f2) {
    return ExpressionDynamics{
        {parse_expression(f1), parse_expression(f2), parse_expression(x3)},
        {parse_expression("x3")}};
  };
  SmplSystem s;
  s.dims = {3, 0, 0, 1, 0};
  s.mode_names = {"l1", "l2"};
  s.alphabet = {"l1", "l2"};
  s.modes.emplace_back(mode("max(x1 + 1, x2, x3 + 3)", "max(x1 + 1, x2 + 2)"));
  s.modes.emplace_back(mode("max(x1 + 1, x2)", "max(x1 + 1, x2 + 2, x3 + 3)"));
  s.switching = SwitchingRule::from_spec(
      SymbolGuarded{{"l1", "l2"}, SymbolGuarded::Require::kHasFinite});
  s.x0 = {0, 0, e};
  validate(s);
  return s;
}

SmplSystem SingleMode(TropicalMatrix a, Vector x0) {
  SmplSystem s;
  const std::size_t n = a.rows();
  s.dims = {n, 0, 0, n, 0};
  s.mode_names = {"only"};
  s.modes.emplace_back(linear_form(std::move(a), TropicalMatrix::identity(n)));
  s.switching = {SwitchingKind::kStateDependentAutonomous,
                 [](const SwitchContext&) { return ModeSet{1}; }, std::nullopt};
  s.x0 = std::move(x0);
  validate(s);
  return s;
}

std::vector<StepInput> Silent(std::size_t k) { return std::vector<StepInput>(k); }

TEST(SmplTest, ExampleTwoFirstStep) {
  const SmplSystem s = from_mpa(TwoSymbol());
  const auto rec = step(s, initial_state(s), word_inputs({"a"})[0]);
  EXPECT_EQ(rec.l, 1u);
  EXPECT_EQ(rec.x, (Vector{e, 1, 3}));
  EXPECT_EQ(rec.successors, (ModeSet{1}));
  EXPECT_THROW(step(s, initial_state(s), word_inputs({"b"})[0]), NoSuccessorMode);
}

TEST(SmplTest, FromMpaStructure) {
  const SmplSystem s = from_mpa(TwoSymbol());
  EXPECT_EQ(s.n_modes(), 2u);
  EXPECT_EQ(s.dims, (SmplDims{3, 0, 0, 1, 0}));
  EXPECT_EQ(s.x0, (Vector{0, e, e}));
  EXPECT_EQ(s.modes[0].matrix_form()->A[0], TwoSymbol().mu("a").transpose());
  EXPECT_EQ(s.modes[1].matrix_form()->A[0], TwoSymbol().mu("b").transpose());
  EXPECT_EQ(s.modes[0].matrix_form()->C[0], TropicalMatrix::row({2, e, e}));
  EXPECT_TRUE(s.from_automaton);
}

TEST(SmplTest, IdentityDynamicsHoldState) {
  const SmplSystem s = SingleMode(TropicalMatrix::identity(2), {3, e});
  const auto trace = simulate(s, Silent(5));
  ASSERT_EQ(trace.steps.size(), 5u);
  for (const auto& r : trace.steps) EXPECT_EQ(r.x, (Vector{3, e}));
}

TEST(SmplTest, ScalarRecursionFromSingleStateAutomaton) {
  const MaxPlusAutomaton a({"1"}, {"a"}, {0}, {{"a", {{3}}}}, {0});
  const auto trace = simulate(from_mpa(a), word_inputs({"a", "a", "a", "a"}));
  ASSERT_EQ(trace.steps.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(trace.steps[k].x, (Vector{ExtendedWeight(3.0 * (k + 1))}));
}

TEST(SmplTest, EmptyInputGivesEmptyTrace) {
  const auto trace = simulate(from_mpa(TwoSymbol()), {});
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_FALSE(trace.halted_at);
}

TEST(SmplTest, ExampleTwoOutputs) {
  const auto trace = simulate(from_mpa(TwoSymbol()), word_inputs({"a", "a", "b"}));
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps.back().y, (Vector{14}));
  EXPECT_EQ(trace.steps.back().x, (Vector{12, 10, 6}));
}

TEST(SmplTest, HaltingMatchesEmptySuccessorSet) {
  const SmplSystem s = from_mpa(TwoSymbol());
  EXPECT_EQ(simulate(s, word_inputs({"b"})).halted_at, std::optional<std::size_t>(1));
  const auto aaa = simulate(s, word_inputs({"a", "a", "a"}));
  EXPECT_EQ(aaa.halted_at, std::optional<std::size_t>(3));
  EXPECT_EQ(aaa.steps.size(), 2u);
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : words_of_length(s.alphabet, len)) {
      const auto trace = simulate(s, word_inputs(w));
      SmplState st = initial_state(s);
      std::optional<std::size_t> expected;
      for (std::size_t k = 1; k <= w.size(); ++k) {
        const ModeSet next = successor_modes(s, st.l, st.x, {}, {}, {{}, {}, w[k - 1]});
        if (next.empty()) {
          expected = k;
          break;
        }
        st = {next.front(), s.modes[next.front() - 1].next_state(st.x, {}), {}, {}};
      }
      ASSERT_EQ(trace.halted_at, expected) << to_string(w);
    }
}

TEST(SmplTest, TranslatedAutomatonReproducesOutputs) {
  const auto a = TwoSymbol();
  const SmplSystem s = from_mpa(a);
  std::size_t accepted = 0;
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : words_of_length(a.alphabet(), len)) {
      const auto trace = simulate(s, word_inputs(w));
      const bool complete = !trace.halted_at;
      const bool finite_y = complete && !trace.steps.back().y[0].is_epsilon();
      ASSERT_EQ(accepts(a, w), finite_y) << to_string(w);
      if (accepts(a, w)) {
        ++accepted;
        ASSERT_EQ(trace.steps.back().y[0], eval_output(a, w)) << to_string(w);
      }
    }
  EXPECT_GT(accepted, 0u);
}

TEST(SmplTest, ProductionLineFirstStep) {
  const auto trace = simulate(ProductionLine(), word_inputs({"l1"}));
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0].x, (Vector{1, 2, 4}));
  EXPECT_EQ(trace.steps[0].y, (Vector{4}));
}

TEST(SmplTest, ProductionLineTimesIncrease) {
  const SmplSystem s = ProductionLine();
  std::mt19937_64 rng(31);
  for (int run = 0; run < 100; ++run) {
    const auto trace = simulate(s, random_step_inputs(s, 15, rng));
    ASSERT_FALSE(trace.halted_at);
    Vector prev = s.x0;
    for (const auto& r : trace.steps) {
      for (std::size_t i = 0; i < 3; ++i)
        if (prev[i].is_finite() && r.x[i].is_finite()) {
          ASSERT_GT(r.x[i], prev[i]);
        }
      prev = r.x;
    }
  }
}

TEST(SmplTest, TopPropagatesThroughStates) {
  const SmplSystem s = SingleMode(TropicalMatrix{{0, e}, {1, 0}}, {kTop, 2});
  const auto trace = simulate(s, Silent(2));
  EXPECT_EQ(trace.steps[0].x, (Vector{kTop, kTop}));
}

TEST(SmplTest, LinearModesAreMonotone) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> v(-4, 8);
  auto draw = [&]() -> ExtendedWeight {
    const int x = v(rng);
    return x < 0 ? kEps : ExtendedWeight(x);
  };
  for (int trial = 0; trial < 500; ++trial) {
    TropicalMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = draw();
    const ModeDynamics m(linear_form(a, TropicalMatrix::identity(3)));
    Vector x{draw(), draw(), draw()};
    Vector bigger = vec_oplus(x, Vector{draw(), draw(), draw()});
    ASSERT_TRUE(leq(x, bigger));
    ASSERT_TRUE(leq(m.next_state(x, {}), m.next_state(bigger, {})));
  }
}

TEST(SmplTest, NondeterminismPicksSmallestMode) {
  SmplSystem s = SingleMode(TropicalMatrix::identity(1), {0});
  s.modes.emplace_back(linear_form(TropicalMatrix{{1}}, TropicalMatrix::identity(1)));
  s.mode_names.push_back("two");
  s.switching.select = [](const SwitchContext&) { return ModeSet{2, 1}; };
  const auto trace = simulate(s, Silent(1));
  EXPECT_EQ(trace.steps[0].l, 1u);
  EXPECT_EQ(trace.steps[0].successors, (ModeSet{1, 2}));
  s.switching.select = [](const SwitchContext&) { return ModeSet{3}; };
  EXPECT_THROW(simulate(s, Silent(1)), ModelError);
}

TEST(SmplTest, StaticFeedbackDrivesInputs) {
  SmplSystem s;
  s.dims = {1, 1, 0, 1, 1};
  s.mode_names = {"only"};
  s.modes.emplace_back(linear_form(TropicalMatrix{{e}}, TropicalMatrix{{0, e}},
                                   TropicalMatrix{{0}}, TropicalMatrix{{e, e}}));
  s.switching = {SwitchingKind::kStateDependentAutonomous,
                 [](const SwitchContext&) { return ModeSet{1}; }, std::nullopt};
  s.x0 = {5};
  s.controller = static_feedback_controller({TropicalMatrix{{2}}, TropicalMatrix{{0}}, {}});
  validate(s);
  std::vector<StepInput> in(2);
  in[0].theta.r = {1};
  in[1].theta.r = {20};
  const auto trace = simulate(s, in);
  EXPECT_EQ(trace.steps[0].u, (Vector{7}));
  EXPECT_EQ(trace.steps[0].x, (Vector{7}));
  EXPECT_EQ(trace.steps[1].u, (Vector{20}));
}

TEST(SmplTest, ValidationRejectsBadShapes) {
  SmplSystem s = from_mpa(TwoSymbol());
  s.x0 = {0};
  EXPECT_THROW(validate(s), ShapeError);
  s = from_mpa(TwoSymbol());
  s.initial_mode = 3;
  EXPECT_THROW(validate(s), ModelError);
}

TEST(SwitchingKindTest, FromMpaIsConstrained) {
  const SmplSystem s = from_mpa(TwoSymbol());
  EXPECT_EQ(s.switching.kind, SwitchingKind::kConstrained);
  EXPECT_EQ(classify_switching(s), SwitchingKind::kConstrained);
  EXPECT_EQ(infer_switching_kind(s), SwitchingKind::kConstrained);
}

TEST(SwitchingKindTest, ConstantRuleIsAutonomous) {
  const SmplSystem s = SingleMode(TropicalMatrix::identity(2), {0, 0});
  EXPECT_TRUE(observed_arguments(s).empty());
  EXPECT_EQ(infer_switching_kind(s), SwitchingKind::kStateDependentAutonomous);
}

TEST(SwitchingKindTest, ReadingVNeedsAControlledKind) {
  SmplSystem s = SingleMode(TropicalMatrix::identity(1), {0});
  s.modes.emplace_back(linear_form(TropicalMatrix{{1}}, TropicalMatrix::identity(1)));
  s.mode_names.push_back("two");
  s.dims.n_v = 1;
  s.switching.select = [](const SwitchContext& c) {
    return c.v.at(0) >= ExtendedWeight(1) ? ModeSet{2} : ModeSet{1};
  };
  EXPECT_TRUE(observed_arguments(s).count(SwitchArgument::kDiscreteControl));
  EXPECT_EQ(infer_switching_kind(s), SwitchingKind::kStateDependentControlled);
  EXPECT_THROW(classify_switching(s), ModelError);
  s.switching.kind = SwitchingKind::kConstrainedControlled;
  EXPECT_EQ(classify_switching(s), SwitchingKind::kConstrainedControlled);
}

TEST(SwitchingKindTest, ExternalMapIsExternallyDriven) {
  SmplSystem s = SingleMode(TropicalMatrix::identity(1), {0});
  s.modes.emplace_back(linear_form(TropicalMatrix{{1}}, TropicalMatrix::identity(1)));
  s.mode_names.push_back("two");
  s.alphabet = {"p", "q"};
  s.switching = SwitchingRule::from_spec(ExternalMap{{{"p", 1}, {"q", 2}}});
  EXPECT_EQ(s.switching.kind, SwitchingKind::kExternallyDriven);
  EXPECT_EQ(infer_switching_kind(s), SwitchingKind::kExternallyDriven);
  const auto trace = simulate(s, word_inputs({"q", "p", "q"}));
  EXPECT_EQ(trace.steps[2].x, (Vector{2}));
}

TEST(SwitchingKindTest, ThresholdIsStateDependent) {
  SmplSystem s = SingleMode(TropicalMatrix::identity(2), {0, 0});
  s.modes.emplace_back(linear_form(TropicalMatrix{{0, e}, {e, 1}}, TropicalMatrix::identity(2)));
  s.mode_names.push_back("two");
  s.switching = SwitchingRule::from_spec(ThresholdSwitch{{{1, 2, kUnit, 2}}, 1});
  EXPECT_EQ(infer_switching_kind(s), SwitchingKind::kStateDependentAutonomous);
  EXPECT_EQ(simulate(s, Silent(1)).steps[0].l, 2u);
}

TEST(SwitchingKindTest, NamesRoundTrip) {
  for (auto k : {SwitchingKind::kStateDependentAutonomous,
                 SwitchingKind::kStateDependentControlled, SwitchingKind::kExternallyDriven,
                 SwitchingKind::kConstrained, SwitchingKind::kConstrainedControlled})
    EXPECT_EQ(parse_switching_kind(to_string(k)), k);
  EXPECT_THROW(parse_switching_kind("random"), ModelError);
}

}  // namespace
}  // namespace mpha
