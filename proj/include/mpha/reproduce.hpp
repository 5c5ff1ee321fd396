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

// Reproduction suite: the worked examples, the production line and the
// desk-scale translation checks, run against the bundled fixtures.

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mpha/conjunctive.hpp"
#include "mpha/equivalence.hpp"
#include "mpha/expression.hpp"
#include "mpha/io.hpp"
#include "mpha/maha.hpp"
#include "mpha/mpa.hpp"
#include "mpha/smpl.hpp"

namespace mpha {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace repro {

inline std::string vec_text(const Vector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline const MaxPlusAutomaton& as_mpa(const ModelDocument& d) {
  if (d.kind() != ModelKind::kMpa) throw ModelError(d.name + " is not an mpa model");
  return std::get<MaxPlusAutomaton>(d.body);
}

inline const SmplSystem& as_smpl(const ModelDocument& d) {
  if (d.kind() != ModelKind::kSmpl) throw ModelError(d.name + " is not an smpl model");
  return std::get<SmplSystem>(d.body);
}

/// Production-line dynamics typed directly from the model equations,
/// independent of the fixture.
inline std::vector<std::vector<MmpsExpression>> production_line_oracle(double t1, double t2,
                                                                       double t3) {
  auto num = [](double v) { return to_string(ExtendedWeight(v)); };
  const std::string x3 = "max(x1 + " + num(t1) + ", x2 + " + num(t2) + ", x3 + " +
                         num(2 * t3) + ", min(x1 + " + num(t1 + t3) + ", x2 + " +
                         num(t2 + t3) + "))";
  const std::vector<std::string> l1{
      "max(x1 + " + num(t1) + ", x2, x3 + " + num(t3) + ")",
      "max(x1 + " + num(t1) + ", x2 + " + num(t2) + ")", x3};
  const std::vector<std::string> l2{
      "max(x1 + " + num(t1) + ", x2)",
      "max(x1 + " + num(t1) + ", x2 + " + num(t2) + ", x3 + " + num(t3) + ")", x3};
  std::vector<std::vector<MmpsExpression>> out(2);
  for (const auto& s : l1) out[0].push_back(parse_expression(s));
  for (const auto& s : l2) out[1].push_back(parse_expression(s));
  return out;
}

inline Vector random_state(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(-20, 20);
  std::uniform_real_distribution<double> coin(0, 1);
  Vector x(n);
  for (auto& w : x) {
    const double c = coin(rng);
    w = c < 0.1 ? kEps : c < 0.15 ? kTop : ExtendedWeight(value(rng));
  }
  return x;
}

}  // namespace repro

/// Runs every check. Fixture problems fail the check that needs them.
inline std::vector<CheckResult> run_reproduction(const std::string& models_dir,
                                                 std::uint64_t seed) {
  using Check = std::function<std::string(bool&)>;
  std::vector<std::pair<std::string, Check>> checks;
  auto load = [&](const std::string& file) { return load_model(models_dir + "/" + file); };

  checks.emplace_back("mpa.outputs", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const auto ab = eval_output(a, {"a", "b"});
    const auto aab = eval_output(a, {"a", "a", "b"});
    const auto b = eval_output(a, {"b"});
    ok = ab == ExtendedWeight(12) && aab == ExtendedWeight(14) && b.is_epsilon();
    return "y(ab)=" + to_string(ab) + " y(aab)=" + to_string(aab) + " y(b)=" + to_string(b);
  });
  checks.emplace_back("mpa.language", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const Language l = language_upto(to_finite_abstraction(a), 3);
    const Language expected{{}, {"a", "b"}, {"a", "a", "b"}, {"a", "b", "b"}};
    ok = l == expected && l == language_upto(a, 3);
    std::string s;
    for (const auto& w : l) s += (s.empty() ? "" : " ") + (w.empty() ? "<empty>" : to_string(w));
    return "L<=3 = {" + s + "}";
  });
  checks.emplace_back("mpa.blocking", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const TropicalMatrix alpha_b = mat_otimes(TropicalMatrix::row(a.alpha()), a.mu("b"));
    const TropicalMatrix a2 = mat_power(a.mu("a"), 2);
    const TropicalMatrix a3 = mat_power(a.mu("a"), 3);
    ok = is_all_epsilon(alpha_b) && a2 != a3 && is_all_epsilon(a3);
    return std::string("alpha^T mu(b) all-eps: ") + (is_all_epsilon(alpha_b) ? "yes" : "no") +
           ", mu(a)^2 != mu(a)^3 = E: " + (a2 != a3 && is_all_epsilon(a3) ? "yes" : "no");
  });
  checks.emplace_back("smpl.translation", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const SmplSystem s = from_mpa(a);
    const SmplTrace ta = simulate(s, word_inputs({"a"}));
    const SmplTrace tb = simulate(s, word_inputs({"b"}));
    const SmplTrace taaa = simulate(s, word_inputs({"a", "a", "a"}));
    ok = ta.steps.size() == 1 && ta.steps[0].l == 1 &&
         ta.steps[0].x == Vector{kEps, 1, 3} && tb.halted_at == std::size_t{1} &&
         taaa.halted_at == std::size_t{3};
    return "w=a: l=" + (ta.steps.empty() ? std::string("-") : std::to_string(ta.steps[0].l)) +
           " x=" + (ta.steps.empty() ? std::string("-") : repro::vec_text(ta.steps[0].x)) +
           "; w=b halts at " + (tb.halted_at ? std::to_string(*tb.halted_at) : "-");
  });
  checks.emplace_back("smpl.behavioural_inclusion", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const SmplSystem s = from_mpa(a);
    std::size_t accepted = 0, words = 0;
    ok = true;
    for (std::size_t len = 1; len <= 6; ++len)
      for (const auto& w : words_of_length(a.alphabet(), len)) {
        ++words;
        if (!accepts(a, w)) continue;
        ++accepted;
        const SmplTrace t = simulate(s, word_inputs(w));
        if (t.halted_at || t.steps.back().y != Vector{eval_output(a, w)}) ok = false;
      }
    const auto inc = behavioural_inclusion_upto(behaviour_of(a), behaviour_of(s), 6);
    ok = ok && inc.included;
    return std::to_string(accepted) + " of " + std::to_string(words) +
           " words accepted; all reproduced by the SMPL system";
  });
  auto trace_check = [&](const std::string& file, bool closed) {
    return [&, file, closed](bool& ok) {
      const SmplSystem s = repro::as_smpl(load(file));
      const HybridAutomaton h = closed ? from_smpl_closed(s) : from_smpl_open(s);
      std::mt19937_64 rng(seed);
      std::size_t halted = 0;
      ok = true;
      for (int run = 0; run < 50; ++run) {
        const auto in = random_step_inputs(s, 20, rng);
        const auto cmp = compare_smpl_maha(s, h, in);
        if (!cmp.equal) {
          ok = false;
          return "run " + std::to_string(run) + ": " + cmp.detail;
        }
        if (simulate(s, in).halted_at) ++halted;
      }
      return "50 runs of 20 events identical (" + std::to_string(halted) + " halted)";
    };
  };
  checks.emplace_back("maha.open_loop.two_symbol", [&](bool& ok) {
    const SmplSystem s = from_mpa(repro::as_mpa(load("two_symbol_mpa.json")));
    const HybridAutomaton h = from_smpl_open(s);
    std::mt19937_64 rng(seed);
    ok = true;
    for (int run = 0; run < 50; ++run)
      if (!compare_smpl_maha(s, h, random_step_inputs(s, 20, rng)).equal) ok = false;
    return ok ? "50 runs of 20 events identical" : "trace mismatch";
  });
  checks.emplace_back("maha.open_loop.production_line", trace_check("production_line.json", false));
  checks.emplace_back("maha.closed_loop", trace_check("closed_loop_smpl.json", true));
  checks.emplace_back("abstraction.language", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    auto same = [](const MaxPlusAutomaton& m) {
      const auto h = from_smpl_open(from_mpa(m));
      return language_equal_upto(to_finite_abstraction(m),
                                 specialized_abstraction_for_mpa_translation(h), 6)
          .equal;
    };
    ok = same(a);
    std::mt19937_64 rng(seed);
    std::size_t agree = 0;
    for (int i = 0; i < 20; ++i)
      if (same(random_mpa(3, {"a", "b"}, rng))) ++agree;
    ok = ok && agree == 20;
    return std::string("fixture: ") + (same(a) ? "equal" : "differs") + ", random: " +
           std::to_string(agree) + "/20 equal up to length 6";
  });
  checks.emplace_back("abstraction.bisimulation", [&](bool& ok) {
    const auto a = repro::as_mpa(load("two_symbol_mpa.json"));
    const auto at = to_finite_abstraction(a);
    const auto fused = specialized_abstraction_for_mpa_translation(from_smpl_open(from_mpa(a)));
    const auto sim = greatest_simulation(at, fused);
    const auto bis = bisimulation(at, fused);
    bool index_pairs = sim.has_value();
    if (sim)
      for (std::size_t i = 0; i < at.num_states(); ++i)
        for (Mode q = 1; q <= a.alphabet().size(); ++q)
          if (!sim->contains(i, fused.state_index(abstraction_state_name(q, state_label(i)))))
            index_pairs = false;
    ok = index_pairs && bis.has_value();
    return std::string("simulation with (s_i,(q,x_i)) pairs: ") + (index_pairs ? "yes" : "no") +
           ", bisimulation: " + (bis ? "yes" : "no");
  });
  checks.emplace_back("production_line.first_step", [&](bool& ok) {
    const SmplSystem s = repro::as_smpl(load("production_line.json"));
    const auto oracle = repro::production_line_oracle(1, 2, 3);
    Vector expected;
    for (const auto& e : oracle[0]) expected.push_back(eval(e, s.x0));
    const SmplTrace t = simulate(s, word_inputs({"l1"}));
    ok = !t.steps.empty() && t.steps[0].x == expected && expected == Vector{1, 2, 4} &&
         t.steps[0].y == Vector{expected[2]};
    return "x(1)=" + (t.steps.empty() ? std::string("-") : repro::vec_text(t.steps[0].x)) +
           " y(1)=" + (t.steps.empty() ? std::string("-") : repro::vec_text(t.steps[0].y)) +
           " oracle x(1)=" + repro::vec_text(expected);
  });
  checks.emplace_back("production_line.conjunctive_form", [&](bool& ok) {
    const SmplSystem s = repro::as_smpl(load("production_line.json"));
    const auto oracle = repro::production_line_oracle(1, 2, 3);
    const ConjunctiveForm cf = to_conjunctive(oracle[0][2], 3, 0);
    const ConjunctiveForm expected{{{{1, 5, 6}, {}, kEps}, {{4, 2, 6}, {}, kEps}}};
    std::mt19937_64 rng(seed);
    ok = cf == expected;
    for (int i = 0; i < 1000; ++i) {
      const Vector x = repro::random_state(3, rng);
      const ExtendedWeight v = eval(oracle[0][2], x);
      if (eval(cf, x) != v) ok = false;
      for (std::size_t l = 0; l < 2; ++l)
        if (s.modes[l].next_state(x, {})[2] != v) ok = false;
    }
    return std::to_string(cf.projections.size()) + " projections; 1000 states agree: " +
           (ok ? "yes" : "no");
  });
  checks.emplace_back("production_line.abstraction_edges", [&](bool& ok) {
    const SmplSystem s = repro::as_smpl(load("production_line.json"));
    const FiniteAutomaton fa = finite_abstraction(from_smpl_open(s));
    const std::size_t tick = fa.symbol_index(kTickSymbol);
    auto edge = [&](Mode q, std::size_t i, std::size_t j) {
      const auto& succ = fa.successors(
          fa.state_index(abstraction_state_name(q, state_label(i))), tick);
      return succ.count(fa.state_index(abstraction_state_name(q, state_label(j)))) > 0;
    };
    std::string common, only1, only2;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const std::string name = "x" + std::to_string(i + 1) + "->x" + std::to_string(j + 1);
        const bool e1 = edge(1, i, j), e2 = edge(2, i, j);
        std::string& bucket = e1 && e2 ? common : e1 ? only1 : only2;
        if (e1 || e2) bucket += (bucket.empty() ? "" : " ") + name;
      }
    ok = common == "x1->x1 x1->x2 x1->x3 x2->x1 x2->x2 x2->x3 x3->x3" && only1 == "x3->x1" &&
         only2 == "x3->x2";
    return "common {" + common + "}, l1 only {" + only1 + "}, l2 only {" + only2 + "}";
  });

  std::vector<CheckResult> out;
  for (auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      bool ok = false;
      r.detail = fn(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mpha
