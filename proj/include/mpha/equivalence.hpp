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

// Equivalence checks: bounded languages, simulation and bisimulation between
// finite automata, and bounded input-output behavioural inclusion.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/finite_automaton.hpp"
#include "mpha/maha.hpp"
#include "mpha/mpa.hpp"
#include "mpha/smpl.hpp"

namespace mpha {

/// Accepted words of length <= max_len, by breadth-first search over
/// reachable state sets.
inline Language language_upto(const FiniteAutomaton& fa, std::size_t max_len) {
  Language out;
  std::vector<std::pair<Word, std::set<std::size_t>>> layer{{{}, fa.initial()}};
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<Word, std::set<std::size_t>>> next;
    for (const auto& [w, states] : layer) {
      for (auto q : states)
        if (fa.is_final(q)) {
          out.insert(w);
          break;
        }
      if (len == max_len) continue;
      for (std::size_t a = 0; a < fa.alphabet().size(); ++a) {
        std::set<std::size_t> succ;
        for (auto q : states) {
          const auto& t = fa.successors(q, a);
          succ.insert(t.begin(), t.end());
        }
        if (succ.empty()) continue;
        Word w2 = w;
        w2.push_back(fa.alphabet()[a]);
        next.emplace_back(std::move(w2), std::move(succ));
      }
    }
    layer = std::move(next);
  }
  return out;
}

namespace detail {

inline void require_same_alphabet(const FiniteAutomaton& a, const FiniteAutomaton& b) {
  const std::set<Symbol> sa(a.alphabet().begin(), a.alphabet().end());
  const std::set<Symbol> sb(b.alphabet().begin(), b.alphabet().end());
  if (sa != sb) throw ModelError("automata have different alphabets");
}

}  // namespace detail

struct LanguageComparison {
  bool equal = true;
  std::optional<Word> witness;  // shortest word in exactly one language
};

inline LanguageComparison language_equal_upto(const FiniteAutomaton& a,
                                              const FiniteAutomaton& b,
                                              std::size_t max_len) {
  detail::require_same_alphabet(a, b);
  const Language la = language_upto(a, max_len);
  const Language lb = language_upto(b, max_len);
  Language diff;
  std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                std::inserter(diff, diff.end()), ShortLex{});
  if (diff.empty()) return {};
  return {false, *diff.begin()};
}

/// Exact language equality by subset construction on the product; limited
/// to automata with at most 12 states each.
inline LanguageComparison language_equal_exact(const FiniteAutomaton& a,
                                               const FiniteAutomaton& b) {
  detail::require_same_alphabet(a, b);
  if (a.num_states() > 12 || b.num_states() > 12)
    throw ModelError("exact language check limited to 12 states");
  using Pair = std::pair<std::set<std::size_t>, std::set<std::size_t>>;
  auto accepting = [](const FiniteAutomaton& fa, const std::set<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return fa.is_final(q); });
  };
  std::map<Pair, Word> seen;
  std::queue<Pair> todo;
  const Pair start{a.initial(), b.initial()};
  seen[start] = {};
  todo.push(start);
  while (!todo.empty()) {
    const Pair cur = todo.front();
    todo.pop();
    const Word& w = seen[cur];
    if (accepting(a, cur.first) != accepting(b, cur.second)) return {false, w};
    for (const auto& sym : a.alphabet()) {
      Pair next;
      const std::size_t ia = a.symbol_index(sym), ib = b.symbol_index(sym);
      for (auto q : cur.first) next.first.insert(a.successors(q, ia).begin(), a.successors(q, ia).end());
      for (auto q : cur.second) next.second.insert(b.successors(q, ib).begin(), b.successors(q, ib).end());
      if (seen.count(next)) continue;
      Word w2 = w;
      w2.push_back(sym);
      seen[next] = std::move(w2);
      todo.push(next);
    }
  }
  return {};
}

/// Pairs (state of the first automaton, state of the second).
struct SimulationWitness {
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  bool contains(std::size_t p, std::size_t q) const { return pairs.count({p, q}) > 0; }
};

namespace detail {

/// Every move of p in `a` is matched by a move of q in `b` into `rel`.
inline bool matched(const FiniteAutomaton& a, const FiniteAutomaton& b, std::size_t p,
                    std::size_t q, const std::set<std::pair<std::size_t, std::size_t>>& rel,
                    bool flipped) {
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    const std::size_t sb = b.symbol_index(a.alphabet()[s]);
    for (auto p2 : a.successors(p, s)) {
      bool ok = false;
      for (auto q2 : b.successors(q, sb)) {
        const auto key = flipped ? std::make_pair(q2, p2) : std::make_pair(p2, q2);
        if (rel.count(key)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

inline std::set<std::pair<std::size_t, std::size_t>> finality_pairs(const FiniteAutomaton& a,
                                                                      const FiniteAutomaton& b) {
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t p = 0; p < a.num_states(); ++p)
    for (std::size_t q = 0; q < b.num_states(); ++q)
      if (a.is_final(p) == b.is_final(q)) rel.insert({p, q});
  return rel;
}

inline bool covers_initial(const FiniteAutomaton& a, const FiniteAutomaton& b,
                           const std::set<std::pair<std::size_t, std::size_t>>& rel,
                           bool flipped) {
  for (auto p : a.initial()) {
    bool ok = false;
    for (auto q : b.initial())
      if (rel.count(flipped ? std::make_pair(q, p) : std::make_pair(p, q))) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Greatest simulation from `a` to `b`, refined from the pairs that agree on
/// finality; present iff every initial state of `a` is related to an initial
/// state of `b`.
inline std::optional<SimulationWitness> greatest_simulation(const FiniteAutomaton& a,
                                                            const FiniteAutomaton& b) {
  detail::require_same_alphabet(a, b);
  auto rel = detail::finality_pairs(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = rel.begin(); it != rel.end();) {
      if (!detail::matched(a, b, it->first, it->second, rel, false)) {
        it = rel.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (!detail::covers_initial(a, b, rel, false)) return std::nullopt;
  return SimulationWitness{std::move(rel)};
}

/// Greatest bisimulation: moves must be matched in both directions. Present
/// iff the initial states are related both ways.
inline std::optional<SimulationWitness> bisimulation(const FiniteAutomaton& a,
                                                     const FiniteAutomaton& b) {
  detail::require_same_alphabet(a, b);
  if (!greatest_simulation(a, b) || !greatest_simulation(b, a)) return std::nullopt;
  auto rel = detail::finality_pairs(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = rel.begin(); it != rel.end();) {
      if (!detail::matched(a, b, it->first, it->second, rel, false) ||
          !detail::matched(b, a, it->second, it->first, rel, true)) {
        it = rel.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (!detail::covers_initial(a, b, rel, false) || !detail::covers_initial(b, a, rel, true))
    return std::nullopt;
  return SimulationWitness{std::move(rel)};
}

/// Direct check that `w` is a simulation from `a` to `b`.
inline bool is_simulation(const FiniteAutomaton& a, const FiniteAutomaton& b,
                          const SimulationWitness& w) {
  for (const auto& [p, q] : w.pairs) {
    if (a.is_final(p) && !b.is_final(q)) return false;
    if (!detail::matched(a, b, p, q, w.pairs, false)) return false;
  }
  return detail::covers_initial(a, b, w.pairs, false);
}

inline SimulationWitness converse(const SimulationWitness& w) {
  SimulationWitness out;
  for (const auto& [p, q] : w.pairs) out.pairs.insert({q, p});
  return out;
}

// Behavioural inclusion.

/// Input-output record of one run.
struct BehaviourTrace {
  std::vector<StepInput> inputs;
  std::vector<Vector> outputs;
  std::optional<std::size_t> halted_at;
  bool in_behaviour = true;  // the run belongs to the system's behaviour
};

/// Input space: discrete symbols plus `continuous` real-valued channels of
/// Theta_x.
struct InputSpace {
  std::vector<Symbol> alphabet;
  std::size_t continuous = 0;

  friend bool operator==(const InputSpace&, const InputSpace&) = default;
};

struct BehaviourModel {
  InputSpace inputs;
  std::size_t n_outputs = 0;
  std::function<BehaviourTrace(const std::vector<StepInput>&)> run;
};

/// Outputs y(prefix) for every prefix; a run is in the behaviour iff the
/// whole word is accepted.
inline BehaviourModel behaviour_of(const MaxPlusAutomaton& a) {
  return {{a.alphabet(), 0}, 1, [a](const std::vector<StepInput>& in) {
            BehaviourTrace t;
            t.inputs = in;
            Word w;
            for (const auto& s : in) {
              if (!s.theta.w) throw ModelError("max-plus automaton input needs a symbol");
              w.push_back(*s.theta.w);
              t.outputs.push_back({eval_output(a, w)});
            }
            t.in_behaviour = accepts(a, w);
            return t;
          }};
}

/// Open-loop systems take u and Theta_x from the inputs; closed-loop systems
/// only Theta_x.
inline BehaviourModel behaviour_of(const SmplSystem& s) {
  validate(s);
  const std::size_t cont = s.dims.n_r + (s.controller ? 0 : s.dims.n_u);
  return {{s.alphabet, cont}, s.dims.n_y, [s](const std::vector<StepInput>& in) {
            std::vector<StepInput> steps;
            for (const auto& x : in) {
              StepInput st = x;
              if (!s.controller && st.u.empty() && s.dims.n_u) {
                // continuous samples arrive in theta.r; split off u
                st.u.assign(x.theta.r.begin(),
                            x.theta.r.begin() + static_cast<std::ptrdiff_t>(s.dims.n_u));
                st.theta.r.erase(st.theta.r.begin(),
                                 st.theta.r.begin() + static_cast<std::ptrdiff_t>(s.dims.n_u));
              }
              if (st.v.empty()) st.v.assign(s.controller ? 0 : s.dims.n_v, kUnit);
              steps.push_back(std::move(st));
            }
            const SmplTrace tr = simulate(s, steps);
            BehaviourTrace t;
            t.inputs = in;
            for (const auto& r : tr.steps) t.outputs.push_back(r.y);
            t.halted_at = tr.halted_at;
            t.in_behaviour = !tr.halted_at;
            return t;
          }};
}

/// Deterministic run from the smallest initial mode.
inline BehaviourModel behaviour_of(const HybridAutomaton& h) {
  validate(h);
  return {{h.discrete_inputs, h.n_u}, h.n_y, [h](const std::vector<StepInput>& in) {
            std::vector<HybridInput> hs;
            for (const auto& x : in) hs.push_back({x.theta.theta_x(), x.theta.w});
            const HybridTrace tr = run(h, hs);
            BehaviourTrace t;
            t.inputs = in;
            for (const auto& r : tr.steps) t.outputs.push_back(r.y);
            t.halted_at = tr.halted_at;
            t.in_behaviour = !tr.halted_at;
            return t;
          }};
}

struct InclusionResult {
  bool included = true;
  std::optional<std::vector<StepInput>> witness;
  bool exhaustive = true;  // false when inputs were sampled
  std::size_t checked = 0;
};

/// For each input sequence of length 1..max_len, a run of `a` in its
/// behaviour must be a run of `b` with identical outputs. Exhaustive over
/// the alphabet when there are no continuous channels, otherwise `samples`
/// seeded sequences per length.
inline InclusionResult behavioural_inclusion_upto(const BehaviourModel& a,
                                                  const BehaviourModel& b, std::size_t max_len,
                                                  std::uint64_t seed = 42,
                                                  std::size_t samples = 200) {
  if (a.inputs.continuous != b.inputs.continuous || a.n_outputs != b.n_outputs ||
      std::set<Symbol>(a.inputs.alphabet.begin(), a.inputs.alphabet.end()) !=
          std::set<Symbol>(b.inputs.alphabet.begin(), b.inputs.alphabet.end()))
    throw ModelError("input/output spaces do not match");
  InclusionResult res;
  auto check = [&](const std::vector<StepInput>& seq) {
    ++res.checked;
    const BehaviourTrace ta = a.run(seq);
    if (!ta.in_behaviour) return true;
    const BehaviourTrace tb = b.run(seq);
    return tb.in_behaviour && tb.outputs == ta.outputs;
  };
  const std::vector<Symbol>& sigma = a.inputs.alphabet;
  if (a.inputs.continuous == 0) {
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (sigma.empty()) break;
      for (const auto& w : words_of_length(sigma, len)) {
        auto seq = word_inputs(w);
        if (!check(seq)) return {false, std::move(seq), true, res.checked};
      }
    }
    return res;
  }
  res.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, 9);
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<StepInput> seq(len);
      for (auto& st : seq) {
        for (std::size_t c = 0; c < a.inputs.continuous; ++c)
          st.theta.r.push_back(static_cast<double>(value(rng)));
        if (!sigma.empty())
          st.theta.w = sigma[std::uniform_int_distribution<std::size_t>(0, sigma.size() - 1)(rng)];
      }
      if (!check(seq)) return {false, std::move(seq), false, res.checked};
    }
  return res;
}

/// Lock-step comparison of an SMPL run and the deterministic run of its
/// constructed MAHA on the same inputs: modes, states, outputs and halt
/// points must agree exactly.
struct TraceComparison {
  bool equal = true;
  std::string detail;
};

inline TraceComparison compare_smpl_maha(const SmplSystem& s, const HybridAutomaton& h,
                                         const std::vector<StepInput>& inputs) {
  const bool closed = h.origin == HybridAutomaton::Origin::kClosedLoop;
  std::vector<HybridInput> hin;
  for (const auto& in : inputs)
    hin.push_back(closed ? HybridInput{in.theta.theta_x(), in.theta.w} : hybrid_input(in));
  const SmplTrace a = simulate(s, inputs);
  const HybridTrace b = run(h, hin);
  if (a.halted_at != b.halted_at)
    return {false, "halt points differ"};
  if (a.steps.size() != b.steps.size()) return {false, "trace lengths differ"};
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    const auto& ra = a.steps[k];
    const auto& rb = b.steps[k];
    const Vector xb = closed ? closed_loop_state_part(s, rb.x) : rb.x;
    if (ra.l != rb.q || ra.x != xb || ra.y != rb.y || ra.successors != rb.successors)
      return {false, "traces differ at k=" + std::to_string(k + 1)};
  }
  return {};
}

}  // namespace mpha
