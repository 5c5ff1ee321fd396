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

// Switching max-plus linear systems
//
//   l(k) = phi(l(k-1), x(k-1), u(k), v(k), Theta(k))
//   x(k) = f(l(k), x(k-1), u(k), Theta_x(k))
//   y(k) = h(l(k), x(k), u(k), Theta_x(k))
//
// Modes are numbered 1..n_L. The continuous input seen by f and h is the
// concatenation [u; r; p].

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mpha/dynamics.hpp"
#include "mpha/errors.hpp"
#include "mpha/finite_automaton.hpp"
#include "mpha/matrix.hpp"
#include "mpha/mpa.hpp"

namespace mpha {

using Mode = std::size_t;
using ModeSet = std::vector<Mode>;  // sorted, no duplicates

enum class SwitchingKind {
  kStateDependentAutonomous,
  kStateDependentControlled,
  kExternallyDriven,
  kConstrained,
  kConstrainedControlled,
};

inline std::string to_string(SwitchingKind k) {
  switch (k) {
    case SwitchingKind::kStateDependentAutonomous: return "state_dependent_autonomous";
    case SwitchingKind::kStateDependentControlled: return "state_dependent_controlled";
    case SwitchingKind::kExternallyDriven: return "externally_driven";
    case SwitchingKind::kConstrained: return "constrained";
    case SwitchingKind::kConstrainedControlled: return "constrained_controlled";
  }
  return "?";
}

inline SwitchingKind parse_switching_kind(const std::string& s) {
  for (auto k : {SwitchingKind::kStateDependentAutonomous,
                 SwitchingKind::kStateDependentControlled, SwitchingKind::kExternallyDriven,
                 SwitchingKind::kConstrained, SwitchingKind::kConstrainedControlled})
    if (to_string(k) == s) return k;
  throw ModelError("unknown switching kind '" + s + "'");
}

/// Exogenous signal Theta = [Theta_x; Theta_l] with Theta_x = [r; p] and
/// Theta_l = w.
struct ExogenousInput {
  Vector r;
  Vector p;
  std::optional<Symbol> w;

  Vector theta_x() const {
    Vector out = r;
    out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  friend bool operator==(const ExogenousInput&, const ExogenousInput&) = default;
};

/// Everything a switching rule may look at.
struct SwitchContext {
  std::optional<Mode> prev_mode;  // unset before the first event
  Vector x_prev;
  Vector u;
  Vector v;
  ExogenousInput theta;
  // f(l, x_prev, [u; Theta_x]) for a candidate mode l.
  std::function<Vector(Mode)> preview;
};

// Declarative switching rules.

/// Mode l is a successor iff w = symbols[l] and the candidate state
/// f(l, x_prev, .) is not all-epsilon (or has a finite entry).
struct SymbolGuarded {
  enum class Require { kNotAllEpsilon, kHasFinite };
  std::vector<Symbol> symbols;
  Require require = Require::kNotAllEpsilon;

  friend bool operator==(const SymbolGuarded&, const SymbolGuarded&) = default;
};

/// l(k) = modes[w(k)].
struct ExternalMap {
  std::map<Symbol, Mode> modes;

  friend bool operator==(const ExternalMap&, const ExternalMap&) = default;
};

/// Union of the targets of all matching entries; unset fields match anything.
struct TransitionTable {
  struct Entry {
    std::optional<Mode> from;
    std::optional<Symbol> w;
    std::optional<Vector> v;
    ModeSet to;

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;
};

/// First clause with x_i <= x_j + offset wins, else `otherwise`.
struct ThresholdSwitch {
  struct Clause {
    std::size_t i = 1;  // 1-based state indices
    std::size_t j = 1;
    ExtendedWeight offset = kUnit;
    Mode mode = 1;

    friend bool operator==(const Clause&, const Clause&) = default;
  };
  std::vector<Clause> clauses;
  Mode otherwise = 1;

  friend bool operator==(const ThresholdSwitch&, const ThresholdSwitch&) = default;
};

using SwitchingSpec = std::variant<SymbolGuarded, ExternalMap, TransitionTable, ThresholdSwitch>;

namespace detail {

inline ModeSet normalized(ModeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

inline ModeSet select_modes(const SwitchingSpec& spec, const SwitchContext& c) {
  ModeSet out;
  if (const auto* g = std::get_if<SymbolGuarded>(&spec)) {
    for (Mode l = 1; l <= g->symbols.size(); ++l) {
      if (c.theta.w != g->symbols[l - 1]) continue;
      const Vector next = c.preview(l);
      const bool ok = g->require == SymbolGuarded::Require::kHasFinite ? has_finite_entry(next)
                                                                       : !is_all_epsilon(next);
      if (ok) out.push_back(l);
    }
  } else if (const auto* e = std::get_if<ExternalMap>(&spec)) {
    if (c.theta.w) {
      auto it = e->modes.find(*c.theta.w);
      if (it != e->modes.end()) out.push_back(it->second);
    }
  } else if (const auto* t = std::get_if<TransitionTable>(&spec)) {
    for (const auto& en : t->entries) {
      if (en.from && en.from != c.prev_mode) continue;
      if (en.w && en.w != c.theta.w) continue;
      if (en.v && *en.v != c.v) continue;
      out.insert(out.end(), en.to.begin(), en.to.end());
    }
  } else {
    const auto& th = std::get<ThresholdSwitch>(spec);
    Mode m = th.otherwise;
    for (const auto& cl : th.clauses) {
      if (cl.i > c.x_prev.size() || cl.j > c.x_prev.size())
        throw ShapeError("threshold clause references a missing state component");
      if (c.x_prev[cl.i - 1] <= otimes(c.x_prev[cl.j - 1], cl.offset)) {
        m = cl.mode;
        break;
      }
    }
    out.push_back(m);
  }
  return detail::normalized(std::move(out));
}

/// Discrete inputs w under which the rule can move from `from` to `to`
/// (from == to covers staying). Rules that ignore w enable every symbol.
inline std::vector<Symbol> enabling_symbols(const SwitchingSpec& spec, Mode from, Mode to,
                                            const std::vector<Symbol>& alphabet) {
  std::set<Symbol> out;
  if (const auto* g = std::get_if<SymbolGuarded>(&spec)) {
    if (to >= 1 && to <= g->symbols.size()) out.insert(g->symbols[to - 1]);
  } else if (const auto* e = std::get_if<ExternalMap>(&spec)) {
    for (const auto& [w, m] : e->modes)
      if (m == to) out.insert(w);
  } else if (const auto* t = std::get_if<TransitionTable>(&spec)) {
    for (const auto& en : t->entries) {
      if (en.from && *en.from != from) continue;
      if (std::find(en.to.begin(), en.to.end(), to) == en.to.end()) continue;
      if (!en.w) return alphabet;
      out.insert(*en.w);
    }
  } else {
    return alphabet;
  }
  std::vector<Symbol> ordered;
  for (const auto& s : alphabet)
    if (out.count(s)) ordered.push_back(s);
  return ordered;
}

inline SwitchingKind default_kind(const SwitchingSpec& spec) {
  if (std::holds_alternative<SymbolGuarded>(spec)) return SwitchingKind::kConstrained;
  if (std::holds_alternative<ExternalMap>(spec)) return SwitchingKind::kExternallyDriven;
  if (std::holds_alternative<ThresholdSwitch>(spec))
    return SwitchingKind::kStateDependentAutonomous;
  const auto& t = std::get<TransitionTable>(spec);
  bool from = false, v = false;
  for (const auto& e : t.entries) {
    from = from || e.from.has_value();
    v = v || e.v.has_value();
  }
  if (v) return SwitchingKind::kConstrainedControlled;
  return from ? SwitchingKind::kConstrained : SwitchingKind::kExternallyDriven;
}

struct SwitchingRule {
  SwitchingKind kind = SwitchingKind::kStateDependentAutonomous;
  std::function<ModeSet(const SwitchContext&)> select;
  std::optional<SwitchingSpec> spec;  // set when built from a declarative rule

  static SwitchingRule from_spec(SwitchingSpec s, std::optional<SwitchingKind> k = {}) {
    SwitchingRule r;
    r.kind = k.value_or(default_kind(s));
    r.select = [s](const SwitchContext& c) { return select_modes(s, c); };
    r.spec = std::move(s);
    return r;
  }
};

/// Performance signal z handed to a controller: l(k-1), x(k-1), u(k-1), v(k-1).
struct PerformanceSignal {
  std::optional<Mode> l;
  Vector x;
  Vector u;
  Vector v;
};

/// u(k) = K (x) x(k-1) (+) E (x) Theta_x(k), v(k) = v.
struct StaticFeedback {
  TropicalMatrix K;  // n_u x n
  TropicalMatrix E;  // n_u x n_r
  Vector v;          // n_v

  friend bool operator==(const StaticFeedback&, const StaticFeedback&) = default;
};

struct ControllerHook {
  std::function<Vector(const PerformanceSignal&, const ExogenousInput&)> f_u;
  std::function<Vector(const PerformanceSignal&, const ExogenousInput&)> f_v;
  std::optional<StaticFeedback> static_feedback;
};

inline ControllerHook static_feedback_controller(StaticFeedback sf) {
  ControllerHook c;
  c.f_u = [sf](const PerformanceSignal& z, const ExogenousInput& t) {
    return vec_oplus(otimes(sf.K, z.x), otimes(sf.E, t.theta_x()));
  };
  c.f_v = [sf](const PerformanceSignal&, const ExogenousInput&) { return sf.v; };
  c.static_feedback = std::move(sf);
  return c;
}

/// Pass-through feedback: K = all-epsilon and E = identity, so u = Theta_x.
inline StaticFeedback pass_through_feedback(std::size_t n, std::size_t n_r, Vector v = {}) {
  return {TropicalMatrix::epsilon(n_r, n), TropicalMatrix::identity(n_r), std::move(v)};
}

struct SmplDims {
  std::size_t n = 0;
  std::size_t n_u = 0;
  std::size_t n_v = 0;
  std::size_t n_y = 0;
  std::size_t n_r = 0;  // |r| + |p|

  friend bool operator==(const SmplDims&, const SmplDims&) = default;
};

struct SmplSystem {
  SmplDims dims;
  std::vector<std::string> mode_names;
  std::vector<ModeDynamics> modes;
  SwitchingRule switching;
  Vector x0;
  std::optional<Mode> initial_mode;
  std::vector<Symbol> alphabet;  // values of w
  std::optional<ControllerHook> controller;
  bool from_automaton = false;  // built by from_mpa

  std::size_t n_modes() const noexcept { return modes.size(); }
  std::size_t input_width() const noexcept { return dims.n_u + dims.n_r; }
};

inline void validate(const SmplSystem& s) {
  if (s.modes.empty()) throw ModelError("SMPL system needs at least one mode");
  if (s.mode_names.size() != s.modes.size()) throw ModelError("one name per mode required");
  if (s.x0.size() != s.dims.n) throw ShapeError("x0 must have n entries");
  for (const auto& m : s.modes) m.check_dims(s.dims.n, s.input_width(), s.dims.n_y);
  if (!s.switching.select) throw ModelError("switching rule has no selector");
  if (s.initial_mode && (*s.initial_mode < 1 || *s.initial_mode > s.n_modes()))
    throw ModelError("initial mode out of range");
  if (const auto* g = s.switching.spec ? std::get_if<SymbolGuarded>(&*s.switching.spec) : nullptr)
    if (g->symbols.size() != s.n_modes())
      throw ModelError("symbol-guarded switching needs one symbol per mode");
  if (s.controller && s.controller->static_feedback) {
    const auto& sf = *s.controller->static_feedback;
    if (sf.K.rows() != s.dims.n_u || sf.K.cols() != s.dims.n || sf.E.rows() != s.dims.n_u ||
        sf.E.cols() != s.dims.n_r || sf.v.size() != s.dims.n_v)
      throw ShapeError("static feedback shapes do not match the system dims");
  }
}

struct SmplState {
  std::optional<Mode> l;
  Vector x;
  Vector u;
  Vector v;
};

inline SmplState initial_state(const SmplSystem& s) {
  return {s.initial_mode, s.x0, Vector(s.dims.n_u, kEps), Vector(s.dims.n_v, kEps)};
}

/// Inputs of one event; u and v are ignored when a controller is attached.
struct StepInput {
  Vector u;
  Vector v;
  ExogenousInput theta;

  friend bool operator==(const StepInput&, const StepInput&) = default;
};

inline std::vector<StepInput> word_inputs(const Word& w) {
  std::vector<StepInput> out;
  for (const auto& s : w) out.push_back({{}, {}, {{}, {}, s}});
  return out;
}

/// Word inputs for s with every continuous channel set to epsilon.
inline std::vector<StepInput> word_inputs(const SmplSystem& s, const Word& w) {
  std::vector<StepInput> out = word_inputs(w);
  for (auto& in : out) {
    if (!s.controller) {
      in.u.assign(s.dims.n_u, kEps);
      in.v.assign(s.dims.n_v, kEps);
    }
    in.theta.r.assign(s.dims.n_r, kEps);
  }
  return out;
}

struct SmplStepRecord {
  std::size_t k = 0;
  Mode l = 0;
  Vector x;
  Vector y;
  Vector u;
  Vector v;
  ModeSet successors;  // full successor set before the tie-break
};

struct SmplTrace {
  std::vector<SmplStepRecord> steps;
  std::optional<std::size_t> halted_at;  // event k whose successor set was empty
};

/// u(k), v(k): controller output, or the inputs verbatim.
inline std::pair<Vector, Vector> control_inputs(const SmplSystem& s, const SmplState& prev,
                                                const StepInput& in) {
  if (in.theta.r.size() + in.theta.p.size() != s.dims.n_r)
    throw ShapeError("exogenous input does not match n_r");
  Vector u = in.u, v = in.v;
  if (s.controller) {
    const PerformanceSignal z{prev.l, prev.x, prev.u, prev.v};
    if (s.controller->f_u) u = s.controller->f_u(z, in.theta);
    if (s.controller->f_v) v = s.controller->f_v(z, in.theta);
  }
  if (u.size() != s.dims.n_u || v.size() != s.dims.n_v)
    throw ShapeError("control inputs do not match n_u / n_v");
  return {std::move(u), std::move(v)};
}

inline Vector continuous_input(const Vector& u, const ExogenousInput& theta) {
  Vector c = u;
  const Vector t = theta.theta_x();
  c.insert(c.end(), t.begin(), t.end());
  return c;
}

/// phi(l_prev, x_prev, u, v, Theta), checked against 1..n_L.
inline ModeSet successor_modes(const SmplSystem& s, std::optional<Mode> l_prev,
                               const Vector& x_prev, const Vector& u, const Vector& v,
                               const ExogenousInput& theta) {
  const Vector c = continuous_input(u, theta);
  SwitchContext ctx{l_prev, x_prev, u, v, theta, [&](Mode l) {
                      if (l < 1 || l > s.n_modes()) throw ModelError("mode out of range");
                      return s.modes[l - 1].next_state(x_prev, c);
                    }};
  ModeSet out = detail::normalized(s.switching.select(ctx));
  for (Mode m : out)
    if (m < 1 || m > s.n_modes())
      throw ModelError("switching rule returned mode " + std::to_string(m) + " outside 1.." +
                       std::to_string(s.n_modes()));
  return out;
}

/// One event: mode, then state, then output. Ties go to the smallest mode.
inline SmplStepRecord step(const SmplSystem& s, const SmplState& prev, const StepInput& in,
                           std::size_t k = 1) {
  auto [u, v] = control_inputs(s, prev, in);
  SmplStepRecord rec;
  rec.k = k;
  rec.successors = successor_modes(s, prev.l, prev.x, u, v, in.theta);
  if (rec.successors.empty()) throw NoSuccessorMode(k);
  rec.l = rec.successors.front();
  const Vector c = continuous_input(u, in.theta);
  const ModeDynamics& dyn = s.modes[rec.l - 1];
  rec.x = dyn.next_state(prev.x, c);
  rec.y = dyn.output(rec.x, c);
  rec.u = std::move(u);
  rec.v = std::move(v);
  return rec;
}

inline SmplTrace simulate(const SmplSystem& s, const std::vector<StepInput>& inputs) {
  SmplTrace trace;
  SmplState state = initial_state(s);
  for (std::size_t k = 1; k <= inputs.size(); ++k) {
    try {
      SmplStepRecord rec = step(s, state, inputs[k - 1], k);
      state = {rec.l, rec.x, rec.u, rec.v};
      trace.steps.push_back(std::move(rec));
    } catch (const NoSuccessorMode& e) {
      trace.halted_at = e.event();
      break;
    }
  }
  return trace;
}

/// A^(l) = mu(sigma_l)^T, C = beta^T, x0 = alpha; mode l is enabled iff
/// w = sigma_l and A^(l) (x) x != epsilon.
inline SmplSystem from_mpa(const MaxPlusAutomaton& a) {
  SmplSystem s;
  const std::size_t n = a.num_states();
  s.dims = {n, 0, 0, 1, 0};
  s.alphabet = a.alphabet();
  s.mode_names = a.alphabet();
  TropicalMatrix c(1, n);
  for (std::size_t j = 0; j < n; ++j) c(0, j) = a.beta()[j];
  for (const auto& sym : a.alphabet())
    s.modes.emplace_back(linear_form(a.mu(sym).transpose(), c));
  s.switching = SwitchingRule::from_spec(SymbolGuarded{a.alphabet()});
  s.x0 = a.alpha();
  s.from_automaton = true;
  return s;
}

/// Random event inputs: w uniform over the alphabet, u (open loop only) and
/// Theta_x with integer entries in [0, 5].
inline std::vector<StepInput> random_step_inputs(const SmplSystem& s, std::size_t len,
                                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 5);
  std::vector<StepInput> out(len);
  for (auto& in : out) {
    if (!s.controller) {
      for (std::size_t i = 0; i < s.dims.n_u; ++i) in.u.push_back(static_cast<double>(value(rng)));
      in.v.assign(s.dims.n_v, kUnit);
    }
    for (std::size_t i = 0; i < s.dims.n_r; ++i)
      in.theta.r.push_back(static_cast<double>(value(rng)));
    if (!s.alphabet.empty())
      in.theta.w = s.alphabet[std::uniform_int_distribution<std::size_t>(
          0, s.alphabet.size() - 1)(rng)];
  }
  return out;
}

// Argument-usage probing.

enum class SwitchArgument { kPrevMode, kState, kControl, kDiscreteControl, kSymbol, kExogenous };

inline std::set<SwitchArgument> allowed_arguments(SwitchingKind k) {
  using A = SwitchArgument;
  switch (k) {
    case SwitchingKind::kStateDependentAutonomous: return {A::kPrevMode, A::kState};
    case SwitchingKind::kStateDependentControlled:
      return {A::kPrevMode, A::kState, A::kControl, A::kDiscreteControl};
    case SwitchingKind::kExternallyDriven: return {A::kSymbol};
    case SwitchingKind::kConstrained: return {A::kPrevMode, A::kState, A::kSymbol, A::kExogenous};
    case SwitchingKind::kConstrainedControlled:
      return {A::kPrevMode, A::kState,  A::kControl,
              A::kDiscreteControl, A::kSymbol, A::kExogenous};
  }
  return {};
}

namespace detail {

struct ProbePools {
  std::mt19937_64 rng;

  ExtendedWeight weight(double eps_share) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < eps_share) return kEps;
    return static_cast<double>(std::uniform_int_distribution<int>(-3, 6)(rng));
  }
  Vector vec(std::size_t n, double eps_share) {
    Vector v(n);
    for (auto& w : v) w = weight(eps_share);
    return v;
  }
  Vector state(std::size_t n) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: return Vector(n, kEps);
      case 1: {
        Vector v(n, kEps);
        if (n) v[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = weight(0);
        return v;
      }
      default: return vec(n, 0.3);
    }
  }
  Vector control(std::size_t n) {
    Vector v(n);
    for (auto& w : v) w = static_cast<double>(std::uniform_int_distribution<int>(0, 2)(rng));
    return v;
  }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
  }
};

struct Probe {
  std::optional<Mode> l;
  Vector x, u, v;
  ExogenousInput theta;
};

inline std::optional<ModeSet> probe(const SmplSystem& s, const Probe& p) {
  try {
    return successor_modes(s, p.l, p.x, p.u, p.v, p.theta);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Arguments whose variation alone changed the successor set on some probe.
inline std::set<SwitchArgument> observed_arguments(const SmplSystem& s,
                                                   std::uint64_t seed = 7,
                                                   std::size_t probes = 200) {
  using A = SwitchArgument;
  detail::ProbePools pools{std::mt19937_64(seed)};
  std::vector<std::optional<Mode>> modes{std::nullopt};
  for (Mode l = 1; l <= s.n_modes(); ++l) modes.push_back(l);
  std::vector<std::optional<Symbol>> symbols{std::nullopt};
  for (const auto& w : s.alphabet) symbols.push_back(w);
  const std::size_t nr = s.dims.n_r;
  auto random_probe = [&] {
    detail::Probe p;
    p.l = pools.pick(modes);
    p.x = pools.state(s.dims.n);
    p.u = pools.vec(s.dims.n_u, 0.2);
    p.v = pools.control(s.dims.n_v);
    p.theta = {pools.vec(nr, 0.2), {}, pools.pick(symbols)};
    return p;
  };
  std::set<A> seen;
  for (std::size_t i = 0; i < probes; ++i) {
    const detail::Probe base = random_probe();
    const auto r0 = detail::probe(s, base);
    for (A arg : {A::kPrevMode, A::kState, A::kControl, A::kDiscreteControl, A::kSymbol,
                  A::kExogenous}) {
      if (seen.count(arg)) continue;
      detail::Probe p = base;
      const detail::Probe other = random_probe();
      switch (arg) {
        case A::kPrevMode: p.l = other.l; break;
        case A::kState: p.x = other.x; break;
        case A::kControl: p.u = other.u; break;
        case A::kDiscreteControl: p.v = other.v; break;
        case A::kSymbol: p.theta.w = other.theta.w; break;
        case A::kExogenous: p.theta.r = other.theta.r; break;
      }
      if (detail::probe(s, p) != r0) seen.insert(arg);
    }
  }
  return seen;
}

/// Least kind whose allowed arguments cover the observed ones.
inline SwitchingKind infer_switching_kind(const SmplSystem& s, std::uint64_t seed = 7) {
  const auto seen = observed_arguments(s, seed);
  for (auto k : {SwitchingKind::kStateDependentAutonomous, SwitchingKind::kExternallyDriven,
                 SwitchingKind::kConstrained, SwitchingKind::kStateDependentControlled,
                 SwitchingKind::kConstrainedControlled}) {
    const auto allowed = allowed_arguments(k);
    if (std::includes(allowed.begin(), allowed.end(), seen.begin(), seen.end())) return k;
  }
  throw ModelError("switching rule reads arguments no kind allows");
}

/// The declared kind, after checking the rule ignores what the kind forbids.
inline SwitchingKind classify_switching(const SmplSystem& s, std::uint64_t seed = 7) {
  const auto seen = observed_arguments(s, seed);
  const auto allowed = allowed_arguments(s.switching.kind);
  for (auto a : seen)
    if (!allowed.count(a))
      throw ModelError("switching rule declared " + to_string(s.switching.kind) +
                       " but depends on an argument that kind excludes");
  return s.switching.kind;
}

}  // namespace mpha
