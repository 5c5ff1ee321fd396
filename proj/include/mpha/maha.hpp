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

// Max-algebraic hybrid automata (Q, X, U, V, Y, Init, F, H, Inv, E, G, R, Lambda).
//
// A step from (q, x) under (u, v) first selects the target modes: q itself
// when Inv(q) holds at (x, u, v), and q' for each edge (q, q') whose guard
// holds at (x, u, v). Each target q' then evolves x' = F(q', x, u) and
// applies the edge reset. Outputs are y = H(q', x', u).

#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpha/dynamics.hpp"
#include "mpha/errors.hpp"
#include "mpha/finite_automaton.hpp"
#include "mpha/matrix_form.hpp"
#include "mpha/smpl.hpp"

namespace mpha {

struct HybridInput {
  Vector u;                // continuous input
  std::optional<Symbol> v;  // discrete input

  friend bool operator==(const HybridInput&, const HybridInput&) = default;
};

struct HybridState {
  Mode q = 1;
  Vector x;

  friend bool operator==(const HybridState&, const HybridState&) = default;
};

using HybridPredicate = std::function<bool(const Vector& x, const HybridInput& in)>;

struct HybridEdge {
  Mode from = 1;
  Mode to = 1;
  HybridPredicate guard;
  std::vector<Symbol> labels;  // discrete inputs under which the guard can hold
  // x' -> admissible x''; empty means the identity reset.
  std::function<std::vector<Vector>(const Vector&)> reset;
};

struct HybridAutomaton {
  enum class Origin { kDirect, kOpenLoop, kClosedLoop };

  std::vector<std::string> mode_names;
  std::size_t n = 0;
  std::size_t n_u = 0;
  std::size_t n_y = 0;
  std::vector<Symbol> discrete_inputs;
  std::vector<HybridState> init;
  std::vector<ModeDynamics> dynamics;
  std::vector<HybridPredicate> invariant;
  std::vector<std::vector<Symbol>> invariant_labels;
  std::vector<HybridEdge> edges;
  std::function<bool(const HybridState&, const HybridInput&)> admissible;  // empty: all

  Origin origin = Origin::kDirect;
  std::shared_ptr<const SmplSystem> source;  // set by the SMPL constructions

  std::size_t n_modes() const noexcept { return dynamics.size(); }
};

inline void validate(const HybridAutomaton& h) {
  const std::size_t m = h.n_modes();
  if (m == 0) throw ModelError("hybrid automaton needs at least one mode");
  if (h.mode_names.size() != m || h.invariant.size() != m || h.invariant_labels.size() != m)
    throw ModelError("mode names, dynamics and invariants must agree in number");
  for (const auto& d : h.dynamics) d.check_dims(h.n, h.n_u, h.n_y);
  for (const auto& s : h.init) {
    if (s.q < 1 || s.q > m) throw ModelError("initial mode out of range");
    if (s.x.size() != h.n) throw ShapeError("initial state has the wrong dimension");
  }
  for (const auto& e : h.edges) {
    if (e.from < 1 || e.from > m || e.to < 1 || e.to > m)
      throw ModelError("edge refers to an unknown mode");
    if (!e.guard) throw ModelError("edge without guard");
  }
}

/// All successor hybrid states, ordered by mode. Empty means blocked.
inline std::vector<HybridState> hybrid_step(const HybridAutomaton& h, const HybridState& s,
                                            const HybridInput& in) {
  if (s.q < 1 || s.q > h.n_modes()) throw ModelError("mode out of range");
  if (h.admissible && !h.admissible(s, in))
    throw ModelError("input not admissible in mode " + std::to_string(s.q));
  std::vector<HybridState> out;
  if (h.invariant[s.q - 1](s.x, in))
    out.push_back({s.q, h.dynamics[s.q - 1].next_state(s.x, in.u)});
  for (const auto& e : h.edges) {
    if (e.from != s.q || !e.guard(s.x, in)) continue;
    Vector next = h.dynamics[e.to - 1].next_state(s.x, in.u);
    if (!e.reset) {
      out.push_back({e.to, std::move(next)});
      continue;
    }
    for (auto& r : e.reset(next)) out.push_back({e.to, std::move(r)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HybridState& a, const HybridState& b) { return a.q < b.q; });
  std::vector<HybridState> unique;
  for (auto& st : out)
    if (std::find(unique.begin(), unique.end(), st) == unique.end())
      unique.push_back(std::move(st));
  return unique;
}

inline Vector hybrid_output(const HybridAutomaton& h, const HybridState& s,
                            const HybridInput& in) {
  return h.dynamics.at(s.q - 1).output(s.x, in.u);
}

struct HybridStepRecord {
  std::size_t k = 0;
  Mode q = 1;
  Vector x;
  Vector y;
  ModeSet successors;
};

struct HybridTrace {
  std::vector<HybridStepRecord> steps;
  std::optional<std::size_t> halted_at;
};

/// Deterministic run from `start`, always following the smallest successor
/// mode.
inline HybridTrace run(const HybridAutomaton& h, HybridState start,
                       const std::vector<HybridInput>& inputs) {
  HybridTrace trace;
  for (std::size_t k = 1; k <= inputs.size(); ++k) {
    auto next = hybrid_step(h, start, inputs[k - 1]);
    if (next.empty()) {
      trace.halted_at = k;
      break;
    }
    HybridStepRecord rec;
    rec.k = k;
    for (const auto& s : next)
      if (rec.successors.empty() || rec.successors.back() != s.q) rec.successors.push_back(s.q);
    start = next.front();
    rec.q = start.q;
    rec.x = start.x;
    rec.y = hybrid_output(h, start, inputs[k - 1]);
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

/// Runs from the initial state with the smallest mode.
inline HybridTrace run(const HybridAutomaton& h, const std::vector<HybridInput>& inputs) {
  if (h.init.empty()) throw ModelError("hybrid automaton has no initial state");
  auto first = std::min_element(h.init.begin(), h.init.end(),
                                [](const auto& a, const auto& b) { return a.q < b.q; });
  return run(h, *first, inputs);
}

namespace detail {

inline std::vector<Symbol> labels_for(const SmplSystem& s, Mode from, Mode to) {
  if (!s.switching.spec) return s.alphabet;
  return enabling_symbols(*s.switching.spec, from, to, s.alphabet);
}

inline void add_switching_structure(HybridAutomaton& h, const SmplSystem& s,
                                    std::function<ModeSet(Mode, const Vector&,
                                                          const HybridInput&)> phi) {
  const std::size_t m = s.n_modes();
  auto shared_phi = std::make_shared<decltype(phi)>(std::move(phi));
  for (Mode q = 1; q <= m; ++q) {
    h.invariant.push_back([shared_phi, q](const Vector& x, const HybridInput& in) {
      const ModeSet next = (*shared_phi)(q, x, in);
      return std::binary_search(next.begin(), next.end(), q);
    });
    h.invariant_labels.push_back(labels_for(s, q, q));
  }
  for (Mode q = 1; q <= m; ++q)
    for (Mode t = 1; t <= m; ++t) {
      if (q == t) continue;
      HybridEdge e;
      e.from = q;
      e.to = t;
      e.guard = [shared_phi, q, t](const Vector& x, const HybridInput& in) {
        const ModeSet next = (*shared_phi)(q, x, in);
        return std::binary_search(next.begin(), next.end(), t);
      };
      e.labels = labels_for(s, q, t);
      h.edges.push_back(std::move(e));
    }
}

inline ExogenousInput exogenous_part(const Vector& u, std::size_t offset) {
  ExogenousInput t;
  t.r.assign(u.begin() + static_cast<std::ptrdiff_t>(offset), u.end());
  return t;
}

}  // namespace detail

/// Open-loop construction. Continuous input is [u; r; p], discrete input is
/// w; Inv(q) holds iff q is a successor of q and G(q, q') iff q' is.
inline HybridAutomaton from_smpl_open(const SmplSystem& s) {
  validate(s);
  if (s.controller) throw ModelError("system is closed-loop; use from_smpl_closed");
  if (s.dims.n_v != 0) throw ModelError("open-loop construction needs n_v = 0");
  auto src = std::make_shared<const SmplSystem>(s);
  HybridAutomaton h;
  h.mode_names = s.mode_names;
  h.n = s.dims.n;
  h.n_u = s.input_width();
  h.n_y = s.dims.n_y;
  h.discrete_inputs = s.alphabet;
  h.dynamics = s.modes;
  h.origin = HybridAutomaton::Origin::kOpenLoop;
  h.source = src;
  detail::add_switching_structure(
      h, s, [src](Mode q, const Vector& x, const HybridInput& in) {
        const std::size_t nu = src->dims.n_u;
        if (in.u.size() != src->input_width()) throw ShapeError("continuous input width");
        Vector u(in.u.begin(), in.u.begin() + static_cast<std::ptrdiff_t>(nu));
        ExogenousInput t = detail::exogenous_part(in.u, nu);
        t.w = in.v;
        return successor_modes(*src, q, x, u, {}, t);
      });
  if (s.initial_mode) {
    h.init.push_back({*s.initial_mode, s.x0});
  } else {
    for (Mode q = 1; q <= s.n_modes(); ++q) h.init.push_back({q, s.x0});
  }
  return h;
}

/// Splits an open-loop MAHA input back into SMPL inputs.
inline StepInput smpl_input(const SmplSystem& s, const HybridInput& in) {
  StepInput st;
  st.u.assign(in.u.begin(), in.u.begin() + static_cast<std::ptrdiff_t>(s.dims.n_u));
  st.theta = detail::exogenous_part(in.u, s.dims.n_u);
  st.theta.w = in.v;
  return st;
}

/// Open-loop MAHA input for an SMPL event (u and Theta_x concatenated).
inline HybridInput hybrid_input(const StepInput& in) {
  return {continuous_input(in.u, in.theta), in.theta.w};
}

namespace detail {

/// Closed-loop mode dynamics over z = [l; x; u; v] with input [Theta_x; 1].
inline MatrixForm closed_loop_form(const MatrixForm& f, const StaticFeedback& sf,
                                   const SmplDims& d, Mode q) {
  const std::size_t n = d.n, nu = d.n_u, nv = d.n_v, nr = d.n_r;
  const std::size_t N = 1 + n + nu + nv;
  const std::size_t cx = 1, cu = 1 + n, cv = 1 + n + nu;
  const std::size_t konst = nr;  // constant column of the new input
  auto block = [](const TropicalMatrix& m, std::size_t c0, std::size_t cols) {
    TropicalMatrix out(m.rows(), cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, c0 + j);
    return out;
  };
  MatrixForm out;
  out.constant_input = true;
  for (std::size_t l = 0; l < f.A.size(); ++l) {
    const TropicalMatrix bu = block(f.B[l], 0, nu);
    const TropicalMatrix br = block(f.B[l], nu, nr);
    const TropicalMatrix ax = mat_oplus(f.A[l], mat_otimes(bu, sf.K));
    const TropicalMatrix bx = mat_oplus(mat_otimes(bu, sf.E), br);
    TropicalMatrix a(N, N), b(N, nr + 1);
    b(0, konst) = static_cast<double>(q);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(cx + i, cx + j) = ax(i, j);
      for (std::size_t j = 0; j < nr; ++j) b(cx + i, j) = bx(i, j);
      if (f.constant_input) b(cx + i, konst) = f.B[l](i, nu + nr);
    }
    for (std::size_t i = 0; i < nu; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(cu + i, cx + j) = sf.K(i, j);
      for (std::size_t j = 0; j < nr; ++j) b(cu + i, j) = sf.E(i, j);
    }
    for (std::size_t i = 0; i < nv; ++i) b(cv + i, konst) = sf.v[i];
    out.A.push_back(std::move(a));
    out.B.push_back(std::move(b));
  }
  for (std::size_t m = 0; m < f.C.size(); ++m) {
    TropicalMatrix c(d.n_y, N), dd(d.n_y, nr + 1);
    for (std::size_t i = 0; i < d.n_y; ++i) {
      for (std::size_t j = 0; j < n; ++j) c(i, cx + j) = f.C[m](i, j);
      for (std::size_t j = 0; j < nu; ++j) c(i, cu + j) = f.D[m](i, j);
      for (std::size_t j = 0; j < nr; ++j) dd(i, j) = f.D[m](i, nu + j);
      if (f.constant_input) dd(i, konst) = f.D[m](i, nu + nr);
    }
    out.C.push_back(std::move(c));
    out.D.push_back(std::move(dd));
  }
  validate(out);
  return out;
}

}  // namespace detail

/// Closed-loop construction over z(k) = [l(k-1), x(k-1), u(k-1), v(k-1)] with
/// continuous input Theta_x and discrete input w. Needs a static feedback
/// controller and max-min-plus mode dynamics.
inline HybridAutomaton from_smpl_closed(const SmplSystem& s) {
  validate(s);
  if (!s.controller) throw ModelError("system has no controller; use from_smpl_open");
  if (!s.controller->static_feedback)
    throw ModelError("controller is not representable as a max-min-plus map");
  const StaticFeedback sf = *s.controller->static_feedback;
  const SmplDims d = s.dims;
  auto src = std::make_shared<const SmplSystem>(s);
  HybridAutomaton h;
  h.mode_names = s.mode_names;
  h.n = 1 + d.n + d.n_u + d.n_v;
  h.n_u = d.n_r;
  h.n_y = d.n_y;
  h.discrete_inputs = s.alphabet;
  h.origin = HybridAutomaton::Origin::kClosedLoop;
  h.source = src;
  for (Mode q = 1; q <= s.n_modes(); ++q) {
    auto mf = s.modes[q - 1].to_matrix_form(d.n, s.input_width());
    if (!mf) throw ModelError("mode " + std::to_string(q) + " dynamics are not max-min-plus");
    h.dynamics.emplace_back(detail::closed_loop_form(*mf, sf, d, q));
  }
  detail::add_switching_structure(
      h, s, [src, sf](Mode q, const Vector& z, const HybridInput& in) {
        const std::size_t n = src->dims.n;
        if (z.size() != 1 + n + src->dims.n_u + src->dims.n_v)
          throw ShapeError("augmented state width");
        Vector x(z.begin() + 1, z.begin() + 1 + static_cast<std::ptrdiff_t>(n));
        ExogenousInput t = detail::exogenous_part(in.u, 0);
        t.w = in.v;
        const Vector u = vec_oplus(otimes(sf.K, x), otimes(sf.E, t.theta_x()));
        return successor_modes(*src, q, x, u, sf.v, t);
      });
  Vector z0(h.n, kEps);
  std::copy(s.x0.begin(), s.x0.end(), z0.begin() + 1);
  if (s.initial_mode) {
    z0[0] = static_cast<double>(*s.initial_mode);
    h.init.push_back({*s.initial_mode, z0});
  } else {
    for (Mode q = 1; q <= s.n_modes(); ++q) h.init.push_back({q, z0});
  }
  return h;
}

/// x(k) embedded in a closed-loop augmented state.
inline Vector closed_loop_state_part(const SmplSystem& s, const Vector& z) {
  return Vector(z.begin() + 1, z.begin() + 1 + static_cast<std::ptrdiff_t>(s.dims.n));
}

// Finite abstractions.

inline constexpr const char* kTickSymbol = "1";

inline std::string abstraction_state_name(Mode q, const VarLabel& v) {
  return "(" + std::to_string(q) + "," + to_string(v) + ")";
}

/// One-step transition system over Q x (X_var u U_var) with alphabet V u {1}.
/// w-transitions carry the discrete inputs under which each edge guard can
/// hold.
inline FiniteAutomaton finite_abstraction(const HybridAutomaton& h) {
  validate(h);
  std::vector<MatrixForm> forms;
  for (Mode q = 1; q <= h.n_modes(); ++q) {
    auto mf = h.dynamics[q - 1].to_matrix_form(h.n, h.n_u);
    if (!mf)
      throw ModelError("abstraction precondition violated: mode " + std::to_string(q) +
                       " dynamics are not max-min-plus");
    forms.push_back(std::move(*mf));
  }
  for (const auto& e : h.edges)
    if (e.reset) throw ModelError("abstraction precondition violated: edge with a non-identity reset");
  for (const auto& v : h.discrete_inputs)
    if (v == kTickSymbol) throw ModelError("discrete input '1' clashes with the step label");

  FiniteAutomaton fa(h.discrete_inputs);
  const std::size_t tick = fa.add_symbol(kTickSymbol);
  std::vector<VarLabel> vars;
  for (std::size_t i = 0; i < h.n; ++i) vars.push_back(state_label(i));
  for (std::size_t p = 0; p < h.n_u; ++p) vars.push_back(input_label(p));
  auto id = [&](Mode q, const VarLabel& v) {
    return fa.state_index(abstraction_state_name(q, v));
  };
  for (Mode q = 1; q <= h.n_modes(); ++q)
    for (const auto& v : vars) fa.add_state(abstraction_state_name(q, v));

  for (Mode q = 1; q <= h.n_modes(); ++q) {
    const auto gf = transition_graph_F(forms[q - 1]);
    const auto gh = transition_graph_H(forms[q - 1]);
    for (const auto& [a, b] : gf.edges) {
      fa.add_transition(id(q, a), tick, id(q, b));
      if (a.type == VarLabel::Type::kInput) fa.set_initial(id(q, a));
    }
    for (const auto& [a, b] : gh.edges) fa.set_final(id(q, a));
  }
  for (const auto& s : h.init)
    for (std::size_t j = 0; j < h.n; ++j)
      if (!s.x[j].is_epsilon()) fa.set_initial(id(s.q, state_label(j)));
  for (const auto& e : h.edges)
    for (const auto& w : e.labels)
      for (std::size_t i = 0; i < h.n; ++i)
        fa.add_transition(id(e.from, state_label(i)), fa.symbol_index(w),
                          id(e.to, state_label(i)));
  return fa;
}

/// Fused abstraction of a MAHA obtained from a max-plus automaton: states
/// Q x X_var, alphabet Sigma, and (q, x_i) -sigma-> (q', x_j) whenever sigma
/// moves q to q' (staying included) and [A^(q')]_{ji} != eps.
inline FiniteAutomaton specialized_abstraction_for_mpa_translation(const HybridAutomaton& h) {
  if (h.origin != HybridAutomaton::Origin::kOpenLoop || !h.source ||
      !h.source->from_automaton)
    throw ModelError("fused abstraction needs a MAHA built from a max-plus automaton");
  const SmplSystem& s = *h.source;
  FiniteAutomaton fa(h.discrete_inputs);
  for (Mode q = 1; q <= h.n_modes(); ++q)
    for (std::size_t i = 0; i < h.n; ++i) fa.add_state(abstraction_state_name(q, state_label(i)));
  auto id = [&](Mode q, std::size_t i) {
    return fa.state_index(abstraction_state_name(q, state_label(i)));
  };
  std::vector<TropicalMatrix> a;
  for (const auto& d : s.modes) a.push_back(d.matrix_form()->A.front());
  const TropicalMatrix& c = s.modes.front().matrix_form()->C.front();
  for (Mode q = 1; q <= h.n_modes(); ++q) {
    for (Mode t = 1; t <= h.n_modes(); ++t) {
      const auto labels = t == q ? h.invariant_labels[q - 1] : [&] {
        std::vector<Symbol> out;
        for (const auto& e : h.edges)
          if (e.from == q && e.to == t) out.insert(out.end(), e.labels.begin(), e.labels.end());
        return out;
      }();
      for (const auto& sigma : labels)
        for (std::size_t i = 0; i < h.n; ++i)
          for (std::size_t j = 0; j < h.n; ++j)
            if (!a[t - 1](j, i).is_epsilon())
              fa.add_transition(id(q, i), fa.symbol_index(sigma), id(t, j));
    }
    for (std::size_t i = 0; i < h.n; ++i) {
      if (!s.x0[i].is_epsilon()) fa.set_initial(id(q, i));
      if (!c(0, i).is_epsilon()) fa.set_final(id(q, i));
    }
  }
  return fa;
}

}  // namespace mpha
