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

// Max-min-plus conjunctive form: a min of max-plus projections, no projection
// pointwise below another. Produced by distributing min over max and pruning
// dominated projections after every step.

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/expression.hpp"
#include "mpha/matrix.hpp"

namespace mpha {

/// (+)_i a_i (x) x_i (+) (+)_p b_p (x) u_p (+) c.
struct MaxPlusProjection {
  Vector state;
  Vector input;
  ExtendedWeight constant = kEps;

  friend bool operator==(const MaxPlusProjection&, const MaxPlusProjection&) = default;
};

inline ExtendedWeight eval(const MaxPlusProjection& p, const Vector& x, const Vector& u = {}) {
  if (x.size() != p.state.size() || u.size() < p.input.size())
    throw ShapeError("projection evaluated at a point of the wrong dimension");
  ExtendedWeight v = p.constant;
  for (std::size_t i = 0; i < x.size(); ++i) v = oplus(v, otimes(p.state[i], x[i]));
  for (std::size_t i = 0; i < p.input.size(); ++i) v = oplus(v, otimes(p.input[i], u[i]));
  return v;
}

/// True iff every coefficient of p is >= the matching coefficient of q, so
/// that q <= p as functions.
inline bool dominates(const MaxPlusProjection& p, const MaxPlusProjection& q) {
  if (p.state.size() != q.state.size() || p.input.size() != q.input.size())
    throw ShapeError("dominance between projections of different arity");
  return leq(q.state, p.state) && leq(q.input, p.input) && q.constant <= p.constant;
}

struct ConjunctiveForm {
  std::vector<MaxPlusProjection> projections;

  std::size_t size() const noexcept { return projections.size(); }
  friend bool operator==(const ConjunctiveForm&, const ConjunctiveForm&) = default;
};

inline ExtendedWeight eval(const ConjunctiveForm& f, const Vector& x, const Vector& u = {}) {
  if (f.projections.empty()) throw ModelError("empty conjunctive form");
  ExtendedWeight v = kTop;
  for (const auto& p : f.projections) v = oplus_dual(v, eval(p, x, u));
  return v;
}

/// No projection lies below a different one.
inline bool is_antichain(const ConjunctiveForm& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j && dominates(f.projections[j], f.projections[i])) return false;
  return true;
}

namespace detail {

inline bool lex_less(const MaxPlusProjection& a, const MaxPlusProjection& b) {
  auto key = [](const MaxPlusProjection& p) {
    std::vector<double> k;
    for (auto w : p.state) k.push_back(w.value());
    for (auto w : p.input) k.push_back(w.value());
    k.push_back(p.constant.value());
    return k;
  };
  return key(a) < key(b);
}

// Drops duplicates and every projection that dominates another one (it never
// attains the min), then sorts lexicographically.
inline std::vector<MaxPlusProjection> prune(std::vector<MaxPlusProjection> ps) {
  std::sort(ps.begin(), ps.end(), lex_less);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<MaxPlusProjection> kept;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ps.size() && !redundant; ++j)
      redundant = i != j && dominates(ps[i], ps[j]);
    if (!redundant) kept.push_back(ps[i]);
  }
  return kept;
}

inline MaxPlusProjection coefficientwise_max(const MaxPlusProjection& a,
                                             const MaxPlusProjection& b) {
  return {vec_oplus(a.state, b.state), vec_oplus(a.input, b.input),
          oplus(a.constant, b.constant)};
}

inline MaxPlusProjection shifted(MaxPlusProjection p, ExtendedWeight c) {
  for (auto& w : p.state) w = otimes(w, c);
  for (auto& w : p.input) w = otimes(w, c);
  p.constant = otimes(p.constant, c);
  return p;
}

inline std::vector<MaxPlusProjection> conjunctive(const MmpsExpression& e, std::size_t n,
                                                  std::size_t nu) {
  using K = MmpsExpression::Kind;
  auto blank = [&] { return MaxPlusProjection{Vector(n, kEps), Vector(nu, kEps), kEps}; };
  switch (e.kind()) {
    case K::kVar: {
      auto p = blank();
      p.state.at(e.index()) = kUnit;
      return {p};
    }
    case K::kInputVar: {
      auto p = blank();
      p.input.at(e.index()) = kUnit;
      return {p};
    }
    case K::kConst: {
      auto p = blank();
      p.constant = e.value();
      return {p};
    }
    case K::kPlus: {
      const bool left_const = is_constant(e.left());
      const MmpsExpression body = left_const ? e.right() : e.left();
      const ExtendedWeight c = eval(left_const ? e.left() : e.right(), {}, {});
      std::vector<MaxPlusProjection> out;
      for (const auto& p : conjunctive(body, n, nu)) out.push_back(shifted(p, c));
      return prune(std::move(out));
    }
    case K::kMin: {
      auto out = conjunctive(e.left(), n, nu);
      auto rhs = conjunctive(e.right(), n, nu);
      out.insert(out.end(), rhs.begin(), rhs.end());
      return prune(std::move(out));
    }
    case K::kMax: {
      // min_i f_i (+) min_j g_j = min_{i,j} (f_i (+) g_j)
      auto lhs = conjunctive(e.left(), n, nu);
      auto rhs = conjunctive(e.right(), n, nu);
      std::vector<MaxPlusProjection> out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& f : lhs)
        for (const auto& g : rhs) out.push_back(coefficientwise_max(f, g));
      return prune(std::move(out));
    }
    case K::kScale:
      break;
  }
  throw NotMaxMinPlusError("scaling is outside the max-min-plus fragment");
}

}  // namespace detail

/// Conjunctive form over n state and nu input variables.
inline ConjunctiveForm to_conjunctive(const MmpsExpression& e, std::size_t n, std::size_t nu) {
  if (!is_max_min_plus(e))
    throw NotMaxMinPlusError("expression '" + to_text(e) +
                             "' is not in the max-min-plus fragment");
  auto [ex, eu] = arity(e);
  if (ex > n || eu > nu) throw ShapeError("expression references undeclared variables");
  ConjunctiveForm f{detail::conjunctive(e, n, nu)};
  if (f.projections.empty() || !is_antichain(f))
    throw std::logic_error("conjunctive form pruning left a non-antichain");
  return f;
}

inline ConjunctiveForm to_conjunctive(const MmpsExpression& e) {
  auto [n, nu] = arity(e);
  return to_conjunctive(e, n, nu);
}

}  // namespace mpha
