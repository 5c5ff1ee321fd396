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

// Matrix form of max-min-plus mode dynamics:
//   x+ = min_l (A_l x (+) B_l u),   y = min_m (C_m x (+) D_m u)
// and the one-step transition graphs read off its finiteness pattern.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mpha/conjunctive.hpp"
#include "mpha/errors.hpp"
#include "mpha/matrix.hpp"

namespace mpha {

struct MatrixForm {
  std::vector<TropicalMatrix> A;  // L matrices, n x n
  std::vector<TropicalMatrix> B;  // L matrices, n x cols_u
  std::vector<TropicalMatrix> C;  // M matrices, n_y x n
  std::vector<TropicalMatrix> D;  // M matrices, n_y x cols_u
  // When set, the last column of every B and D multiplies a coordinate that
  // is always the unit; it carries the constant terms of the dynamics.
  bool constant_input = false;

  std::size_t state_dim() const { return A.empty() ? 0 : A.front().rows(); }
  std::size_t input_dim() const {
    const std::size_t cols = B.empty() ? 0 : B.front().cols();
    return constant_input ? cols - 1 : cols;
  }
  std::size_t output_dim() const { return C.empty() ? 0 : C.front().rows(); }

  friend bool operator==(const MatrixForm&, const MatrixForm&) = default;
};

/// Throws ShapeError unless all blocks agree on n, n_u and n_y.
inline void validate(const MatrixForm& mf) {
  if (mf.A.empty() || mf.C.empty()) throw ShapeError("matrix form needs L >= 1 and M >= 1");
  if (mf.A.size() != mf.B.size() || mf.C.size() != mf.D.size())
    throw ShapeError("matrix form needs one B per A and one D per C");
  const std::size_t n = mf.state_dim();
  const std::size_t cols = mf.B.front().cols();
  const std::size_t ny = mf.output_dim();
  if (mf.constant_input && cols == 0) throw ShapeError("constant column missing");
  for (std::size_t l = 0; l < mf.A.size(); ++l) {
    if (mf.A[l].rows() != n || mf.A[l].cols() != n) throw ShapeError("A blocks must be n x n");
    if (mf.B[l].rows() != n || mf.B[l].cols() != cols)
      throw ShapeError("B blocks must be n x n_u");
  }
  for (std::size_t m = 0; m < mf.C.size(); ++m) {
    if (mf.C[m].rows() != ny || mf.C[m].cols() != n) throw ShapeError("C blocks must be n_y x n");
    if (mf.D[m].rows() != ny || mf.D[m].cols() != cols)
      throw ShapeError("D blocks must be n_y x n_u");
  }
}

namespace detail {

inline Vector with_constant(const MatrixForm& mf, const Vector& u) {
  if (u.size() != mf.input_dim())
    throw ShapeError("input of length " + std::to_string(u.size()) + ", expected " +
                     std::to_string(mf.input_dim()));
  if (!mf.constant_input) return u;
  Vector v = u;
  v.push_back(kUnit);
  return v;
}

inline Vector min_of_affine(const std::vector<TropicalMatrix>& left,
                            const std::vector<TropicalMatrix>& right, const Vector& x,
                            const Vector& u) {
  Vector out;
  for (std::size_t l = 0; l < left.size(); ++l) {
    Vector term = vec_oplus(otimes(left[l], x), otimes(right[l], u));
    out = l == 0 ? term : vec_oplus_dual(out, term);
  }
  return out;
}

}  // namespace detail

inline Vector eval_state(const MatrixForm& mf, const Vector& x, const Vector& u = {}) {
  return detail::min_of_affine(mf.A, mf.B, x, detail::with_constant(mf, u));
}

inline Vector eval_output(const MatrixForm& mf, const Vector& x, const Vector& u = {}) {
  return detail::min_of_affine(mf.C, mf.D, x, detail::with_constant(mf, u));
}

/// Max-plus linear single-block form x+ = A x (+) B u, y = C x (+) D u.
inline MatrixForm linear_form(TropicalMatrix a, TropicalMatrix b, TropicalMatrix c,
                              TropicalMatrix d) {
  MatrixForm mf{{std::move(a)}, {std::move(b)}, {std::move(c)}, {std::move(d)}, false};
  validate(mf);
  return mf;
}

inline MatrixForm linear_form(TropicalMatrix a, TropicalMatrix c) {
  const std::size_t n = a.rows(), ny = c.rows();
  return linear_form(std::move(a), TropicalMatrix(n, 0), std::move(c), TropicalMatrix(ny, 0));
}

namespace detail {

// Pads every component to `depth` projections by repeating its last one and
// stacks the l-th projections into the l-th coefficient blocks.
inline void stack_components(const std::vector<ConjunctiveForm>& comps, std::size_t n,
                             std::size_t nu, bool constant,
                             std::vector<TropicalMatrix>& left,
                             std::vector<TropicalMatrix>& right) {
  std::size_t depth = 1;
  for (const auto& c : comps) {
    if (c.projections.empty()) throw ModelError("empty conjunctive form");
    depth = std::max(depth, c.size());
  }
  const std::size_t cols = nu + (constant ? 1 : 0);
  left.assign(depth, TropicalMatrix(comps.size(), n));
  right.assign(depth, TropicalMatrix(comps.size(), cols));
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (std::size_t l = 0; l < depth; ++l) {
      const auto& p = comps[j].projections[std::min(l, comps[j].size() - 1)];
      if (p.state.size() != n || p.input.size() != nu)
        throw ShapeError("projection arity does not match the system dimensions");
      for (std::size_t i = 0; i < n; ++i) left[l](j, i) = p.state[i];
      for (std::size_t i = 0; i < nu; ++i) right[l](j, i) = p.input[i];
      if (constant) right[l](j, nu) = p.constant;
    }
  }
}

}  // namespace detail

/// Assembles per-component conjunctive forms into matrix form. L and M are
/// the largest component depths; shorter components repeat their last
/// projection, which leaves the min unchanged.
inline MatrixForm to_matrix_form(const std::vector<ConjunctiveForm>& state_components,
                                 const std::vector<ConjunctiveForm>& output_components,
                                 std::size_t n, std::size_t nu) {
  if (state_components.size() != n) throw ShapeError("need one state component per x_j");
  bool constant = false;
  for (const auto* comps : {&state_components, &output_components})
    for (const auto& c : *comps)
      for (const auto& p : c.projections)
        if (!p.constant.is_epsilon()) constant = true;
  MatrixForm mf;
  mf.constant_input = constant;
  detail::stack_components(state_components, n, nu, constant, mf.A, mf.B);
  detail::stack_components(output_components, n, nu, constant, mf.C, mf.D);
  if (output_components.empty()) {
    mf.C.assign(1, TropicalMatrix(0, n));
    mf.D.assign(1, TropicalMatrix(0, nu + (constant ? 1 : 0)));
  }
  validate(mf);
  return mf;
}

inline MatrixForm to_matrix_form(const std::vector<MmpsExpression>& f,
                                 const std::vector<MmpsExpression>& h, std::size_t n,
                                 std::size_t nu) {
  std::vector<ConjunctiveForm> fs, hs;
  for (const auto& e : f) fs.push_back(to_conjunctive(e, n, nu));
  for (const auto& e : h) hs.push_back(to_conjunctive(e, n, nu));
  return to_matrix_form(fs, hs, n, nu);
}

/// Variable label of a transition graph node.
struct VarLabel {
  enum class Type { kState, kInput, kOutput };
  Type type;
  std::size_t index;

  friend auto operator<=>(const VarLabel&, const VarLabel&) = default;
};

inline std::string to_string(const VarLabel& v) {
  const char prefix = v.type == VarLabel::Type::kState   ? 'x'
                      : v.type == VarLabel::Type::kInput ? 'u'
                                                         : 'y';
  return prefix + std::to_string(v.index + 1);
}

struct TransitionGraph {
  std::set<std::pair<VarLabel, VarLabel>> edges;

  bool contains(VarLabel from, VarLabel to) const { return edges.count({from, to}) > 0; }
  friend bool operator==(const TransitionGraph&, const TransitionGraph&) = default;
};

inline VarLabel state_label(std::size_t i) { return {VarLabel::Type::kState, i}; }
inline VarLabel input_label(std::size_t p) { return {VarLabel::Type::kInput, p}; }
inline VarLabel output_label(std::size_t j) { return {VarLabel::Type::kOutput, j}; }

namespace detail {

inline void support_edges(const std::vector<TropicalMatrix>& blocks, std::size_t cols,
                          VarLabel::Type from, VarLabel::Type to, TransitionGraph& g) {
  for (const auto& m : blocks)
    for (std::size_t j = 0; j < m.rows(); ++j)
      for (std::size_t i = 0; i < cols; ++i)
        if (m(j, i).is_finite()) g.edges.insert({{from, i}, {to, j}});
}

}  // namespace detail

/// (x_i, x_j) iff some [A_l]_ji is finite; (u_p, x_j) iff some [B_l]_jp is.
/// The constant column contributes no edges.
inline TransitionGraph transition_graph_F(const MatrixForm& mf) {
  TransitionGraph g;
  detail::support_edges(mf.A, mf.state_dim(), VarLabel::Type::kState, VarLabel::Type::kState, g);
  detail::support_edges(mf.B, mf.input_dim(), VarLabel::Type::kInput, VarLabel::Type::kState, g);
  return g;
}

inline TransitionGraph transition_graph_H(const MatrixForm& mf) {
  TransitionGraph g;
  detail::support_edges(mf.C, mf.state_dim(), VarLabel::Type::kState, VarLabel::Type::kOutput,
                        g);
  detail::support_edges(mf.D, mf.input_dim(), VarLabel::Type::kInput, VarLabel::Type::kOutput,
                        g);
  return g;
}

}  // namespace mpha
