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

// Per-mode continuous dynamics x+ = F(x, u), y = H(x, u), held either in
// matrix form or as expression lists (which may use scaling).

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/expression.hpp"
#include "mpha/matrix_form.hpp"

namespace mpha {

struct ExpressionDynamics {
  std::vector<MmpsExpression> f;  // one per state component
  std::vector<MmpsExpression> h;  // one per output component

  friend bool operator==(const ExpressionDynamics&, const ExpressionDynamics&) = default;
};

class ModeDynamics {
 public:
  ModeDynamics(MatrixForm mf) : repr_(std::move(mf)) {  // NOLINT
    validate(std::get<MatrixForm>(repr_));
  }
  ModeDynamics(ExpressionDynamics e) : repr_(std::move(e)) {}  // NOLINT

  bool is_matrix_form() const noexcept { return std::holds_alternative<MatrixForm>(repr_); }
  const MatrixForm* matrix_form() const { return std::get_if<MatrixForm>(&repr_); }
  const ExpressionDynamics* expressions() const {
    return std::get_if<ExpressionDynamics>(&repr_);
  }

  /// Checks the declared state, input and output dimensions.
  void check_dims(std::size_t n, std::size_t nu, std::size_t ny) const {
    if (const auto* mf = matrix_form()) {
      if (mf->state_dim() != n || mf->input_dim() != nu || mf->output_dim() != ny)
        throw ShapeError("mode dynamics are " + std::to_string(mf->state_dim()) + "/" +
                         std::to_string(mf->input_dim()) + "/" +
                         std::to_string(mf->output_dim()) + ", expected " + std::to_string(n) +
                         "/" + std::to_string(nu) + "/" + std::to_string(ny));
      return;
    }
    const auto& e = *expressions();
    if (e.f.size() != n || e.h.size() != ny)
      throw ShapeError("mode dynamics need n state and n_y output expressions");
    for (const auto* list : {&e.f, &e.h})
      for (const auto& ex : *list) {
        auto [ex_n, ex_u] = arity(ex);
        if (ex_n > n || ex_u > nu)
          throw ShapeError("expression '" + to_text(ex) + "' references undeclared variables");
      }
  }

  Vector next_state(const Vector& x, const Vector& u) const {
    if (const auto* mf = matrix_form()) return eval_state(*mf, x, u);
    Vector out;
    for (const auto& ex : expressions()->f) out.push_back(eval(ex, x, u));
    return out;
  }

  Vector output(const Vector& x, const Vector& u) const {
    if (const auto* mf = matrix_form()) return eval_output(*mf, x, u);
    Vector out;
    for (const auto& ex : expressions()->h) out.push_back(eval(ex, x, u));
    return out;
  }

  /// Matrix form, converting max-min-plus expressions; nullopt when the
  /// expressions leave the max-min-plus fragment.
  std::optional<MatrixForm> to_matrix_form(std::size_t n, std::size_t nu) const {
    if (const auto* mf = matrix_form()) return *mf;
    const auto& e = *expressions();
    for (const auto* list : {&e.f, &e.h})
      for (const auto& ex : *list)
        if (!is_max_min_plus(ex)) return std::nullopt;
    return mpha::to_matrix_form(e.f, e.h, n, nu);
  }

  friend bool operator==(const ModeDynamics&, const ModeDynamics&) = default;

 private:
  std::variant<MatrixForm, ExpressionDynamics> repr_;
};

}  // namespace mpha
