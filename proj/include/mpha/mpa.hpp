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

// Max-plus automata (S, alpha, mu, beta): weighted finite automata over the
// max-plus semiring. The output of a word is the largest accumulated weight
// over its accepting paths.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/finite_automaton.hpp"
#include "mpha/matrix.hpp"

namespace mpha {

class MaxPlusAutomaton {
 public:
  MaxPlusAutomaton(std::vector<std::string> states, std::vector<Symbol> alphabet, Vector alpha,
                   std::map<Symbol, TropicalMatrix> mu, Vector beta)
      : states_(std::move(states)),
        alphabet_(std::move(alphabet)),
        alpha_(std::move(alpha)),
        mu_(std::move(mu)),
        beta_(std::move(beta)) {
    const std::size_t n = states_.size();
    if (alpha_.size() != n || beta_.size() != n)
      throw ModelError("alpha and beta must have one entry per state");
    if (mu_.size() != alphabet_.size()) throw ModelError("mu needs one matrix per symbol");
    for (const auto& s : alphabet_) {
      auto it = mu_.find(s);
      if (it == mu_.end()) throw ModelError("mu has no matrix for symbol '" + s + "'");
      if (it->second.rows() != n || it->second.cols() != n)
        throw ModelError("mu(" + s + ") must be " + std::to_string(n) + "x" + std::to_string(n));
      if (has_top_entry(it->second)) throw ModelError("mu(" + s + ") contains +inf");
    }
    for (const auto* v : {&alpha_, &beta_})
      for (auto w : *v)
        if (w.is_top()) throw ModelError("initial/final weights must not be +inf");
    if (!has_finite_entry(alpha_)) throw ModelError("alpha has no finite entry");
  }

  std::size_t num_states() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  const Vector& alpha() const noexcept { return alpha_; }
  const Vector& beta() const noexcept { return beta_; }
  const std::map<Symbol, TropicalMatrix>& mu() const noexcept { return mu_; }
  const TropicalMatrix& mu(const Symbol& s) const {
    auto it = mu_.find(s);
    if (it == mu_.end()) throw ModelError("unknown symbol '" + s + "'");
    return it->second;
  }

  friend bool operator==(const MaxPlusAutomaton&, const MaxPlusAutomaton&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<Symbol> alphabet_;
  Vector alpha_;
  std::map<Symbol, TropicalMatrix> mu_;
  Vector beta_;
};

/// Row vector x(w) with x(empty) = alpha^T and x(w l) = x(w) (x) mu(l).
inline Vector eval_state(const MaxPlusAutomaton& a, const Word& w) {
  Vector x = a.alpha();
  for (const auto& s : w) x = otimes(x, a.mu(s));
  return x;
}

/// y(w) = x(w) (x) beta; epsilon iff no accepting path exists.
inline ExtendedWeight eval_output(const MaxPlusAutomaton& a, const Word& w) {
  return dot(eval_state(a, w), a.beta());
}

inline bool accepts(const MaxPlusAutomaton& a, const Word& w) {
  return !eval_output(a, w).is_epsilon();
}

/// mu(w) = mu(l1) (x) ... (x) mu(lk); the identity for the empty word.
inline TropicalMatrix word_matrix(const MaxPlusAutomaton& a, const Word& w) {
  TropicalMatrix m = TropicalMatrix::identity(a.num_states());
  for (const auto& s : w) m = mat_otimes(m, a.mu(s));
  return m;
}

/// Accepted words of length <= max_len. Prefixes whose state vector is all
/// epsilon are not extended since no continuation can be accepted.
inline Language language_upto(const MaxPlusAutomaton& a, std::size_t max_len) {
  Language out;
  std::function<void(Word&, const Vector&)> visit = [&](Word& w, const Vector& x) {
    if (!dot(x, a.beta()).is_epsilon()) out.insert(w);
    if (w.size() == max_len) return;
    for (const auto& s : a.alphabet()) {
      Vector next = otimes(x, a.mu(s));
      if (is_all_epsilon(next)) continue;
      w.push_back(s);
      visit(w, next);
      w.pop_back();
    }
  };
  Word w;
  visit(w, a.alpha());
  return out;
}

/// Boolean restriction of the weights: s -l-> s' iff mu(l)_{ss'} != eps,
/// initial iff alpha(s) != eps, final iff beta(s) != eps.
inline FiniteAutomaton to_finite_abstraction(const MaxPlusAutomaton& a) {
  FiniteAutomaton fa(a.alphabet());
  for (const auto& s : a.states()) fa.add_state(s);
  for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
    const TropicalMatrix& m = a.mu(a.alphabet()[l]);
    for (std::size_t i = 0; i < a.num_states(); ++i)
      for (std::size_t j = 0; j < a.num_states(); ++j)
        if (!m(i, j).is_epsilon()) fa.add_transition(i, l, j);
  }
  for (std::size_t i = 0; i < a.num_states(); ++i) {
    if (!a.alpha()[i].is_epsilon()) fa.set_initial(i);
    if (!a.beta()[i].is_epsilon()) fa.set_final(i);
  }
  return fa;
}

/// Random automaton with integer weights in [0, 9]; each entry is epsilon
/// with probability `eps_share`. alpha always has a finite first entry.
inline MaxPlusAutomaton random_mpa(std::size_t n, const std::vector<Symbol>& alphabet,
                                   std::mt19937_64& rng, double eps_share = 0.5) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> value(0, 9);
  auto draw = [&]() -> ExtendedWeight {
    return coin(rng) < eps_share ? kEps : ExtendedWeight(value(rng));
  };
  std::vector<std::string> states;
  for (std::size_t i = 1; i <= n; ++i) states.push_back(std::to_string(i));
  Vector alpha(n), beta(n);
  for (auto& w : alpha) w = draw();
  for (auto& w : beta) w = draw();
  if (n > 0) alpha[0] = static_cast<double>(value(rng));
  std::map<Symbol, TropicalMatrix> mu;
  for (const auto& s : alphabet) {
    TropicalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = draw();
    mu.emplace(s, std::move(m));
  }
  return MaxPlusAutomaton(std::move(states), alphabet, std::move(alpha), std::move(mu),
                          std::move(beta));
}

}  // namespace mpha
