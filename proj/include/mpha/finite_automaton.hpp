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

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mpha/errors.hpp"

namespace mpha {

using Symbol = std::string;
/// Finite word; the empty vector is the empty word.
using Word = std::vector<Symbol>;

/// Bare concatenation when every symbol is one character, else comma-separated.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "";
  const bool bare = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !bare) out += ',';
    out += w[i];
  }
  return out;
}

/// Inverse of to_string against a known alphabet.
inline Word parse_word(std::string_view text, const std::vector<Symbol>& alphabet) {
  Word w;
  if (text.empty()) return w;
  auto known = [&](const std::string& s) {
    return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      std::string sym(text.substr(start, comma - start));
      if (!known(sym)) throw ModelError("unknown symbol '" + sym + "'");
      w.push_back(sym);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return w;
  }
  if (known(std::string(text))) return {std::string(text)};
  for (char c : text) {
    std::string sym(1, c);
    if (!known(sym)) throw ModelError("unknown symbol '" + sym + "'");
    w.push_back(sym);
  }
  return w;
}

/// Shortlex order: shorter words first, then lexicographic by symbol.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A bounded language, iterated in shortlex order.
using Language = std::set<Word, ShortLex>;

/// All words of length exactly `len` over `alphabet`, in length-lexicographic
/// order of the alphabet's listing.
inline std::vector<Word> words_of_length(const std::vector<Symbol>& alphabet, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out)
      for (const auto& s : alphabet) {
        Word e = w;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Nondeterministic finite automaton (Q, Sigma, delta, Q0, Qf) with named
/// states and symbols.
class FiniteAutomaton {
 public:
  FiniteAutomaton() = default;
  explicit FiniteAutomaton(std::vector<Symbol> alphabet) {
    for (auto& s : alphabet) add_symbol(s);
  }

  std::size_t add_state(const std::string& name) {
    if (state_ids_.count(name)) throw ModelError("duplicate state '" + name + "'");
    state_ids_[name] = states_.size();
    states_.push_back(name);
    delta_.emplace_back(alphabet_.size());
    return states_.size() - 1;
  }

  std::size_t add_symbol(const Symbol& s) {
    if (symbol_ids_.count(s)) throw ModelError("duplicate symbol '" + s + "'");
    symbol_ids_[s] = alphabet_.size();
    alphabet_.push_back(s);
    for (auto& row : delta_) row.emplace_back();
    return alphabet_.size() - 1;
  }

  void add_transition(std::size_t from, std::size_t symbol, std::size_t to) {
    check_state(from);
    check_state(to);
    if (symbol >= alphabet_.size()) throw ModelError("symbol index out of range");
    delta_[from][symbol].insert(to);
  }
  void add_transition(const std::string& from, const Symbol& s, const std::string& to) {
    add_transition(state_index(from), symbol_index(s), state_index(to));
  }
  void set_initial(std::size_t q) {
    check_state(q);
    initial_.insert(q);
  }
  void set_final(std::size_t q) {
    check_state(q);
    final_.insert(q);
  }

  std::size_t num_states() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::set<std::size_t>& initial() const noexcept { return initial_; }
  const std::set<std::size_t>& final_states() const noexcept { return final_; }
  bool is_initial(std::size_t q) const { return initial_.count(q) > 0; }
  bool is_final(std::size_t q) const { return final_.count(q) > 0; }

  const std::set<std::size_t>& successors(std::size_t q, std::size_t symbol) const {
    return delta_.at(q).at(symbol);
  }

  std::size_t state_index(const std::string& name) const {
    auto it = state_ids_.find(name);
    if (it == state_ids_.end()) throw ModelError("unknown state '" + name + "'");
    return it->second;
  }
  std::size_t symbol_index(const Symbol& s) const {
    auto it = symbol_ids_.find(s);
    if (it == symbol_ids_.end()) throw ModelError("unknown symbol '" + s + "'");
    return it->second;
  }
  bool has_symbol(const Symbol& s) const { return symbol_ids_.count(s) > 0; }

  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : delta_)
      for (const auto& t : row) n += t.size();
    return n;
  }

  /// Subset simulation of the word from the initial set.
  std::set<std::size_t> reach(const Word& w) const {
    std::set<std::size_t> current = initial_;
    for (const auto& s : w) {
      const std::size_t a = symbol_index(s);
      std::set<std::size_t> next;
      for (auto q : current) next.insert(delta_[q][a].begin(), delta_[q][a].end());
      current = std::move(next);
      if (current.empty()) break;
    }
    return current;
  }

  bool accepts(const Word& w) const {
    for (auto q : reach(w))
      if (is_final(q)) return true;
    return false;
  }

  friend bool operator==(const FiniteAutomaton&, const FiniteAutomaton&) = default;

 private:
  void check_state(std::size_t q) const {
    if (q >= states_.size()) throw ModelError("state index out of range");
  }

  std::vector<std::string> states_;
  std::vector<Symbol> alphabet_;
  std::map<std::string, std::size_t> state_ids_;
  std::map<Symbol, std::size_t> symbol_ids_;
  std::vector<std::vector<std::set<std::size_t>>> delta_;
  std::set<std::size_t> initial_;
  std::set<std::size_t> final_;
};

}  // namespace mpha
