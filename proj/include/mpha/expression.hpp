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

// Max-min-plus-scaling expression trees: variables, constants, max, min,
// sums and scalar multiples. Trees are immutable and share subtrees.

#pragma once

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mpha/errors.hpp"
#include "mpha/matrix.hpp"
#include "mpha/weight.hpp"

namespace mpha {

class MmpsExpression {
 public:
  enum class Kind { kVar, kInputVar, kConst, kMax, kMin, kPlus, kScale };

  static MmpsExpression var(std::size_t i) { return leaf(Kind::kVar, i, kUnit); }
  static MmpsExpression input(std::size_t p) { return leaf(Kind::kInputVar, p, kUnit); }
  static MmpsExpression constant(ExtendedWeight c) { return leaf(Kind::kConst, 0, c); }

  static MmpsExpression max(MmpsExpression a, MmpsExpression b) {
    return binary(Kind::kMax, std::move(a), std::move(b));
  }
  static MmpsExpression min(MmpsExpression a, MmpsExpression b) {
    return binary(Kind::kMin, std::move(a), std::move(b));
  }
  static MmpsExpression plus(MmpsExpression a, MmpsExpression b) {
    return binary(Kind::kPlus, std::move(a), std::move(b));
  }
  static MmpsExpression scale(double factor, MmpsExpression a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kScale;
    n->factor = factor;
    n->left = std::move(a.node_);
    return MmpsExpression(std::move(n));
  }

  /// Left fold of max over a non-empty list.
  static MmpsExpression max(std::initializer_list<MmpsExpression> terms) {
    return fold(Kind::kMax, terms);
  }
  static MmpsExpression min(std::initializer_list<MmpsExpression> terms) {
    return fold(Kind::kMin, terms);
  }

  Kind kind() const noexcept { return node_->kind; }
  std::size_t index() const noexcept { return node_->index; }
  ExtendedWeight value() const noexcept { return node_->value; }
  double factor() const noexcept { return node_->factor; }
  MmpsExpression left() const { return MmpsExpression(node_->left); }
  MmpsExpression right() const { return MmpsExpression(node_->right); }

  bool is_leaf() const noexcept {
    return kind() == Kind::kVar || kind() == Kind::kInputVar || kind() == Kind::kConst;
  }

  friend bool operator==(const MmpsExpression& a, const MmpsExpression& b) {
    return structurally_equal(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    Kind kind = Kind::kConst;
    std::size_t index = 0;
    ExtendedWeight value = kUnit;
    double factor = 1.0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit MmpsExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static MmpsExpression leaf(Kind k, std::size_t i, ExtendedWeight v) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->index = i;
    n->value = v;
    return MmpsExpression(std::move(n));
  }
  static MmpsExpression binary(Kind k, MmpsExpression a, MmpsExpression b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return MmpsExpression(std::move(n));
  }
  static MmpsExpression fold(Kind k, std::initializer_list<MmpsExpression> terms) {
    if (terms.size() == 0) throw ModelError("empty max/min");
    auto it = terms.begin();
    MmpsExpression acc = *it++;
    for (; it != terms.end(); ++it) acc = binary(k, acc, *it);
    return acc;
  }
  static bool structurally_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::kVar:
      case Kind::kInputVar:
        return a->index == b->index;
      case Kind::kConst:
        return a->value == b->value;
      case Kind::kScale:
        return a->factor == b->factor && structurally_equal(a->left.get(), b->left.get());
      default:
        return structurally_equal(a->left.get(), b->left.get()) &&
               structurally_equal(a->right.get(), b->right.get());
    }
  }

  std::shared_ptr<const Node> node_;
};

/// beta * v over the extended reals; a zero factor yields the unit.
inline ExtendedWeight scale_weight(double factor, ExtendedWeight v) {
  if (factor == 0.0) return kUnit;
  if (v.is_finite()) return ExtendedWeight(factor * v.value());
  const bool flip = factor < 0.0;
  if (v.is_epsilon()) return flip ? kTop : kEps;
  return flip ? kEps : kTop;
}

/// Structural evaluation with the completed-semiring conventions.
inline ExtendedWeight eval(const MmpsExpression& e, const Vector& x, const Vector& u = {}) {
  using K = MmpsExpression::Kind;
  switch (e.kind()) {
    case K::kVar:
      if (e.index() >= x.size())
        throw ShapeError("state variable x" + std::to_string(e.index() + 1) +
                         " out of range");
      return x[e.index()];
    case K::kInputVar:
      if (e.index() >= u.size())
        throw ShapeError("input variable u" + std::to_string(e.index() + 1) +
                         " out of range");
      return u[e.index()];
    case K::kConst:
      return e.value();
    case K::kMax:
      return oplus(eval(e.left(), x, u), eval(e.right(), x, u));
    case K::kMin:
      return oplus_dual(eval(e.left(), x, u), eval(e.right(), x, u));
    case K::kPlus:
      return otimes(eval(e.left(), x, u), eval(e.right(), x, u));
    case K::kScale:
      return scale_weight(e.factor(), eval(e.left(), x, u));
  }
  return kEps;
}

/// True when the subtree mentions no variable.
inline bool is_constant(const MmpsExpression& e) {
  using K = MmpsExpression::Kind;
  switch (e.kind()) {
    case K::kVar:
    case K::kInputVar:
      return false;
    case K::kConst:
      return true;
    case K::kScale:
      return is_constant(e.left());
    default:
      return is_constant(e.left()) && is_constant(e.right());
  }
}

/// Membership in the max-min-plus fragment: no scaling, and every sum has at
/// most one non-constant operand.
inline bool is_max_min_plus(const MmpsExpression& e) {
  using K = MmpsExpression::Kind;
  switch (e.kind()) {
    case K::kVar:
    case K::kInputVar:
    case K::kConst:
      return true;
    case K::kScale:
      return false;
    case K::kPlus:
      if (!is_constant(e.left()) && !is_constant(e.right())) return false;
      [[fallthrough]];
    default:
      return is_max_min_plus(e.left()) && is_max_min_plus(e.right());
  }
}

namespace detail {

inline void collect_arity(const MmpsExpression& e, std::size_t& nx, std::size_t& nu) {
  using K = MmpsExpression::Kind;
  switch (e.kind()) {
    case K::kVar:
      nx = std::max(nx, e.index() + 1);
      return;
    case K::kInputVar:
      nu = std::max(nu, e.index() + 1);
      return;
    case K::kConst:
      return;
    case K::kScale:
      collect_arity(e.left(), nx, nu);
      return;
    default:
      collect_arity(e.left(), nx, nu);
      collect_arity(e.right(), nx, nu);
  }
}

inline void print(std::ostream& os, const MmpsExpression& e) {
  using K = MmpsExpression::Kind;
  switch (e.kind()) {
    case K::kVar:
      os << 'x' << e.index() + 1;
      return;
    case K::kInputVar:
      os << 'u' << e.index() + 1;
      return;
    case K::kConst:
      os << to_string(e.value());
      return;
    case K::kMax:
    case K::kMin: {
      // Flatten nested chains of the same operator.
      std::vector<MmpsExpression> terms;
      std::vector<MmpsExpression> stack{e};
      while (!stack.empty()) {
        MmpsExpression t = stack.back();
        stack.pop_back();
        if (t.kind() == e.kind()) {
          stack.push_back(t.right());
          stack.push_back(t.left());
        } else {
          terms.push_back(t);
        }
      }
      os << (e.kind() == K::kMax ? "max(" : "min(");
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ", ";
        print(os, terms[i]);
      }
      os << ')';
      return;
    }
    case K::kPlus: {
      print(os, e.left());
      MmpsExpression r = e.right();
      if (r.kind() == K::kConst && r.value().is_finite() && r.value().value() < 0) {
        os << " - " << to_string(ExtendedWeight(-r.value().value()));
      } else {
        os << " + ";
        if (r.kind() == K::kPlus) {
          os << '(';
          print(os, r);
          os << ')';
        } else {
          print(os, r);
        }
      }
      return;
    }
    case K::kScale: {
      os << to_string(ExtendedWeight(e.factor())) << '*';
      MmpsExpression c = e.left();
      if (c.kind() == K::kPlus) {
        os << '(';
        print(os, c);
        os << ')';
      } else {
        print(os, c);
      }
      return;
    }
  }
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line)
      : text_(text), line_(line) {}

  MmpsExpression parse() {
    MmpsExpression e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  MmpsExpression sum() {
    MmpsExpression acc = product();
    for (;;) {
      if (accept('+')) {
        acc = MmpsExpression::plus(acc, product());
      } else if (accept('-')) {
        std::optional<double> n = number();
        if (!n) fail("only numeric constants may be subtracted");
        acc = MmpsExpression::plus(acc, MmpsExpression::constant(-*n));
      } else {
        return acc;
      }
    }
  }

  MmpsExpression product() {
    std::size_t save = pos_;
    if (std::optional<double> n = number()) {
      if (accept('*')) return MmpsExpression::scale(*n, primary());
      pos_ = save;
    }
    return primary();
  }

  std::optional<double> number() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E'))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      return std::nullopt;
    }
    try {
      ExtendedWeight w = parse_weight(text_.substr(start, pos_ - start));
      return w.value();
    } catch (const Error&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::size_t index() {
    std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
    if (pos_ == start || v == 0) fail("variable index must be a positive integer");
    return v - 1;
  }

  MmpsExpression primary() {
    skip_space();
    if (accept_word("-inf")) return MmpsExpression::constant(kEps);
    if (accept_word("+inf")) return MmpsExpression::constant(kTop);
    for (auto [word, kind] : {std::pair{std::string_view("max"), 0},
                              std::pair{std::string_view("min"), 1}}) {
      if (accept_word(word)) {
        expect('(');
        MmpsExpression acc = sum();
        while (accept(',')) {
          MmpsExpression next = sum();
          acc = kind == 0 ? MmpsExpression::max(acc, next) : MmpsExpression::min(acc, next);
        }
        expect(')');
        return acc;
      }
    }
    if (accept('(')) {
      MmpsExpression e = sum();
      expect(')');
      return e;
    }
    if (accept('x')) return MmpsExpression::var(index());
    if (accept('u')) return MmpsExpression::input(index());
    if (std::optional<double> n = number()) return MmpsExpression::constant(*n);
    fail("expected an expression");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "max(x1 + 1, min(x2, u1 - 2), 2*x3)". Variables are
/// 1-based in text and 0-based in the tree.
inline MmpsExpression parse_expression(std::string_view text, std::size_t line = 1) {
  return detail::ExpressionParser(text, line).parse();
}

inline std::string to_text(const MmpsExpression& e) {
  std::ostringstream os;
  detail::print(os, e);
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MmpsExpression& e) {
  detail::print(os, e);
  return os;
}

/// Number of state and input variables referenced (highest index + 1).
inline std::pair<std::size_t, std::size_t> arity(const MmpsExpression& e) {
  std::size_t nx = 0, nu = 0;
  detail::collect_arity(e, nx, nu);
  return {nx, nu};
}

}  // namespace mpha
