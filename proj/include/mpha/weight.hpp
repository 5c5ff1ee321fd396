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

// Scalars of the completed max-plus semiring: finite reals plus the two
// reserved infinities, epsilon (-inf, the max-plus zero) and top (+inf, the
// min-plus zero). Finite fixture values are integers, so equality is exact.

#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "mpha/errors.hpp"

namespace mpha {

class ExtendedWeight {
 public:
  /// Defaults to epsilon.
  constexpr ExtendedWeight() noexcept
      : value_(-std::numeric_limits<double>::infinity()) {}

  // Implicit so that literals such as {0, kEps, 3} read naturally.
  constexpr ExtendedWeight(double value) : value_(value) {  // NOLINT
    if (value != value) throw Error("NaN is not an extended weight");
  }

  static constexpr ExtendedWeight epsilon() noexcept { return {}; }
  static constexpr ExtendedWeight top() noexcept {
    ExtendedWeight w;
    w.value_ = std::numeric_limits<double>::infinity();
    return w;
  }
  static constexpr ExtendedWeight unit() noexcept { return ExtendedWeight(0.0); }

  constexpr bool is_epsilon() const noexcept {
    return value_ == -std::numeric_limits<double>::infinity();
  }
  constexpr bool is_top() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_epsilon() && !is_top(); }

  /// Raw extended real; +-infinity for top/epsilon.
  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(ExtendedWeight, ExtendedWeight) = default;
  friend constexpr std::partial_ordering operator<=>(ExtendedWeight a,
                                                    ExtendedWeight b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_;
};

inline constexpr ExtendedWeight kEps = ExtendedWeight::epsilon();
inline constexpr ExtendedWeight kTop = ExtendedWeight::top();
inline constexpr ExtendedWeight kUnit = ExtendedWeight::unit();

namespace detail {

// Sum over the extended reals where `dominant` absorbs everything, including
// the opposite infinity. Max-plus takes epsilon as dominant, min-plus top.
constexpr ExtendedWeight add_with_preference(ExtendedWeight a, ExtendedWeight b,
                                             ExtendedWeight dominant) {
  if (a == dominant || b == dominant) return dominant;
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return ExtendedWeight(a.value() + b.value());
}

}  // namespace detail

/// max(a, b)
constexpr ExtendedWeight oplus(ExtendedWeight a, ExtendedWeight b) {
  return a < b ? b : a;
}

/// a + b with epsilon absorbing, so eps (x) top = eps.
constexpr ExtendedWeight otimes(ExtendedWeight a, ExtendedWeight b) {
  return detail::add_with_preference(a, b, kEps);
}

/// min(a, b)
constexpr ExtendedWeight oplus_dual(ExtendedWeight a, ExtendedWeight b) {
  return b < a ? b : a;
}

/// a + b with top absorbing, so top (x)' eps = top.
constexpr ExtendedWeight otimes_dual(ExtendedWeight a, ExtendedWeight b) {
  return detail::add_with_preference(a, b, kTop);
}

/// Semiring policies used by the generic matrix routines.
struct MaxPlus {
  static constexpr ExtendedWeight zero() { return kEps; }
  static constexpr ExtendedWeight one() { return kUnit; }
  static constexpr ExtendedWeight add(ExtendedWeight a, ExtendedWeight b) {
    return oplus(a, b);
  }
  static constexpr ExtendedWeight mul(ExtendedWeight a, ExtendedWeight b) {
    return otimes(a, b);
  }
};

struct MinPlus {
  static constexpr ExtendedWeight zero() { return kTop; }
  static constexpr ExtendedWeight one() { return kUnit; }
  static constexpr ExtendedWeight add(ExtendedWeight a, ExtendedWeight b) {
    return oplus_dual(a, b);
  }
  static constexpr ExtendedWeight mul(ExtendedWeight a, ExtendedWeight b) {
    return otimes_dual(a, b);
  }
};

/// Canonical text: "-inf", "+inf", or the shortest round-tripping decimal.
inline std::string to_string(ExtendedWeight w) {
  if (w.is_epsilon()) return "-inf";
  if (w.is_top()) return "+inf";
  char buf[64];
  double v = w.value();
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw Error("cannot format weight");
  return std::string(buf, end);
}

/// Accepts the canonical sentinels, the unicode symbols, and decimals.
inline ExtendedWeight parse_weight(std::string_view text) {
  if (text == "-inf" || text == "eps" || text == "ε") return kEps;
  if (text == "+inf" || text == "inf" || text == "top" || text == "⊤")
    return kTop;
  double v = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    throw Error("not an extended weight: '" + std::string(text) + "'");
  return ExtendedWeight(v);
}

inline std::ostream& operator<<(std::ostream& os, ExtendedWeight w) {
  return os << to_string(w);
}

}  // namespace mpha
