#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace nagata {

// Exact scalar used when inputs are rational. et_off keeps the type a plain
// value type so Eigen expressions work without surprises.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename S>
inline constexpr bool is_exact_scalar_v = !std::is_floating_point_v<S>;

// Comparison tolerance: absorbs float input noise, zero in exact mode.
template <typename S>
constexpr S comparison_tolerance() {
  if constexpr (std::is_floating_point_v<S>) {
    return S(1e-9);
  } else {
    return S(0);
  }
}

template <typename S>
bool approx_eq(const S& a, const S& b) {
  S d = a - b;
  if (d < S(0)) d = -d;
  return d <= comparison_tolerance<S>();
}

// a <= b up to the mode tolerance (relative-and-absolute in float mode).
template <typename S>
bool leq_tol(const S& a, const S& b) {
  if constexpr (std::is_floating_point_v<S>) {
    S scale = std::max(S(1), std::abs(b));
    return a <= b + comparison_tolerance<S>() * scale;
  } else {
    return a <= b;
  }
}

template <typename S>
double to_double(const S& x) {
  if constexpr (std::is_floating_point_v<S>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

template <typename S>
S scalar_abs(const S& x) {
  return x < S(0) ? S(-x) : x;
}

// A nonnegative quantity extended with +infinity. Lebesgue data uses this:
// dist(x, empty set) is +infinity, never an error.
template <typename S>
struct ExtValue {
  S value{};
  bool infinite = false;

  static ExtValue inf() { return ExtValue{S(0), true}; }
  static ExtValue of(S v) { return ExtValue{std::move(v), false}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const ExtValue& a, const ExtValue& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtValue& a, const ExtValue& b) { return !(b < a); }
  friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
  friend bool operator>=(const ExtValue& a, const ExtValue& b) { return !(a < b); }

  friend bool operator<(const S& a, const ExtValue& b) { return ExtValue::of(a) < b; }
  friend bool operator<=(const S& a, const ExtValue& b) { return ExtValue::of(a) <= b; }
  friend bool operator<(const ExtValue& a, const S& b) { return a < ExtValue::of(b); }
  friend bool operator>=(const ExtValue& a, const S& b) { return !(a < b); }

  static ExtValue min(const ExtValue& a, const ExtValue& b) { return a < b ? a : b; }
  static ExtValue max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

  double as_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : to_double(value);
  }
};

// Parses "p/q", "p", or (in float mode) a decimal literal.
template <typename S>
S parse_scalar(const std::string& text) {
  auto slash = text.find('/');
  if constexpr (std::is_floating_point_v<S>) {
    if (slash != std::string::npos) {
      S num = static_cast<S>(std::stod(text.substr(0, slash)));
      S den = static_cast<S>(std::stod(text.substr(slash + 1)));
      if (den == S(0)) throw std::invalid_argument("zero denominator: " + text);
      return num / den;
    }
    return static_cast<S>(std::stod(text));
  } else {
    if (slash != std::string::npos) {
      boost::multiprecision::cpp_int num(text.substr(0, slash));
      boost::multiprecision::cpp_int den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator: " + text);
      return S(num) / S(den);
    }
    // Accept plain decimals for convenience: 1.25 -> 5/4.
    auto dot = text.find('.');
    if (dot == std::string::npos) return S(boost::multiprecision::cpp_int(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    boost::multiprecision::cpp_int num(digits);
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return S(num) / S(den);
  }
}

inline std::string format_rational(const Rational& x) {
  const auto& num = boost::multiprecision::numerator(x);
  const auto& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace nagata
