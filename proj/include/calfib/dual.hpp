#pragma once

#include <cmath>

namespace calfib {

/// First-order forward-mode scalar: value plus one directional derivative.
/// Seeding d = 1 on a single coordinate and evaluating a composed expression
/// yields the exact partial derivative of that expression.
struct Dual {
  double v = 0.0;
  double d = 0.0;

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design
  Dual(double value, double deriv) : v(value), d(deriv) {}
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) {
  const double inv = 1.0 / b.v;
  return {a.v * inv, (a.d - a.v * b.d * inv) * inv};
}

inline Dual sqrt(Dual a) {
  const double s = std::sqrt(a.v);
  return {s, 0.5 * a.d / s};
}
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }
inline Dual exp(Dual a) {
  const double e = std::exp(a.v);
  return {e, e * a.d};
}
inline Dual pow(Dual a, double p) {
  return {std::pow(a.v, p), p * std::pow(a.v, p - 1.0) * a.d};
}
inline Dual sin(Dual a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Dual cos(Dual a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }

inline double value(double x) { return x; }
inline double value(Dual x) { return x.v; }

/// Minimal complex arithmetic over a generic real scalar, enough for the
/// holomorphic expressions the models are built from.
template <class S>
struct CScalar {
  S re{}, im{};

  CScalar() = default;
  CScalar(S r) : re(r) {}  // NOLINT
  CScalar(S r, S i) : re(r), im(i) {}
};

template <class S>
CScalar<S> operator+(const CScalar<S>& a, const CScalar<S>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class S>
CScalar<S> operator-(const CScalar<S>& a, const CScalar<S>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class S>
CScalar<S> operator*(const CScalar<S>& a, const CScalar<S>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class S>
CScalar<S> conj(const CScalar<S>& a) {
  return {a.re, -a.im};
}
template <class S>
S abs2(const CScalar<S>& a) {
  return a.re * a.re + a.im * a.im;
}
/// Multiplication by the imaginary unit.
template <class S>
CScalar<S> times_i(const CScalar<S>& a) {
  return {-a.im, a.re};
}

}  // namespace calfib
