#pragma once

// Hyper-dual numbers: a + b e1 + c e2 + d e1e2 with e1^2 = e2^2 = 0.
// Seeding coordinate i along e1 and coordinate j along e2 yields the exact
// value, d/di, d/dj and d2/didj of any smooth expression in one evaluation.

#include <cmath>
#include <ostream>

namespace htype {

struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d12 = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT: implicit lift of constants
  constexpr Jet(double value, double e1, double e2, double e12)
      : v(value), d1(e1), d2(e2), d12(e12) {}

  Jet& operator+=(const Jet& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = Jet{v * o.v, v * o.d1 + d1 * o.v, v * o.d2 + d2 * o.v,
                v * o.d12 + d1 * o.d2 + d2 * o.d1 + d12 * o.v};
    return *this;
  }
  Jet& operator/=(const Jet& o);
};

/// Apply a scalar function given f, f', f'' at the real part.
constexpr Jet chain(const Jet& a, double f, double df, double ddf) {
  return Jet{f, df * a.d1, df * a.d2, df * a.d12 + ddf * a.d1 * a.d2};
}

constexpr Jet operator-(const Jet& a) { return Jet{-a.v, -a.d1, -a.d2, -a.d12}; }
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator+(Jet a, double b) { return a += Jet(b); }
inline Jet operator+(double a, Jet b) { return b += Jet(a); }
inline Jet operator-(Jet a, double b) { return a -= Jet(b); }
inline Jet operator-(double a, const Jet& b) { return Jet(a) - b; }
inline Jet operator*(Jet a, double b) { return Jet{a.v * b, a.d1 * b, a.d2 * b, a.d12 * b}; }
inline Jet operator*(double a, const Jet& b) { return b * a; }

inline Jet reciprocal(const Jet& a) {
  const double r = 1.0 / a.v;
  return chain(a, r, -r * r, 2.0 * r * r * r);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
inline Jet operator/(double a, const Jet& b) { return a * reciprocal(b); }
inline Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet pow(const Jet& a, double e) {
  const double f = std::pow(a.v, e);
  return chain(a, f, e * f / a.v, e * (e - 1.0) * f / (a.v * a.v));
}
inline Jet exp(const Jet& a) {
  const double f = std::exp(a.v);
  return chain(a, f, f, f);
}
inline Jet log(const Jet& a) { return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
inline Jet sin(const Jet& a) {
  return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
}
inline Jet cos(const Jet& a) {
  return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
}

inline bool isfinite(const Jet& a) {
  return std::isfinite(a.v) && std::isfinite(a.d1) && std::isfinite(a.d2) && std::isfinite(a.d12);
}

/// Real part; identity on double. Lets templated formulas compare or branch on values.
constexpr double value_of(double x) { return x; }
constexpr double value_of(const Jet& x) { return x.v; }

inline std::ostream& operator<<(std::ostream& os, const Jet& a) {
  return os << '[' << a.v << ", " << a.d1 << ", " << a.d2 << ", " << a.d12 << ']';
}

}  // namespace htype
