#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

// Gamma-family special functions implemented locally so that results are
// bit-stable across platforms and library versions.

namespace harqopt {

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients (~15 significant digits).
inline constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double z) {
  double acc = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) acc += kLanczosCoeff[i] / (z + i);
  return acc;
}

}  // namespace detail

/// Gamma function for a > 0.
inline double gamma_fn(double a) {
  if (!(a > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  if (a < 0.5) {
    // Reflection keeps the Lanczos series in its accurate range.
    return std::numbers::pi / (std::sin(std::numbers::pi * a) * gamma_fn(1.0 - a));
  }
  const double z = a - 1.0;
  const double t = z + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) *
         detail::lanczos_sum(z);
}

/// log(Gamma(a)) for a > 0; preferred over gamma_fn for large a.
inline double lgamma_fn(double a) {
  if (!(a > 0.0)) throw std::domain_error("lgamma_fn: argument must be positive");
  if (a < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * a)) - lgamma_fn(1.0 - a);
  }
  const double z = a - 1.0;
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(z));
}

namespace detail {

// Series expansion of P(a,x), valid and fast for x < a + 1.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lgamma_fn(a));
}

// Continued fraction for Q(a,x) (modified Lentz), for x >= a + 1.
inline double gamma_q_contfrac(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lgamma_fn(a)) * h;
}

}  // namespace detail

/// Regularized lower incomplete gamma function P(a,b) = gamma(a,b) / Gamma(a).
inline double regularized_gamma_p(double a, double b) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: shape must be positive");
  if (!(b >= 0.0)) throw std::domain_error("regularized_gamma_p: argument must be nonnegative");
  if (b == 0.0) return 0.0;
  if (a == 1.0) return -std::expm1(-b);
  if (b < a + 1.0) return detail::gamma_p_series(a, b);
  return 1.0 - detail::gamma_q_contfrac(a, b);
}

/// Lower incomplete gamma function gamma(a,b) = integral of tau^(a-1) e^-tau over [0,b].
inline double lower_incomplete_gamma(double a, double b) {
  return regularized_gamma_p(a, b) * gamma_fn(a);
}

}  // namespace harqopt
