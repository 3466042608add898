#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "hgc/error.hpp"

namespace hgc {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Distance from z to the nearest integer.
inline double dist_to_int(cplx z) {
  return std::abs(z - std::round(z.real()));
}

namespace detail {

// sin(pi x), cos(pi x) for real x. The argument is reduced into [-1/2, 1/2]
// first, so integers give exact zeros of sin.
template <class T>
void sincos_pi(T x, T& s, T& c) {
  constexpr T pi_t = std::numbers::pi_v<T>;
  T r = std::remainder(x, T(2));
  T sign = 1;
  if (r > T(0.5)) {
    r = 1 - r;
    sign = -1;
  } else if (r < T(-0.5)) {
    r = -1 - r;
    sign = -1;
  }
  s = std::sin(pi_t * r);
  c = sign * std::cos(pi_t * r);
}

inline bool near_nonpositive_int(cplx z) {
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z - r) < 1e-14 * std::max(1.0, std::abs(r));
}

}  // namespace detail

// s(z) = sin(pi z), in any floating type.
template <class T>
std::complex<T> sin_pi_t(std::complex<T> z) {
  T s, c;
  detail::sincos_pi(z.real(), s, c);
  T y = std::numbers::pi_v<T> * z.imag();
  return {s * std::cosh(y), c * std::sinh(y)};
}

inline cplx sin_pi(cplx z) { return sin_pi_t(z); }

// e(z) = exp(pi i z)
inline cplx e_pi(cplx z) {
  double s, c;
  detail::sincos_pi(z.real(), s, c);
  double m = std::exp(-pi * z.imag());
  return {m * c, m * s};
}

// Principal log Gamma. The argument is shifted to Re >= 15 by the recurrence
// and Stirling's series is applied there; the shift product is accumulated as
// a modulus and a sum of arguments so the imaginary part stays on the
// principal branch.
inline cplx log_gamma(cplx z) {
  if (!is_finite(z)) throw numerical_error("non-finite value");
  if (detail::near_nonpositive_int(z)) throw numerical_error("gamma pole");
  static constexpr double bern[] = {
      1.0 / 6,      -1.0 / 30,       1.0 / 42,      -1.0 / 30,
      5.0 / 66,     -691.0 / 2730,   7.0 / 6,       -3617.0 / 510,
      43867.0 / 798, -174611.0 / 330};
  cplx w = z;
  double mod = 1.0, log_mod = 0.0, arg = 0.0;
  while (w.real() < 15.0) {
    mod *= std::abs(w);
    arg += std::arg(w);
    if (mod > 1e250 || mod < 1e-250) {
      log_mod += std::log(mod);
      mod = 1.0;
    }
    w += 1.0;
  }
  log_mod += std::log(mod);
  cplx lw = std::log(w);
  cplx r = (w - 0.5) * lw - w + 0.5 * std::log(2.0 * pi);
  cplx inv = 1.0 / w, inv2 = inv * inv, p = inv;
  for (int k = 1; k <= 10; ++k) {
    r += bern[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return r - cplx(log_mod, arg);
}

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

inline cplx beta(cplx a, cplx b) {
  if (detail::near_nonpositive_int(a) || detail::near_nonpositive_int(b) ||
      detail::near_nonpositive_int(a + b))
    throw numerical_error("beta pole");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

// (a)_k = a (a+1) ... (a+k-1)
inline cplx pochhammer(cplx a, long k) {
  cplx r = 1.0;
  for (long j = 0; j < k; ++j) r *= a + static_cast<double>(j);
  return r;
}

}  // namespace hgc
