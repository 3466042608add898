#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgc/params.hpp"
#include "hgc/special.hpp"

namespace hgc {

using Matrix = Eigen::MatrixXcd;

enum class MatrixKind { inf0, one0, zero1, one_inf, hat_one0, hat_inf0 };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::inf0: return "inf0";
    case MatrixKind::one0: return "one0";
    case MatrixKind::zero1: return "zero1";
    case MatrixKind::one_inf: return "one_inf";
    case MatrixKind::hat_one0: return "hat_one0";
    case MatrixKind::hat_inf0: return "hat_inf0";
  }
  return "?";
}

inline MatrixKind matrix_kind_from_string(const std::string& s) {
  for (auto k : {MatrixKind::inf0, MatrixKind::one0, MatrixKind::zero1,
                 MatrixKind::one_inf, MatrixKind::hat_one0,
                 MatrixKind::hat_inf0})
    if (s == to_string(k)) return k;
  throw config_error("unknown matrix kind: " + s);
}

inline constexpr const char* matrix_convention =
    "(target row-vector) * C = (source row-vector); column j expands the j-th "
    "source solution over the target basis";

struct ConnectionMatrix {
  MatrixKind kind = MatrixKind::inf0;
  int n = 0;
  Matrix entries;
  std::string convention = matrix_convention;
};

namespace detail {

template <class T>
using MatrixT = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

// Sine of a denominator argument, refused when it is too close to zero.
class SineGuard {
 public:
  explicit SineGuard(double eps) : floor_(pi * eps) {}
  template <class T>
  std::complex<T> operator()(std::complex<T> x) const {
    std::complex<T> v = sin_pi_t(x);
    if (!(std::abs(v) >= T(floor_)))
      throw numerical_error("near-degenerate denominator");
    return v;
  }

 private:
  double floor_;
};

// prod_{k != i, k <= n+1} s(alpha_k - beta_i) / s(beta_k - beta_i)
inline cplx column_product(const Parameters& p, int i, const SineGuard& den) {
  cplx r = 1.0;
  for (int k = 1; k <= p.n + 1; ++k)
    if (k != i) r *= sin_pi(p.a(k) - p.b(i)) / den(p.b(k) - p.b(i));
  return r;
}

inline ConnectionMatrix make(MatrixKind kind, int n) {
  ConnectionMatrix c;
  c.kind = kind;
  c.n = n;
  c.entries = Matrix::Zero(n + 1, n + 1);
  return c;
}

}  // namespace detail

// (D^inf_1..D^inf_{n+1}) = (D^0_1..D^0_{n+1}) C, entries as displayed for the
// 0/infinity problem.
inline ConnectionMatrix c_inf0(const Parameters& p,
                               double eps = default_eps_generic) {
  p.check_shape();
  detail::SineGuard den(eps);
  auto c = detail::make(MatrixKind::inf0, p.n);
  for (int i = 1; i <= p.n + 1; ++i) {
    cplx col = detail::column_product(p, i, den);
    for (int j = 1; j <= p.n + 1; ++j)
      c.entries(i - 1, j - 1) =
          sin_pi(p.b(j) - p.a(j)) / den(p.b(i) - p.a(j)) * col;
  }
  return c;
}

// The same matrix read off the connection formula: the coefficient of
// F_{D^0_j} in F_{D^inf_i}, placed at (j, i).
inline ConnectionMatrix c_inf0_formula(const Parameters& p,
                                       double eps = default_eps_generic) {
  p.check_shape();
  detail::SineGuard den(eps);
  auto c = detail::make(MatrixKind::inf0, p.n);
  for (int i = 1; i <= p.n + 1; ++i)
    for (int j = 1; j <= p.n + 1; ++j) {
      cplx coef = sin_pi(p.b(i) - p.a(i)) / den(p.b(j) - p.a(i));
      for (int s = 1; s <= p.n + 1; ++s)
        if (s != j) coef *= sin_pi(p.a(s) - p.b(j)) / den(p.b(s) - p.b(j));
      c.entries(j - 1, i - 1) = coef;
    }
  return c;
}

// The same entries in the exponents lambda, mu:
// C_{k,j} = (-1)^{n+k-j} s(mu_j) / s(lambda_{j,k-1} + mu_{j,k})
//           prod_{l != k} s(lambda_{l,k-1} + mu_{l,k}) /
//                         s(lambda_{l,k-1} + mu_{l+1,k}).
inline ConnectionMatrix c_inf0_exponent_form(const Parameters& p,
                                             double eps = default_eps_generic) {
  p.check_shape();
  detail::SineGuard den(eps);
  auto e = to_exponents(p);
  auto L = [&](int i, int j) { return partial_sum(e.lambda, i, j); };
  auto M = [&](int i, int j) { return partial_sum(e.mu, i, j); };
  int n = p.n;
  auto c = detail::make(MatrixKind::inf0, n);
  for (int j = 1; j <= n + 1; ++j)
    for (int k = 1; k <= n + 1; ++k) {
      double sign = ((n + k - j) % 2 == 0) ? 1.0 : -1.0;
      cplx v = sign * sin_pi(e.mu[j - 1]) / den(L(j, k - 1) + M(j, k));
      for (int l = 1; l <= n + 1; ++l)
        if (l != k)
          v *= sin_pi(L(l, k - 1) + M(l, k)) / den(L(l, k - 1) + M(l + 1, k));
      c.entries(k - 1, j - 1) = v;
    }
  return c;
}

namespace detail {

// Entries of C^(10) and C^(01) in floating type T; long double is used where
// a check must resolve cancellations beyond double precision.
template <class T>
MatrixT<T> c10_entries(const Parameters& p, double eps) {
  using C = std::complex<T>;
  SineGuard den(eps);
  int n = p.n;
  auto a = [&](int i) { return C(p.a(i)); };
  auto b = [&](int i) { return C(p.b(i)); };
  MatrixT<T> m(n + 1, n + 1);
  C san = sin_pi_t(a(n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    C col = 1;
    for (int k = 1; k <= n + 1; ++k)
      if (k != i) col *= sin_pi_t(a(k) - b(i)) / den(b(k) - b(i));
    C d = den(b(i) - a(n + 1));
    for (int j = 1; j <= n; ++j)
      m(i - 1, j - 1) = sin_pi_t(b(j) - a(j)) * san / (den(b(i) - a(j)) * d) * col;
    m(i - 1, n) = col;
  }
  return m;
}

template <class T>
MatrixT<T> c01_entries(const Parameters& p, double eps) {
  using C = std::complex<T>;
  SineGuard den(eps);
  int n = p.n;
  auto a = [&](int i) { return C(p.a(i)); };
  auto b = [&](int i) { return C(p.b(i)); };
  if (dist_to_int(total_exponent(p)) < eps)
    throw numerical_error("resonant total exponent");
  C tot = 0;
  for (int i = 1; i <= n; ++i) tot += b(i);
  for (int i = 1; i <= n + 1; ++i) tot -= a(i);
  C stot = den(tot), san = den(a(n + 1));
  MatrixT<T> m(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) {
    C prod = 1;
    for (int k = 1; k <= n; ++k)
      if (k != i) prod *= sin_pi_t(b(k) - a(i)) / den(a(k) - a(i));
    for (int j = 1; j <= n + 1; ++j)
      m(i - 1, j - 1) = -sin_pi_t(a(i)) * sin_pi_t(tot - b(j) + a(i)) *
                        sin_pi_t(b(j) - a(j)) /
                        (san * stot * den(b(j) - a(i))) * prod;
  }
  for (int j = 1; j <= n + 1; ++j) m(n, j - 1) = -sin_pi_t(b(j) - a(j)) / stot;
  return m;
}

}  // namespace detail

// (D~^1_1..D~^1_{n+1}) = (D~^0_1..D~^0_{n+1}) C^(10), entries as displayed.
inline ConnectionMatrix c_10(const Parameters& p,
                             double eps = default_eps_generic) {
  p.check_shape();
  auto c = detail::make(MatrixKind::one0, p.n);
  c.entries = detail::c10_entries<double>(p, eps);
  return c;
}

// C^(10) read off the connection formulas for F_{D~^1_i}, i <= n and i = n+1.
inline ConnectionMatrix c_10_formula(const Parameters& p,
                                     double eps = default_eps_generic) {
  p.check_shape();
  detail::SineGuard den(eps);
  int n = p.n;
  auto c = detail::make(MatrixKind::one0, n);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      cplx coef = 1.0;
      for (int k = 1; k <= n + 1; ++k)
        if (k != j) coef *= sin_pi(p.a(k) - p.b(j)) / den(p.b(k) - p.b(j));
      if (i <= n)
        coef *= sin_pi(p.b(i) - p.a(i)) * sin_pi(p.a(n + 1)) /
                (den(p.b(j) - p.a(i)) * den(p.b(j) - p.a(n + 1)));
      c.entries(j - 1, i - 1) = coef;
    }
  return c;
}

// C^(10) in lambda/mu variables, obtained by continuing the exponent form of
// C^(inf0) along the path from z<0 to 0<z<1.
inline ConnectionMatrix c_10_exponent_form(const Parameters& p,
                                           double eps = default_eps_generic) {
  p.check_shape();
  detail::SineGuard den(eps);
  auto e = to_exponents(p);
  auto L = [&](int i, int j) { return partial_sum(e.lambda, i, j); };
  auto M = [&](int i, int j) { return partial_sum(e.mu, i, j); };
  auto ratio = [&](int l, int k) {
    return sin_pi(L(l, k - 1) + M(l, k)) / den(L(l, k - 1) + M(l + 1, k));
  };
  int n = p.n;
  auto c = detail::make(MatrixKind::one0, n);
  for (int j = 1; j <= n; ++j) {
    double sign = (j % 2 == 1) ? 1.0 : -1.0;
    for (int k = 1; k <= n; ++k) {
      cplx v = sign * sin_pi(e.mu[j - 1]) * sin_pi(e.mu[n]) /
               (den(L(j, k - 1) + M(j, k)) *
                den(L(n + 1, k - 1) + M(n + 2, k)));
      for (int l = 1; l <= n; ++l)
        if (l != k) v *= ratio(l, k);
      c.entries(k - 1, j - 1) = v;
    }
    cplx v = sign * sin_pi(e.mu[j - 1]) / den(L(j, n) + M(j, n + 1));
    for (int l = 1; l <= n; ++l) v *= ratio(l, n + 1);
    c.entries(n, j - 1) = v;
  }
  for (int k = 1; k <= n + 1; ++k) {
    cplx v = (n % 2 == 0) ? 1.0 : -1.0;
    for (int l = 1; l <= n + 1; ++l)
      if (l != k) v *= ratio(l, k);
    c.entries(k - 1, n) = v;
  }
  return c;
}

// The closed-form inverse of C^(10).
inline ConnectionMatrix c_01(const Parameters& p,
                             double eps = default_eps_generic) {
  p.check_shape();
  auto c = detail::make(MatrixKind::zero1, p.n);
  c.entries = detail::c01_entries<double>(p, eps);
  return c;
}

// Basis at 1 over the basis at infinity. Continuing z<0 to 0<z<1 through the
// lower half plane maps each D^0_j onto a multiple g_j of D~^0_j,
// g_j = (-1)^{n-j+1} e(lambda_{j,n} + mu_{j+1,n+1}). With (D^inf) = (D^0)
// C^(inf0) and (D~^1) = (D~^0) C^(10) this gives
// (D~^1) = (D^inf) (C^(inf0))^{-1} G^{-1} C^(10), G = diag(g).
inline ConnectionMatrix c_one_inf(const Parameters& p,
                                  double eps = default_eps_generic) {
  auto ci = c_inf0(p, eps);
  auto c1 = c_10(p, eps);
  auto e = to_exponents(p);
  int n = p.n;
  Matrix Ginv = Matrix::Zero(n + 1, n + 1);
  for (int j = 1; j <= n + 1; ++j) {
    double sign = ((n - j + 1) % 2 == 0) ? 1.0 : -1.0;
    Ginv(j - 1, j - 1) = sign * e_pi(-partial_sum(e.lambda, j, n) -
                                     partial_sum(e.mu, j + 1, n + 1));
  }
  auto lu = ci.entries.fullPivLu();
  if (!lu.isInvertible()) throw numerical_error("singular C^(inf0)");
  auto c = detail::make(MatrixKind::one_inf, n);
  c.entries = lu.solve(Ginv * c1.entries);
  return c;
}

struct ScalingMatrices {
  Matrix N0, N1, Ninf;
};

inline ScalingMatrices scaling_matrices(const Parameters& p) {
  p.check_shape();
  int n = p.n;
  ScalingMatrices s;
  s.N0 = Matrix::Zero(n + 1, n + 1);
  s.N1 = Matrix::Zero(n + 1, n + 1);
  cplx et = e_pi(total_exponent(p));
  for (int i = 1; i <= n + 1; ++i) {
    s.N0(i - 1, i - 1) = e_pi(p.a(i));
    s.N1(i - 1, i - 1) = et * e_pi(p.b(i));
  }
  s.Ninf = s.N1;
  return s;
}

// hat C^(10) = N0^{-1} diag(-e(beta_1), ..., -e(beta_{n+1})) C^(10) N1 and
// hat C^(inf0) = N0^{-1} C^(inf0) Ninf.
inline ConnectionMatrix c_hat(MatrixKind kind, const Parameters& p,
                              double eps = default_eps_generic) {
  auto s = scaling_matrices(p);
  int n = p.n;
  Matrix N0inv = Matrix::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) N0inv(i, i) = 1.0 / s.N0(i, i);
  ConnectionMatrix c;
  if (kind == MatrixKind::hat_one0 || kind == MatrixKind::one0) {
    Matrix D = Matrix::Zero(n + 1, n + 1);
    for (int i = 1; i <= n + 1; ++i) D(i - 1, i - 1) = -e_pi(p.b(i));
    c = detail::make(MatrixKind::hat_one0, n);
    c.entries = N0inv * (D * c_10(p, eps).entries) * s.N1;
  } else if (kind == MatrixKind::hat_inf0 || kind == MatrixKind::inf0) {
    c = detail::make(MatrixKind::hat_inf0, n);
    c.entries = N0inv * c_inf0(p, eps).entries * s.Ninf;
  } else {
    throw config_error("c_hat: kind must be one0 or inf0");
  }
  return c;
}

inline ConnectionMatrix build_matrix(MatrixKind kind, const Parameters& p,
                                     double eps = default_eps_generic) {
  switch (kind) {
    case MatrixKind::inf0: return c_inf0(p, eps);
    case MatrixKind::one0: return c_10(p, eps);
    case MatrixKind::zero1: return c_01(p, eps);
    case MatrixKind::one_inf: return c_one_inf(p, eps);
    case MatrixKind::hat_one0: return c_hat(MatrixKind::one0, p, eps);
    case MatrixKind::hat_inf0: return c_hat(MatrixKind::inf0, p, eps);
  }
  throw config_error("unknown matrix kind");
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// max |hat C(shifted) - hat C(original)|
inline double periodicity_residual(MatrixKind kind, const Parameters& p,
                                   const std::vector<int>& dalpha,
                                   const std::vector<int>& dbeta,
                                   double eps = default_eps_generic) {
  Parameters q = shift(p, dalpha, dbeta);
  for (const Parameters* x : {&p, static_cast<const Parameters*>(&q)}) {
    auto r = validate(*x, eps);
    if (!r.ok)
      throw numerical_error("non-generic parameters: " +
                            r.violations.front().kind);
  }
  return max_abs(c_hat(kind, q, eps).entries - c_hat(kind, p, eps).entries);
}

}  // namespace hgc
