#pragma once

// Independent reference values: direct quadrature of the loaded integrals for
// n <= 2, residue sums of the rational functions behind the inverse formula,
// and the classical n = 1 Gauss connection coefficients in Gamma form.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hgc/connection.hpp"
#include "hgc/params.hpp"
#include "hgc/special.hpp"

namespace hgc {

enum class Family { D0, Dinf, D0tilde, D1tilde };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::D0: return "D0";
    case Family::Dinf: return "Dinf";
    case Family::D0tilde: return "D0tilde";
    case Family::D1tilde: return "D1tilde";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "D0") return Family::D0;
  if (s == "Dinf") return Family::Dinf;
  if (s == "D0tilde") return Family::D0tilde;
  if (s == "D1tilde") return Family::D1tilde;
  throw config_error("unknown domain family '" + s + "'");
}

struct DomainSpec {
  Family family = Family::D0tilde;
  int index = 1;
  int n = 1;
  double z = 0.5;
};

// Signs with epsilon_i t_i > 0 and eta_i (t_{i-1} - t_i) > 0 on the domain,
// t_0 = 1, t_{n+1} = z.
struct BranchFixing {
  std::vector<int> epsilon, eta;
};

struct QuadratureOptions {
  double tol = 0.0;     // 0 picks 1e-8 for n = 1 and 1e-6 for n = 2
  double margin = 0.05;  // required slack in every integrability condition
};

struct QuadratureResult {
  cplx value;
  double error = 0.0;  // difference between the last two refinement levels
  double h = 0.0;      // final step in the DE variable
  long evaluations = 0;
};

namespace detail {

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Variables in increasing order of value on (lo, hi); at most one side
// infinite.
struct Chain {
  std::vector<int> vars;
  double lo, hi;
};

// t_from, ..., t_to stepping by +1 or -1; empty when the range is.
inline std::vector<int> up(int from, int to) {
  std::vector<int> v;
  for (int k = from; k <= to; ++k) v.push_back(k);
  return v;
}
inline std::vector<int> down(int from, int to) {
  std::vector<int> v;
  for (int k = from; k >= to; --k) v.push_back(k);
  return v;
}

inline void check_spec(const DomainSpec& d) {
  if (d.n < 1) throw config_error("n must be >= 1");
  if (d.index < 1 || d.index > d.n + 1) throw config_error("index out of range");
  if (!std::isfinite(d.z)) throw config_error("non-finite value");
  bool tilde = d.family == Family::D0tilde || d.family == Family::D1tilde;
  if (tilde && !(d.z > 0.0 && d.z < 1.0))
    throw config_error(std::string("domain ") + to_string(d.family) + " needs 0 < z < 1");
  if (!tilde && !(d.z < 0.0))
    throw config_error(std::string("domain ") + to_string(d.family) + " needs z < 0");
}

inline std::vector<Chain> domain_chains(const DomainSpec& d) {
  check_spec(d);
  int n = d.n, i = d.index;
  double z = d.z;
  std::vector<Chain> c;
  switch (d.family) {
    case Family::D0:  // z < t_n < ... < t_i < 0, 1 < t_1 < ... < t_{i-1}
      c = {{down(n, i), z, 0.0}, {up(1, i - 1), 1.0, inf}};
      break;
    case Family::Dinf:  // t_i < ... < t_n < z, 0 < t_{i-1} < ... < t_1 < 1
      c = {{up(i, n), -inf, z}, {down(i - 1, 1), 0.0, 1.0}};
      break;
    case Family::D0tilde:  // 0 < t_i < ... < t_n < z, 1 < t_1 < ... < t_{i-1}
      c = {{up(i, n), 0.0, z}, {up(1, i - 1), 1.0, inf}};
      break;
    case Family::D1tilde:
      if (i <= n)  // t_i < ... < t_n < 0, 0 < t_{i-1} < ... < t_1 < 1
        c = {{up(i, n), -inf, 0.0}, {down(i - 1, 1), 0.0, 1.0}};
      else  // z < t_n < ... < t_1 < 1
        c = {{down(n, 1), z, 1.0}};
      break;
  }
  std::erase_if(c, [](const Chain& ch) { return ch.vars.empty(); });
  return c;
}

// One end of a factor |x - y|^kappa: a variable t_k or a fixed point.
struct End {
  int var = 0;  // 0 for a fixed point
  double point = 0.0;
};

struct Factor {
  End a, b;
  cplx kappa;
};

inline std::vector<Factor> integrand_factors(const Parameters& p, double z) {
  ExponentSet e = to_exponents(p);
  int n = p.n;
  std::vector<Factor> f;
  for (int i = 1; i <= n; ++i) f.push_back({{i, 0.0}, {0, 0.0}, e.lambda[i - 1]});
  for (int i = 1; i <= n + 1; ++i) {
    End lo = i == 1 ? End{0, 1.0} : End{i - 1, 0.0};
    End hi = i == n + 1 ? End{0, z} : End{i, 0.0};
    f.push_back({lo, hi, e.mu[i - 1]});
  }
  return f;
}

// Real parts of the local exponents at every corner of the domain: points
// where a run of variables meets a bound, runs colliding in the interior,
// and runs escaping to infinity.
inline void check_integrable(const std::vector<Chain>& chains,
                             const std::vector<Factor>& factors,
                             double margin) {
  auto in = [](const std::vector<int>& s, const End& e, double P, bool with_P) {
    if (e.var) return std::find(s.begin(), s.end(), e.var) != s.end();
    return with_P && e.point == P;
  };
  auto fail = [](const std::string& where) {
    throw numerical_error("non-integrable exponent (" + where + ")");
  };
  // Finite bounds, with runs from every chain ending there.
  std::vector<double> points;
  for (const auto& c : chains)
    for (double P : {c.lo, c.hi})
      if (std::isfinite(P) && std::find(points.begin(), points.end(), P) ==
                                  points.end())
        points.push_back(P);
  for (double P : points) {
    std::vector<std::vector<std::vector<int>>> runs;  // per chain, r = 0..k
    for (const auto& c : chains) {
      if (c.lo != P && c.hi != P) continue;
      std::vector<std::vector<int>> opts(1);
      for (std::size_t r = 1; r <= c.vars.size(); ++r) {
        std::vector<int> s;
        if (c.lo == P)
          s.assign(c.vars.begin(), c.vars.begin() + r);
        else
          s.assign(c.vars.end() - r, c.vars.end());
        opts.push_back(s);
      }
      runs.push_back(opts);
    }
    std::vector<std::size_t> pick(runs.size(), 0);
    for (;;) {
      std::vector<int> S;
      for (std::size_t c = 0; c < runs.size(); ++c)
        S.insert(S.end(), runs[c][pick[c]].begin(), runs[c][pick[c]].end());
      if (!S.empty()) {
        double re = static_cast<double>(S.size());
        for (const auto& f : factors)
          if (in(S, f.a, P, true) && in(S, f.b, P, true)) re += f.kappa.real();
        if (re <= margin) fail("at t = " + std::to_string(P));
      }
      std::size_t c = 0;
      while (c < runs.size() && ++pick[c] == runs[c].size()) pick[c++] = 0;
      if (c == runs.size()) break;
    }
  }
  for (const auto& c : chains) {
    std::size_t k = c.vars.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        std::vector<int> S(c.vars.begin() + a, c.vars.begin() + b + 1);
        double re = static_cast<double>(S.size()) - 1.0;
        for (const auto& f : factors)
          if (in(S, f.a, 0, false) && in(S, f.b, 0, false)) re += f.kappa.real();
        if (re <= margin) fail("collision of variables");
      }
    if (std::isfinite(c.lo) && std::isfinite(c.hi)) continue;
    for (std::size_t r = 1; r <= k; ++r) {
      std::vector<int> S;
      if (std::isinf(c.hi))
        S.assign(c.vars.end() - r, c.vars.end());
      else
        S.assign(c.vars.begin(), c.vars.begin() + r);
      double re = static_cast<double>(S.size());
      for (const auto& f : factors)
        if (in(S, f.a, 0, false) || in(S, f.b, 0, false)) re += f.kappa.real();
      if (re >= -margin) fail("decay at infinity");
    }
  }
}

inline double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -inf) return a;
  return a + std::log1p(std::exp(b - a));
}

// Tanh-sinh nodes in logistic form: a bounded axis places x at fraction
// xl = 1/(1+e^{-s}) of its interval, s = pi sinh t; a ray takes the gap
// g = e^s. Everything is kept in logs so endpoint clustering costs nothing.
struct Rule {
  struct Bounded {
    double lnxl, lndr, lnw;
  };
  struct Ray {
    double lng, lnw;
  };
  std::vector<Bounded> bounded;
  std::vector<Ray> ray;
};

inline Rule make_rule(double h) {
  constexpr double t_bounded = 7.0, t_ray_hi = 6.0;  // e^{pi sinh 6} < 1e300
  Rule r;
  double lnh = std::log(h);
  long K = std::lround(t_bounded / h);
  for (long k = -K; k <= K; ++k) {
    double t = static_cast<double>(k) * h, s = pi * std::sinh(t);
    double lnj = std::log(pi * std::cosh(t)) + lnh;
    double lnxl = -softplus(-s), lndr = -softplus(s);
    r.bounded.push_back({lnxl, lndr, lnxl + lndr + lnj});
    if (t <= t_ray_hi) r.ray.push_back({s, s + lnj});
  }
  return r;
}

class NestedQuadrature {
 public:
  NestedQuadrature(std::vector<Chain> chains, std::vector<Factor> factors)
      : chains_(std::move(chains)), factors_(std::move(factors)) {
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const Chain& ch = chains_[c];
      std::size_t k = ch.vars.size();
      // Variables are placed outward from the anchor: lo unless lo = -inf.
      bool down = std::isinf(ch.lo);
      for (std::size_t j = 0; j < k; ++j) {
        int v = down ? ch.vars[k - 1 - j] : ch.vars[j];
        axes_.push_back({static_cast<int>(c), static_cast<int>(j)});
        if (static_cast<int>(where_.size()) <= v) where_.resize(v + 1);
        where_[v] = {static_cast<int>(c), static_cast<int>(j)};
      }
      State s;
      s.anchor = down ? ch.hi : ch.lo;
      s.far = down ? ch.lo : ch.hi;
      s.sign = down ? -1.0 : 1.0;
      s.ray = std::isinf(ch.lo) || std::isinf(ch.hi);
      s.gap.assign(k, 0.0);
      s.to_anchor.assign(k, 0.0);
      s.to_far.assign(k, 0.0);
      s.x.assign(k, 0.0);
      state_.push_back(s);
    }
  }

  cplx integrate(const Rule& rule) {
    evals_ = 0;
    return level(rule, 0, 0.0);
  }
  long evaluations() const { return evals_; }

 private:
  struct Axis {
    int chain, pos;
  };
  struct State {
    double anchor, far, sign;
    bool ray;
    std::vector<double> gap, to_anchor, to_far, x;
  };

  void place(State& s, int j, double lngap, double lnfar) {
    s.gap[j] = lngap;
    s.to_anchor[j] = j == 0 ? lngap : log_add(s.to_anchor[j - 1], lngap);
    s.to_far[j] = lnfar;
    if (s.ray || s.to_anchor[j] <= lnfar)
      s.x[j] = s.anchor + s.sign * std::exp(s.to_anchor[j]);
    else
      s.x[j] = s.far - s.sign * std::exp(lnfar);
  }

  cplx level(const Rule& rule, std::size_t axis, double lnw) {
    if (axis == axes_.size()) {
      ++evals_;
      cplx e = lnw;
      for (const auto& f : factors_) e += f.kappa * log_dist(f.a, f.b);
      return std::exp(e);
    }
    auto [c, j] = axes_[axis];
    State& s = state_[c];
    cplx sum = 0.0;
    if (s.ray) {
      for (const auto& nd : rule.ray) {
        place(s, j, nd.lng, inf);
        sum += level(rule, axis + 1, lnw + nd.lnw);
      }
    } else {
      double L = j == 0 ? std::log(std::abs(s.far - s.anchor)) : s.to_far[j - 1];
      for (const auto& nd : rule.bounded) {
        place(s, j, L + nd.lnxl, L + nd.lndr);
        sum += level(rule, axis + 1, lnw + L + nd.lnw);
      }
    }
    return sum;
  }

  double log_to_point(int v, double P) const {
    auto [c, j] = where_[v];
    const State& s = state_[c];
    if (P == s.anchor) return s.to_anchor[j];
    if (!s.ray && P == s.far) return s.to_far[j];
    return std::log(std::abs(s.x[j] - P));
  }

  double log_dist(const End& a, const End& b) const {
    if (!a.var && !b.var) return std::log(std::abs(a.point - b.point));
    if (!a.var) return log_to_point(b.var, a.point);
    if (!b.var) return log_to_point(a.var, b.point);
    auto [ca, ja] = where_[a.var];
    auto [cb, jb] = where_[b.var];
    if (ca == cb) {
      const State& s = state_[ca];
      int lo = std::min(ja, jb), hi = std::max(ja, jb);
      double r = s.gap[lo + 1];
      for (int k = lo + 2; k <= hi; ++k) r = log_add(r, s.gap[k]);
      return r;
    }
    const Chain& A = chains_[ca];
    const Chain& B = chains_[cb];
    for (double P : {A.lo, A.hi})
      if (std::isfinite(P) && (P == B.lo || P == B.hi))
        return log_add(log_to_point(a.var, P), log_to_point(b.var, P));
    return std::log(std::abs(state_[ca].x[ja] - state_[cb].x[jb]));
  }

  std::vector<Chain> chains_;
  std::vector<Factor> factors_;
  std::vector<Axis> axes_;
  std::vector<Axis> where_;
  std::vector<State> state_;
  long evals_ = 0;
};

}  // namespace detail

inline BranchFixing branch_fixing(const DomainSpec& d) {
  auto chains = detail::domain_chains(d);
  std::vector<double> t(d.n + 2);
  t[0] = 1.0;
  t[d.n + 1] = d.z;
  for (const auto& c : chains) {
    double k = static_cast<double>(c.vars.size());
    for (std::size_t j = 0; j < c.vars.size(); ++j) {
      double r = static_cast<double>(j) + 1.0, x;
      if (std::isinf(c.hi))
        x = c.lo + r;
      else if (std::isinf(c.lo))
        x = c.hi - (k + 1.0 - r);
      else
        x = c.lo + (c.hi - c.lo) * r / (k + 1.0);
      t[c.vars[j]] = x;
    }
  }
  BranchFixing b;
  for (int i = 1; i <= d.n; ++i) b.epsilon.push_back(t[i] > 0 ? 1 : -1);
  for (int i = 1; i <= d.n + 1; ++i)
    b.eta.push_back(t[i - 1] - t[i] > 0 ? 1 : -1);
  return b;
}

// F_D(z): the integral of u_D over the domain with every factor taken
// positive, by nested double-exponential quadrature refined until two
// successive step sizes agree to tol * max(1, |F|).
inline QuadratureResult integrate_loaded_domain(const DomainSpec& d,
                                                const Parameters& p,
                                                QuadratureOptions opt = {}) {
  p.check_shape();
  if (p.n != d.n) throw config_error("domain and parameters disagree on n");
  if (d.n > 2) throw config_error("quadrature supports n <= 2");
  auto chains = detail::domain_chains(d);
  auto factors = detail::integrand_factors(p, d.z);
  detail::check_integrable(chains, factors, opt.margin);
  double tol = opt.tol > 0.0 ? opt.tol : (d.n == 1 ? 1e-8 : 1e-6);
  int last = d.n == 1 ? 6 : 5;  // finest step 1/256 resp. 1/128
  detail::NestedQuadrature q(chains, factors);
  QuadratureResult r;
  cplx prev = 0.0;
  for (int l = 0; l <= last; ++l) {
    double h = 0.25 / static_cast<double>(1 << l);
    cplx v = q.integrate(detail::make_rule(h));
    r.evaluations += q.evaluations();
    if (!is_finite(v)) throw numerical_error("non-finite quadrature value");
    if (l > 0) {
      double diff = std::abs(v - prev);
      if (diff <= tol * std::max(1.0, std::abs(v))) {
        r.value = v;
        r.error = diff;
        r.h = h;
        return r;
      }
    }
    prev = v;
  }
  throw numerical_error("quadrature stagnation");
}

inline QuadratureResult integrate_loaded_domain(const DomainSpec& d,
                                                const Parameters& p,
                                                double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return integrate_loaded_domain(d, p, opt);
}

// Residue sums of the rational functions in the proof of the inverse formula.
enum class ResidueCase { i_offdiag, i_diag, ii, iii, iv };

inline const char* to_string(ResidueCase c) {
  switch (c) {
    case ResidueCase::i_offdiag: return "i_offdiag";
    case ResidueCase::i_diag: return "i_diag";
    case ResidueCase::ii: return "ii";
    case ResidueCase::iii: return "iii";
    case ResidueCase::iv: return "iv";
  }
  return "?";
}

struct ResidueCheck {
  double residual = 0.0;
  cplx expected;      // value the b-pole residues must sum to
  cplx b_residues;    // sum over x = b_k^2
  cplx other;         // residues at the remaining poles (a_i^2, 0, infinity)
  cplx sine_form;     // the sum before the change of variables a = e(alpha)
};

namespace detail {

struct ResidueData {
  int n;
  std::vector<cplx> a2, b2;  // a_l^2, b_l^2 (b_{n+1}^2 = 1)
  cplx Pa = 1.0, Pb = 1.0, A = 1.0, B = 1.0;
};

inline ResidueData residue_data(const Parameters& p) {
  ResidueData d;
  d.n = p.n;
  for (int l = 1; l <= p.n + 1; ++l) {
    cplx a = e_pi(p.a(l)), b = e_pi(p.b(l));
    d.a2.push_back(a * a);
    d.b2.push_back(l <= p.n ? b * b : cplx(1.0));
    d.Pa *= a;
    d.A *= a * a;
    if (l <= p.n) {
      d.Pb *= b;
      d.B *= b * b;
    }
  }
  std::vector<cplx> poles(d.b2);
  poles.push_back(0.0);
  for (auto x : d.a2) poles.push_back(x);
  for (std::size_t u = 0; u < poles.size(); ++u)
    for (std::size_t v = u + 1; v < poles.size(); ++v)
      if (std::abs(poles[u] - poles[v]) < 1e-8) throw numerical_error("pole collision");
  return d;
}

// prod_l (x - a_l^2) / prod_{l != k} (x - b_l^2), skipping the a-factors in
// `cancel`; the b_k factor is the one deflated away.
inline cplx deflated_product(const ResidueData& d, cplx x, int k,
                             const std::vector<int>& cancel) {
  cplx r = 1.0;
  for (int l = 1; l <= d.n + 1; ++l) {
    if (std::find(cancel.begin(), cancel.end(), l) == cancel.end())
      r *= x - d.a2[l - 1];
    if (l != k) r *= 1.0 / (x - d.b2[l - 1]);
  }
  return r;
}

inline cplx sprod_k(const Parameters& p, int k) {
  cplx r = 1.0;
  for (int l = 1; l <= p.n + 1; ++l)
    if (l != k) r *= sin_pi(p.b(k) - p.a(l)) / sin_pi(p.b(k) - p.b(l));
  return r;
}

}  // namespace detail

// Single instance; i and j are the row and column indices of the product
// entry the case belongs to (ignored where the case fixes them).
inline ResidueCheck residue_sum_check(ResidueCase rc, const Parameters& p,
                                      int i, int j) {
  p.check_shape();
  int n = p.n;
  if (rc == ResidueCase::i_diag) j = i;
  if (i < 1 || i > n + 1 || j < 1 || j > n + 1)
    throw config_error("index out of range");
  if ((rc == ResidueCase::i_offdiag || rc == ResidueCase::i_diag ||
       rc == ResidueCase::ii) && (i < 1 || i > n))
    throw config_error("index out of range");
  if ((rc == ResidueCase::i_offdiag || rc == ResidueCase::iii) && (j < 1 || j > n))
    throw config_error("index out of range");
  if (rc == ResidueCase::i_offdiag && i == j)
    throw config_error("off-diagonal case needs i != j");
  auto d = detail::residue_data(p);
  cplx tot = total_exponent(p), s_tot = sin_pi(tot);
  cplx aj = e_pi(p.a(j));
  cplx an1 = e_pi(p.a(n + 1));
  ResidueCheck r;
  auto sum_b = [&](auto&& g) {
    cplx s = 0.0;
    for (int k = 1; k <= n + 1; ++k) s += g(k, d.b2[k - 1]);
    return s;
  };
  auto sine_sum = [&](auto&& g) {
    cplx s = 0.0;
    for (int k = 1; k <= n + 1; ++k) s += g(k) * detail::sprod_k(p, k);
    return s;
  };
  switch (rc) {
    case ResidueCase::i_offdiag:
    case ResidueCase::i_diag: {
      // f_1(x) = -2i a_j a_{n+1}/A (B a_i^2 - A x) / ((x-a_i^2)(x-a_j^2)
      //          (x-a_{n+1}^2)) prod (x-a_l^2)/(x-b_l^2)
      cplx pre = -2.0 * I * aj * an1 / d.A;
      cplx ai2 = d.a2[i - 1];
      std::vector<int> cancel = {i, n + 1};
      if (j != i) cancel.push_back(j);
      auto f_defl = [&](int k, cplx x) {
        cplx v = pre * (d.B * ai2 - d.A * x) * detail::deflated_product(d, x, k, cancel);
        return j == i ? v / (x - ai2) : v;
      };
      r.b_residues = sum_b(f_defl);
      if (j == i) {
        // Residue at a_i^2: all factors except 1/(x - a_i^2).
        r.other = pre * (d.B * ai2 - d.A * ai2) *
                  detail::deflated_product(d, ai2, 0, cancel);
        cplx prod = 1.0;
        for (int l = 1; l <= n; ++l)
          if (l != i) prod *= sin_pi(p.a(i) - p.a(l)) / sin_pi(p.a(i) - p.b(l));
        r.expected = -s_tot / (sin_pi(p.b(i) - p.a(i)) * sin_pi(p.a(i))) * prod;
      }
      r.sine_form = sine_sum([&](int k) {
        return sin_pi(tot - p.b(k) + p.a(i)) * sin_pi(p.b(k) - p.a(k)) /
               (sin_pi(p.b(k) - p.a(i)) * sin_pi(p.b(k) - p.a(j)) *
                sin_pi(p.b(k) - p.a(n + 1)));
      });
      break;
    }
    case ResidueCase::ii: {
      // f_2(x) = 1/(2i Pa x) (B a_i^2 - A x)/(x - a_i^2) prod (x-a_l^2)/(x-b_l^2)
      cplx ai2 = d.a2[i - 1];
      cplx pre = 1.0 / (2.0 * I * d.Pa);
      r.b_residues = sum_b([&](int k, cplx x) {
        return pre / x * (d.B * ai2 - d.A * x) * detail::deflated_product(d, x, k, {i});
      });
      // At 0 the product is A/B; at infinity f_2 ~ -pre A / x.
      cplx res0 = pre * (d.B * ai2) / (-ai2) * (d.A / d.B);
      cplx resinf = pre * d.A;
      r.other = res0 + resinf;
      r.sine_form = sine_sum([&](int k) {
        return sin_pi(tot - p.b(k) + p.a(i)) * sin_pi(p.b(k) - p.a(k)) /
               sin_pi(p.b(k) - p.a(i));
      });
      break;
    }
    case ResidueCase::iii: {
      // f_3(x) = 2i Pb a_j a_{n+1}/Pa / ((x-a_j^2)(x-a_{n+1}^2)) prod ...
      cplx pre = 2.0 * I * d.Pb * aj * an1 / d.Pa;
      std::vector<int> cancel = {j, n + 1};
      r.b_residues = sum_b([&](int k, cplx x) {
        return pre * detail::deflated_product(d, x, k, cancel);
      });
      r.sine_form = sine_sum([&](int k) {
        return sin_pi(p.b(k) - p.a(k)) /
               (sin_pi(p.b(k) - p.a(j)) * sin_pi(p.b(k) - p.a(n + 1)));
      });
      break;
    }
    case ResidueCase::iv: {
      // f_4(x) = -Pb/(2i Pa x) prod (x-a_l^2)/(x-b_l^2)
      cplx pre = -d.Pb / (2.0 * I * d.Pa);
      r.b_residues = sum_b([&](int k, cplx x) {
        return pre / x * detail::deflated_product(d, x, k, {});
      });
      cplx res0 = pre * (d.A / d.B);
      cplx resinf = -pre;
      r.other = res0 + resinf;
      r.expected = -s_tot;
      r.sine_form = sine_sum([&](int k) { return sin_pi(p.b(k) - p.a(k)); });
      break;
    }
  }
  // Three independent statements: the b-residues give the expected value,
  // all residues on the sphere cancel, and the rewriting in a, b is exact.
  r.residual = std::max({std::abs(r.b_residues - r.expected),
                         std::abs(r.b_residues + r.other),
                         std::abs(r.sine_form - r.b_residues)});
  return r;
}

// Worst case over all index pairs the case covers.
inline ResidueCheck residue_sum_check(ResidueCase rc, const Parameters& p) {
  ResidueCheck worst;
  worst.residual = -1.0;
  auto take = [&](int i, int j) {
    ResidueCheck r = residue_sum_check(rc, p, i, j);
    if (r.residual > worst.residual) worst = r;
  };
  int n = p.n;
  switch (rc) {
    case ResidueCase::i_offdiag:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) take(i, j);
      break;
    case ResidueCase::i_diag:
    case ResidueCase::ii:
      for (int i = 1; i <= n; ++i) take(i, i);
      break;
    case ResidueCase::iii:
      for (int j = 1; j <= n; ++j) take(n + 1, j);
      break;
    case ResidueCase::iv:
      take(n + 1, n + 1);
      break;
  }
  if (worst.residual < 0.0) worst.residual = 0.0;  // n = 1 has no off-diagonal
  return worst;
}

// The n = 1 connection matrices from the classical Gauss relations between
// F(a,b;c;z), z^{1-c} F(a-c+1,b-c+1;2-c;z) and their partners at 1 and
// infinity, with a = alpha_1, b = alpha_2, c = beta_1, rescaled to the F_D
// basis by the Beta prefactors.
inline ConnectionMatrix gauss_reference(const Parameters& p, MatrixKind target) {
  p.check_shape();
  if (p.n != 1) throw config_error("gauss_reference needs n = 1");
  if (!validate(p).ok) throw numerical_error("parameters not generic");
  cplx a = p.a(1), b = p.a(2), c = p.b(1);
  auto G = [](cplx x) { return gamma(x); };
  cplx B01 = beta(b - c + 1.0, 1.0 - b);  // D0_1 = B01 * (second solution)
  cplx B02 = beta(a, c - a);              // D0_2 = B02 * F(a,b;c;z)
  Matrix C(2, 2);
  if (target == MatrixKind::one0) {
    cplx B11 = beta(a, b - c + 1.0), B12 = beta(c - a, 1.0 - b);
    cplx s = a + b - c + 1.0, t = c - a - b + 1.0;
    C(1, 0) = B11 * G(s) * G(1.0 - c) / (G(a - c + 1.0) * G(b - c + 1.0)) / B02;
    C(0, 0) = B11 * G(s) * G(c - 1.0) / (G(a) * G(b)) / B01;
    C(1, 1) = B12 * G(t) * G(1.0 - c) / (G(1.0 - a) * G(1.0 - b)) / B02;
    C(0, 1) = B12 * G(t) * G(c - 1.0) / (G(c - a) * G(c - b)) / B01;
  } else if (target == MatrixKind::inf0) {
    cplx Bi1 = beta(a, 1.0 - b), Bi2 = beta(b - c + 1.0, c - a);
    C(1, 0) = Bi1 * G(a - b + 1.0) * G(1.0 - c) / (G(1.0 - b) * G(a - c + 1.0)) / B02;
    C(0, 0) = Bi1 * G(a - b + 1.0) * G(c - 1.0) / (G(a) * G(c - b)) / B01;
    C(1, 1) = Bi2 * G(b - a + 1.0) * G(1.0 - c) / (G(1.0 - a) * G(b - c + 1.0)) / B02;
    C(0, 1) = Bi2 * G(b - a + 1.0) * G(c - 1.0) / (G(b) * G(c - a)) / B01;
  } else {
    throw config_error("gauss_reference covers inf0 and one0 only");
  }
  return {target, 1, C, matrix_convention};
}

}  // namespace hgc
