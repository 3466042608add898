#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgc/params.hpp"
#include "hgc/special.hpp"

namespace hgc {

struct SeriesValue {
  cplx value;
  double tail_estimate = 0.0;  // bound / estimate of the omitted part
  long terms_used = 0;
};

struct SeriesOptions {
  double tol = 1e-12;
  long max_terms = 100000;
  int max_order = 400;
  // Arguments with |z| > 0.8 (or |1-z| > 0.8 at the point 1) are refused
  // unless the caller asked for a larger term budget explicitly.
  bool boundary_override = false;
};

enum class Branch { pos_z, neg_z };
enum class Point { zero, one, inf };

inline const char* to_string(Point p) {
  switch (p) {
    case Point::zero: return "0";
    case Point::one: return "1";
    case Point::inf: return "inf";
  }
  return "?";
}

inline const char* to_string(Branch b) {
  return b == Branch::pos_z ? "pos_z" : "neg_z";
}

namespace detail {

inline void check_lower(const std::vector<cplx>& lower) {
  for (auto b : lower)
    if (near_nonpositive_int(b))
      throw numerical_error("pole in lower parameter");
}

inline void boundary_guard(double r, const SeriesOptions& opt,
                           const char* what) {
  if (r > 0.8 && !opt.boundary_override)
    throw numerical_error(std::string(what) +
                          " too close to the disk boundary; raise max_terms "
                          "explicitly to allow it");
}

// Sums a p+1 F p series by the term ratio. Pairing each upper parameter u
// with a lower one l (the factorial counts as l = 1) gives, for j with
// Re l + j > 0, |ratio_j| <= |z| prod (1 + |u - l| / (Re l + j)), which
// decreases in j and bounds the tail geometrically.
inline SeriesValue sum_ghs(const std::vector<cplx>& upper,
                           const std::vector<cplx>& lower, cplx z, double tol,
                           long max_terms) {
  double az = std::abs(z);
  std::vector<cplx> low(lower);
  low.push_back(1.0);
  // Greedy pairing by closeness keeps the bound tight when parameters grow.
  std::vector<double> gap, re;
  std::vector<bool> used_u(upper.size()), used_l(low.size());
  for (std::size_t left = std::min(upper.size(), low.size()); left > 0;
       --left) {
    std::size_t bu = 0, bl = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < upper.size(); ++u)
      for (std::size_t l = 0; l < low.size(); ++l)
        if (!used_u[u] && !used_l[l] && std::abs(upper[u] - low[l]) < best) {
          best = std::abs(upper[u] - low[l]);
          bu = u;
          bl = l;
        }
    used_u[bu] = used_l[bl] = true;
    gap.push_back(best);
    re.push_back(low[bl].real());
  }
  cplx term = 1.0, sum = 1.0;
  int ok = 0;
  double tail = 0.0;
  for (long k = 0; k < max_terms; ++k) {
    double dk = static_cast<double>(k);
    cplx num = 1.0, den = dk + 1.0;
    for (auto a : upper) num *= a + dk;
    for (auto b : lower) den *= b + dk;
    if (num == 0.0) return {sum, 0.0, k + 1};  // terminating series
    term *= num / den * z;
    sum += term;
    double rho = az;
    for (std::size_t r = 0; r < gap.size() && rho < 1.0; ++r) {
      double d = re[r] + dk + 1.0;
      rho = d > 0.0 ? rho * (1.0 + gap[r] / d)
                    : std::numeric_limits<double>::infinity();
    }
    tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho)
                     : std::numeric_limits<double>::infinity();
    if (tail <= tol) {
      if (++ok >= 2) return {sum, tail, k + 2};
    } else {
      ok = 0;
    }
  }
  throw ConvergenceError("max terms exceeded", sum, tail);
}

// First x.size() terms of the linear convolution of x and y (same length).
// Direct summation keeps the error relative to each output term; an FFT
// would spread the rounding of the largest terms over the small ones. The
// sums run as real dot products, which Eigen vectorizes.
template <class R>
std::vector<std::complex<R>> convolve_head(const std::vector<std::complex<R>>& x,
                                           const std::vector<std::complex<R>>& y) {
  using Vec = Eigen::Matrix<R, Eigen::Dynamic, 1>;
  Eigen::Index K = static_cast<Eigen::Index>(x.size());
  Vec xr(K), xi(K), yr(K), yi(K);  // y reversed
  for (Eigen::Index k = 0; k < K; ++k) {
    xr[k] = x[k].real();
    xi[k] = x[k].imag();
    yr[K - 1 - k] = y[k].real();
    yi[K - 1 - k] = y[k].imag();
  }
  std::vector<std::complex<R>> r(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    auto a = xr.head(k + 1), b = xi.head(k + 1);
    auto c = yr.segment(K - 1 - k, k + 1), d = yi.segment(K - 1 - k, k + 1);
    r[k] = {a.dot(c) - b.dot(d), a.dot(d) + b.dot(c)};
  }
  return r;
}

}  // namespace detail

// Generalized hypergeometric series for |z| < 1.
inline SeriesValue eval_ghs(const std::vector<cplx>& upper,
                            const std::vector<cplx>& lower, cplx z,
                            double tol = 1e-12, long max_terms = 100000) {
  if (!is_finite(z)) throw numerical_error("non-finite value");
  if (std::abs(z) >= 1.0) throw numerical_error("outside disk");
  detail::check_lower(lower);
  return detail::sum_ghs(upper, lower, z, tol, max_terms);
}

// f_i^(0): z^{1-beta_i} (pos_z) or (-z)^{1-beta_i} (neg_z) times the series
// with upper alpha_s - beta_i + 1 and lower beta_s - beta_i + 1 (s != i).
inline SeriesValue f0(int i, const Parameters& p, cplx z, Branch branch,
                      const SeriesOptions& opt = {}) {
  if (i < 1 || i > p.n + 1) throw config_error("index out of range");
  if (z == 0.0) throw numerical_error("z must be nonzero");
  detail::boundary_guard(std::abs(z), opt, "|z|");
  std::vector<cplx> up, lo;
  for (int s = 1; s <= p.n + 1; ++s) {
    up.push_back(p.a(s) - p.b(i) + 1.0);
    if (s != i) lo.push_back(p.b(s) - p.b(i) + 1.0);
  }
  SeriesValue v = eval_ghs(up, lo, z, opt.tol, opt.max_terms);
  cplx base = branch == Branch::pos_z ? z : -z;
  cplx e = 1.0 - p.b(i);
  if (e != 0.0) v.value *= std::pow(base, e);
  return v;
}

// f_i^(inf): (-z)^{-alpha_i} times the series in 1/z with upper
// alpha_i - beta_s + 1 and lower alpha_i - alpha_s + 1 (s != i).
inline SeriesValue finf(int i, const Parameters& p, cplx z,
                        const SeriesOptions& opt = {}) {
  if (i < 1 || i > p.n + 1) throw config_error("index out of range");
  if (std::abs(z) <= 1.0) throw numerical_error("outside disk");
  detail::boundary_guard(1.0 / std::abs(z), opt, "|1/z|");
  std::vector<cplx> up, lo;
  for (int s = 1; s <= p.n + 1; ++s) {
    up.push_back(p.a(i) - p.b(s) + 1.0);
    if (s != i) lo.push_back(p.a(i) - p.a(s) + 1.0);
  }
  SeriesValue v = eval_ghs(up, lo, 1.0 / z, opt.tol, opt.max_terms);
  if (p.a(i) != 0.0) v.value *= std::pow(-z, -p.a(i));
  return v;
}

// Weight attached to each summation index of the non-holomorphic solution at
// Weight in the sum over i_s. Only the Pochhammer form
// (beta_s - alpha_{s+1})_{i_s} / i_s! reduces to the Gauss solution for n = 1;
// the plain (beta_s - alpha_{s+1}) / i_s! variant is kept for tests that show
// it is wrong.
enum class NonholoWeight { pochhammer, printed };

// f_{n+1}^(1) = (1-z)^{beta_{1,n} - alpha_{1,n+1}} sum_m c_m (1-z)^m.
// c_m is built by a dynamic program over the running sums I_s = i_1+..+i_s:
//   g_0(0) = 1,
//   g_s(I) = (d_s)_I / (d_{s+1})_I * sum_j g_{s-1}(I-j) w_s(j),
// with d_s = beta_{1,s} - alpha_{1,s}, and c_m = g_n(m).
inline SeriesValue f1_nonholo(const Parameters& p, cplx z,
                              const SeriesOptions& opt = {},
                              NonholoWeight weight = NonholoWeight::pochhammer) {
  cplx y = 1.0 - z;
  if (!is_finite(z)) throw numerical_error("non-finite value");
  if (std::abs(y) >= 1.0) throw numerical_error("outside disk");
  detail::boundary_guard(std::abs(y), opt, "|1-z|");
  int n = p.n;
  std::vector<cplx> d(n + 2);
  for (int s = 1; s <= n + 1; ++s)
    d[s] = partial_sum(p, Seq::beta, 1, s) - partial_sum(p, Seq::alpha, 1, s);
  for (int s = 2; s <= n + 1; ++s)
    if (detail::near_nonpositive_int(d[s]))
      throw numerical_error("pole in lower Pochhammer base");
  std::vector<cplx> shift(n + 1);
  for (int s = 1; s <= n; ++s) shift[s] = p.b(s) - p.a(s + 1);

  // g[s][I], w[s][j], r[s] = (d_s)_I / (d_{s+1})_I at the current I
  std::vector<std::vector<cplx>> g(n + 1), w(n + 1);
  std::vector<cplx> ratio(n + 1, 1.0);
  g[0].push_back(1.0);
  cplx sum = 0.0, ypow = 1.0;
  double tail = 0.0, prev = 0.0;
  int ok = 0;
  double ay = std::abs(y);
  for (int m = 0; m <= opt.max_order; ++m) {
    if (m > 0) g[0].push_back(0.0);
    for (int s = 1; s <= n; ++s) {
      cplx wj;
      if (m == 0)
        wj = weight == NonholoWeight::pochhammer ? cplx(1.0) : shift[s];
      else if (weight == NonholoWeight::pochhammer)
        wj = w[s][m - 1] * (shift[s] + static_cast<double>(m - 1)) /
             static_cast<double>(m);
      else
        wj = w[s][m - 1] / static_cast<double>(m);
      w[s].push_back(wj);
      if (m > 0)
        ratio[s] *= (d[s] + static_cast<double>(m - 1)) /
                    (d[s + 1] + static_cast<double>(m - 1));
      cplx acc = 0.0;
      for (int j = 0; j <= m; ++j) acc += g[s - 1][m - j] * w[s][j];
      g[s].push_back(ratio[s] * acc);
    }
    cplx term = g[n][m] * ypow;
    sum += term;
    ypow *= y;
    double at = std::abs(term);
    if (m >= 8) {
      double rho = ay * std::max(1.0, prev > 0.0 ? at / prev : 1.0);
      tail = rho < 1.0 ? at * rho / (1.0 - rho)
                       : std::numeric_limits<double>::infinity();
      if (tail <= opt.tol) {
        if (++ok >= 2) {
          cplx pre = std::pow(y, total_exponent(p));
          return {pre * sum, std::abs(pre) * tail, m + 1};
        }
      } else {
        ok = 0;
      }
    }
    prev = at;
  }
  throw ConvergenceError("max order exceeded", std::pow(y, total_exponent(p)) * sum,
                         tail);
}

// Base of the (.)_{m1+m2} Pochhammer in the holomorphic solutions at 1. The
// Beta-shift step gives alpha_i, which is what the integral reproduces; the
// alpha_1 variant is test-only.
enum class HoloBase { alpha_i, alpha_1 };

// Holomorphic solution f_i^(1), 1 <= i <= n.
//
// Summing the m1 index first gives
//   f = sum_m (p)_m (q)_m / ((c)_m m!) E(m) 2F1(alpha_{n+1}, q+m; c+m; 1-z)
// with p = alpha_i - beta_i + 1, q = alpha_i, c = alpha_i + alpha_{n+1} -
// beta_i + 1 and E(m) = m! h_i(m). E(m) is the m-th moment of 1 - W where W
// is a product of independent Beta(a_s, b_s) variables, a_s = alpha_i -
// beta_s + 1, b_s = beta_s - alpha_s (s != i, s <= n). The alternating
// m3-sum for h_i cancels catastrophically, so E is built factor by factor
// from the positive-weight recursion
//   E_r(m) = sum_j C(m,j) (a_r)_j (b_r)_{m-j} / (a_r+b_r)_m E_{r+1}(j).
//
// The m-series only converges algebraically: partial sums behave like
// S + sum_s sum_k e_{s,k} M^{x_s - k}, x_s = p + q - c - a_s. The limit is
// extracted by fitting that expansion through partial sums at geometrically
// spaced M. With some Re x_s close to 0 the fit amplifies rounding in the
// coefficients by several digits, so they are built in long double.
struct HoloScheme {
  long terms = 8192;
  double ratio = 1.5;  // spacing of the fitted partial sums
  long min_m = 64;     // smallest partial sum entering a fit
};

class HoloSolution {
 public:
  using Scheme = HoloScheme;

  HoloSolution(const Parameters& p, int i, HoloBase base = HoloBase::alpha_i,
               HoloScheme scheme = {})
      : p_(p), i_(i), scheme_(scheme) {
    if (i < 1 || i > p.n) throw config_error("index out of range");
    cplx ai = p.a(i);
    a_ = p.a(p.n + 1);
    pp_ = ai - p.b(i) + 1.0;
    q_ = base == HoloBase::alpha_i ? ai : p.a(1);
    c_ = ai + p.a(p.n + 1) - p.b(i) + 1.0;
    if (detail::near_nonpositive_int(c_))
      throw numerical_error("pole in lower Pochhammer base");
    for (int s = 1; s <= p.n; ++s) {
      if (s == i) continue;
      cplx as = ai - p.b(s) + 1.0, bs = p.b(s) - p.a(s);
      if (as.real() <= 0.0 || bs.real() <= 0.0)
        throw numerical_error(
            "holomorphic solution at 1 needs Re(alpha_i-beta_s+1) > 0 and "
            "Re(beta_s-alpha_s) > 0");
      fa_.push_back(as);
      fb_.push_back(bs);
      cplx x = pp_ + q_ - c_ - as;
      if (x.real() >= 0.0)
        throw numerical_error(
            "holomorphic series at 1 diverges: needs Re(alpha_{n+1}-beta_s+1) "
            "> 0");
      expo_.push_back(x);
    }
    if (!fa_.empty()) {
      build_coefficients(scheme_.terms);
      for (double M = static_cast<double>(scheme_.terms); M >= scheme_.min_m;
           M /= scheme_.ratio) {
        long m = std::lround(M);
        if (checkpoints_.empty() || checkpoints_.front() != m)
          checkpoints_.insert(checkpoints_.begin(), m);
      }
    }
  }

  long terms() const {
    return fa_.empty() ? 0 : static_cast<long>(coef_.size());
  }

  SeriesValue operator()(cplx z, const SeriesOptions& opt = {}) const {
    cplx y = 1.0 - z;
    if (!is_finite(z)) throw numerical_error("non-finite value");
    if (std::abs(y) >= 1.0) throw numerical_error("outside disk");
    detail::boundary_guard(std::abs(y), opt, "|1-z|");
    if (fa_.empty()) return detail::sum_ghs({a_, q_}, {c_}, y, opt.tol,
                                            opt.max_terms);
    long K = static_cast<long>(coef_.size());
    std::vector<lcplx> partial;
    lcplx sum = 0.0L, ly(y.real(), y.imag());
    std::size_t next = 0;
    for (long m = 0; m < K; ++m) {
      sum += coef_[m] * gauss(m, ly, opt.max_terms);
      if (next < checkpoints_.size() && m + 1 == checkpoints_[next]) {
        partial.push_back(sum);
        ++next;
      }
    }
    // Raise the order of the fit while successive estimates keep agreeing
    // better; the best agreement is the error estimate.
    lcplx best = 0.0L, prev = 0.0L;
    long double spread = std::numeric_limits<long double>::infinity();
    int fam = static_cast<int>(expo_.size());
    for (int per = 1; 1 + per * fam <= static_cast<int>(partial.size()); ++per) {
      lcplx v = extrapolate(partial, per);
      if (per > 1 && std::abs(v - prev) < spread) {
        spread = std::abs(v - prev);
        best = v;
      }
      prev = v;
    }
    if (!std::isfinite(static_cast<double>(spread)))
      throw numerical_error("holomorphic series at 1: too few partial sums");
    return {cplx(static_cast<double>(best.real()), static_cast<double>(best.imag())),
            static_cast<double>(spread), K};
  }

 private:
  using lcplx = std::complex<long double>;

  static lcplx widen(cplx x) { return {x.real(), x.imag()}; }

  // 2F1(alpha_{n+1}, q+m; c+m; y) in long double.
  lcplx gauss(long m, lcplx y, long max_terms) const {
    long double dm = static_cast<long double>(m);
    lcplx a = widen(a_), b = widen(q_) + dm, c = widen(c_) + dm;
    lcplx sum = 1.0L, term = 1.0L;
    for (long k = 0; k < max_terms; ++k) {
      long double dk = static_cast<long double>(k);
      term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0L)) * y;
      sum += term;
      // Past k ~ |a| + |c-b| the term ratio is close to |y| < 1.
      if (dk > std::abs(a) + std::abs(c - b) && std::abs(term) < 1e-21L * std::abs(sum))
        return sum;
    }
    throw ConvergenceError("max terms exceeded",
                           cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
                           static_cast<double>(std::abs(term)));
  }

  void build_coefficients(long K) {
    // E over the Beta factors, innermost factor first. In factorial-free form
    // E_r(k) = k!/(c)_k sum_j (a)_j/j! (b)_{k-j}/(k-j)! E_{r+1}(j).
    std::vector<lcplx> E(K), next(K), A(K), B(K);
    for (std::size_t r = fa_.size(); r-- > 0;) {
      lcplx a = widen(fa_[r]), b = widen(fb_[r]), c = a + b;
      A[0] = B[0] = 1.0L;
      for (long k = 1; k < K; ++k) {
        long double dk = static_cast<long double>(k);
        A[k] = A[k - 1] * (a + dk - 1.0L) / dk;
        B[k] = B[k - 1] * (b + dk - 1.0L) / dk;
      }
      lcplx norm = 1.0L;  // k!/(c)_k
      for (long k = 0; k < K; ++k) {
        long double dk = static_cast<long double>(k);
        if (k > 0) norm *= dk / (c + dk - 1.0L);
        next[k] = r + 1 == fa_.size() ? norm * B[k] : norm;
      }
      if (r + 1 != fa_.size()) {
        std::vector<lcplx> AE(K);
        for (long k = 0; k < K; ++k) AE[k] = A[k] * E[k];
        std::vector<lcplx> conv = detail::convolve_head(AE, B);
        for (long k = 0; k < K; ++k) next[k] *= conv[k];
      }
      std::swap(E, next);
    }
    coef_.resize(K);
    lcplx t = 1.0L, pp = widen(pp_), q = widen(q_), c = widen(c_);
    for (long m = 0; m < K; ++m) {
      long double dm = static_cast<long double>(m);
      if (m > 0) t *= (pp + dm - 1.0L) * (q + dm - 1.0L) / ((c + dm - 1.0L) * dm);
      coef_[m] = t * E[m];
    }
  }

  // Fit S_M = S + sum_s sum_{k<per} e_{s,k} M^{x_s-k} through the last
  // 1 + per * (number of exponents) partial sums.
  lcplx extrapolate(const std::vector<lcplx>& partial, int per) const {
    using Mat = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<lcplx, Eigen::Dynamic, 1>;
    int fam = static_cast<int>(expo_.size());
    int unknowns = 1 + per * fam;
    int first = static_cast<int>(partial.size()) - unknowns;
    long double mmax = static_cast<long double>(checkpoints_.back());
    Mat A(unknowns, unknowns);
    Vec rhs(unknowns);
    for (int r = 0; r < unknowns; ++r) {
      long double lr = std::log(static_cast<long double>(checkpoints_[first + r]) / mmax);
      A(r, 0) = 1.0L;
      int col = 1;
      for (int s = 0; s < fam; ++s)
        for (int k = 0; k < per; ++k)
          A(r, col++) = std::exp((widen(expo_[s]) - static_cast<long double>(k)) * lr);
      rhs(r) = partial[first + r];
    }
    Eigen::Matrix<long double, Eigen::Dynamic, 1> scale(unknowns);
    for (int c = 0; c < unknowns; ++c) {
      scale(c) = A.col(c).cwiseAbs().maxCoeff();
      A.col(c) /= scale(c);
    }
    Vec x = A.fullPivLu().solve(rhs);
    return x(0) / scale(0);
  }

  Parameters p_;
  int i_;
  Scheme scheme_;
  cplx a_, pp_, q_, c_;
  std::vector<cplx> fa_, fb_, expo_;
  std::vector<lcplx> coef_;
  std::vector<long> checkpoints_;
};

inline SeriesValue f1_holo(int i, const Parameters& p, cplx z,
                           const SeriesOptions& opt = {},
                           HoloBase base = HoloBase::alpha_i) {
  return HoloSolution(p, i, base)(z, opt);
}

struct SolutionVector {
  Point point = Point::zero;
  cplx z;
  std::vector<cplx> values;         // F_D for D_1 .. D_{n+1}
  std::vector<SeriesValue> series;  // the bare series values f
  std::vector<cplx> prefactor;      // the Beta products
  std::string branch_note;
};

// Beta products relating each integral to its series.
inline cplx beta_prefactor(Point point, int i, const Parameters& p) {
  int n = p.n;
  cplx r = 1.0;
  switch (point) {
    case Point::zero:
      for (int s = 1; s <= n + 1; ++s)
        if (s != i) r *= beta(p.a(s) - p.b(i) + 1.0, p.b(s) - p.a(s));
      break;
    case Point::inf:
      for (int s = 1; s <= n + 1; ++s)
        if (s != i) r *= beta(p.a(i) - p.b(s) + 1.0, p.b(s) - p.a(s));
      break;
    case Point::one:
      if (i <= n) {
        for (int s = 1; s <= n; ++s)
          if (s != i) r *= beta(p.a(i) - p.b(s) + 1.0, p.b(s) - p.a(s));
        r *= beta(p.a(i), p.a(n + 1) - p.b(i) + 1.0);
      } else {
        for (int s = 1; s <= n; ++s)
          r *= beta(partial_sum(p, Seq::beta, 1, s) -
                        partial_sum(p, Seq::alpha, 1, s),
                    p.b(s + 1) - p.a(s + 1));
      }
      break;
  }
  return r;
}

// Precomputed solutions at one parameter point; the holomorphic solutions at
// 1 carry a costly z-independent setup, so repeated evaluations reuse it.
class SolutionSet {
 public:
  explicit SolutionSet(const Parameters& p, HoloBase base = HoloBase::alpha_i,
                       NonholoWeight weight = NonholoWeight::pochhammer)
      : p_(p), base_(base), weight_(weight) {
    p_.check_shape();
  }

  SolutionVector at(Point point, cplx z, const SeriesOptions& opt = {},
                    Branch branch = Branch::pos_z) const {
    SolutionVector v;
    v.point = point;
    v.z = z;
    int n = p_.n;
    for (int i = 1; i <= n + 1; ++i) {
      SeriesValue f;
      switch (point) {
        case Point::zero:
          f = f0(i, p_, z, branch, opt);
          break;
        case Point::inf:
          f = finf(i, p_, z, opt);
          break;
        case Point::one:
          f = i <= n ? holo(i)(z, opt) : f1_nonholo(p_, z, opt, weight_);
          break;
      }
      cplx pre = beta_prefactor(point, i, p_);
      v.series.push_back(f);
      v.prefactor.push_back(pre);
      v.values.push_back(pre * f.value);
    }
    switch (point) {
      case Point::zero:
        v.branch_note = branch == Branch::pos_z ? "z^(1-beta_i), 0<z<1"
                                                : "(-z)^(1-beta_i), z<0";
        break;
      case Point::inf:
        v.branch_note = "(-z)^(-alpha_i)";
        break;
      case Point::one:
        v.branch_note = "(1-z)^(beta_{1,n}-alpha_{1,n+1}) on component n+1";
        break;
    }
    return v;
  }

  const HoloSolution& holo(int i) const {
    if (i < 1 || i > p_.n) throw config_error("index out of range");
    std::call_once(*once_, [this] {
      for (int k = 1; k <= p_.n; ++k) holo_.emplace_back(p_, k, base_);
    });
    return holo_.at(static_cast<std::size_t>(i - 1));
  }

 private:
  Parameters p_;
  HoloBase base_;
  NonholoWeight weight_;
  std::unique_ptr<std::once_flag> once_ = std::make_unique<std::once_flag>();
  mutable std::vector<HoloSolution> holo_;
};

inline SolutionVector solution_vector(Point point, const Parameters& p, cplx z,
                                      const SeriesOptions& opt = {},
                                      Branch branch = Branch::pos_z) {
  return SolutionSet(p).at(point, z, opt, branch);
}

}  // namespace hgc
