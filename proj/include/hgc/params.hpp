#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hgc/special.hpp"

namespace hgc {

// Exponent data of the order n+1 equation. Indices are 1-based in the public
// accessors; beta_{n+1} = 1 is never stored.
struct Parameters {
  int n = 0;
  std::vector<cplx> alpha;  // alpha_1 .. alpha_{n+1}
  std::vector<cplx> beta;   // beta_1 .. beta_n

  cplx a(int i) const {
    if (i < 1 || i > n + 1) throw config_error("index out of range");
    return alpha[i - 1];
  }
  cplx b(int i) const {
    if (i < 1 || i > n + 1) throw config_error("index out of range");
    return i == n + 1 ? cplx(1.0) : beta[i - 1];
  }
  cplx beta_extended(int i) const { return b(i); }

  void check_shape() const {
    if (n < 1) throw config_error("n must be >= 1");
    if (static_cast<int>(alpha.size()) != n + 1)
      throw config_error("alpha: expected " + std::to_string(n + 1) +
                         " entries");
    if (static_cast<int>(beta.size()) != n)
      throw config_error("beta: expected " + std::to_string(n) + " entries");
    for (auto v : alpha)
      if (!is_finite(v)) throw config_error("alpha: non-finite value");
    for (auto v : beta)
      if (!is_finite(v)) throw config_error("beta: non-finite value");
  }

  bool operator==(const Parameters&) const = default;
};

inline Parameters make_params(std::vector<cplx> alpha, std::vector<cplx> beta) {
  Parameters p;
  p.n = static_cast<int>(beta.size());
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  p.check_shape();
  return p;
}

// lambda_i = alpha_{i+1} - beta_i (i <= n), mu_i = beta_i - alpha_i - 1
// (i <= n+1).
struct ExponentSet {
  std::vector<cplx> lambda;  // n entries
  std::vector<cplx> mu;      // n+1 entries
};

inline ExponentSet to_exponents(const Parameters& p) {
  ExponentSet e;
  for (int i = 1; i <= p.n; ++i) e.lambda.push_back(p.a(i + 1) - p.b(i));
  for (int i = 1; i <= p.n + 1; ++i) e.mu.push_back(p.b(i) - p.a(i) - 1.0);
  return e;
}

inline Parameters from_exponents(const ExponentSet& e) {
  int n = static_cast<int>(e.lambda.size());
  if (static_cast<int>(e.mu.size()) != n + 1)
    throw config_error("mu: expected n+1 entries");
  Parameters p;
  p.n = n;
  p.beta.resize(n);
  p.alpha.resize(n + 1);
  // alpha_{n+1} from mu_{n+1} = beta_{n+1} - alpha_{n+1} - 1 with beta_{n+1}=1
  p.alpha[n] = -e.mu[n];
  for (int i = n; i >= 1; --i) {
    p.beta[i - 1] = p.alpha[i] - e.lambda[i - 1];
    p.alpha[i - 1] = p.beta[i - 1] - e.mu[i - 1] - 1.0;
  }
  return p;
}

// x_{i,j} over a 1-based sequence: the sum x_i + ... + x_j for i <= j, 0 for
// i = j+1, and -(x_{j+1} + ... + x_{i-1}) for i >= j+2.
inline cplx partial_sum(const std::vector<cplx>& x, int i, int j) {
  int len = static_cast<int>(x.size());
  cplx s = 0.0;
  if (i <= j) {
    if (i < 1 || j > len) throw config_error("index out of range");
    for (int k = i; k <= j; ++k) s += x[k - 1];
    return s;
  }
  if (i == j + 1) {
    if (j < 0 || j > len) throw config_error("index out of range");
    return s;
  }
  if (j + 1 < 1 || i - 1 > len) throw config_error("index out of range");
  for (int k = j + 1; k <= i - 1; ++k) s -= x[k - 1];
  return s;
}

enum class Seq { alpha, beta, lambda, mu };

// beta is taken with beta_{n+1} = 1 appended.
inline cplx partial_sum(const Parameters& p, Seq seq, int i, int j) {
  switch (seq) {
    case Seq::alpha:
      return partial_sum(p.alpha, i, j);
    case Seq::beta: {
      std::vector<cplx> b = p.beta;
      b.push_back(1.0);
      return partial_sum(b, i, j);
    }
    case Seq::lambda:
      return partial_sum(to_exponents(p).lambda, i, j);
    case Seq::mu:
      return partial_sum(to_exponents(p).mu, i, j);
  }
  return 0.0;
}

// beta_{1,n} - alpha_{1,n+1}, the exponent of the non-holomorphic solution at 1.
inline cplx total_exponent(const Parameters& p) {
  cplx s = 0.0;
  for (auto v : p.beta) s += v;
  for (auto v : p.alpha) s -= v;
  return s;
}

struct Violation {
  std::string kind;  // alpha-beta, beta-beta, alpha-alpha, total
  int i = 0;
  int j = 0;
  cplx value;
  double distance = 0.0;
};

struct GenericityReport {
  bool ok = true;
  std::vector<Violation> violations;
};

inline constexpr double default_eps_generic = 1e-8;

// Reports every difference among alpha_i - beta_j, beta_i - beta_j (i != j),
// alpha_i - alpha_j (i != j) and beta_{1,n} - alpha_{1,n+1} lying within
// eps of an integer. Indices run over 1..n+1 with beta_{n+1} = 1.
inline GenericityReport validate(const Parameters& p,
                                 double eps = default_eps_generic) {
  GenericityReport r;
  auto check = [&](const char* kind, int i, int j, cplx v) {
    double d = dist_to_int(v);
    if (!(d >= eps)) r.violations.push_back({kind, i, j, v, d});
  };
  int m = p.n + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) check("alpha-beta", i, j, p.a(i) - p.b(j));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) check("beta-beta", i, j, p.b(i) - p.b(j));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      check("alpha-alpha", i, j, p.a(i) - p.a(j));
  check("total", 0, 0, total_exponent(p));
  r.ok = r.violations.empty();
  return r;
}

inline Parameters shift(const Parameters& p, const std::vector<int>& dalpha,
                        const std::vector<int>& dbeta) {
  if (static_cast<int>(dalpha.size()) != p.n + 1)
    throw config_error("dalpha: expected n+1 entries");
  if (static_cast<int>(dbeta.size()) != p.n)
    throw config_error("dbeta: expected n entries");
  Parameters q = p;
  for (int i = 0; i <= p.n; ++i) q.alpha[i] += static_cast<double>(dalpha[i]);
  for (int i = 0; i < p.n; ++i) q.beta[i] += static_cast<double>(dbeta[i]);
  return q;
}

}  // namespace hgc
