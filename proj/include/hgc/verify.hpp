#pragma once

// End-to-end checks of the connection formulas as numerical identities, and
// the seeded random suites built on them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hgc/connection.hpp"
#include "hgc/oracle.hpp"
#include "hgc/series.hpp"

namespace hgc {

struct VerificationReport {
  std::string identity;
  int n = 0;
  std::optional<cplx> z;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Rejected formula variants are reported with expect_failure set; they pass
  // when their residual is at least the tolerance.
  bool expect_failure = false;
  std::optional<std::uint64_t> seed;
  std::vector<double> details;
  std::string provenance;
};

// residual = max(details), NaN counting as +inf.
inline VerificationReport& finalize(VerificationReport& r) {
  double m = 0.0;
  for (double d : r.details)
    m = std::isnan(d) ? std::numeric_limits<double>::infinity() : std::max(m, d);
  r.residual = m;
  r.pass = r.expect_failure ? m >= r.tolerance : m <= r.tolerance;
  return r;
}

namespace detail {

inline double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// (row vector v) * C
inline std::vector<cplx> row_times(const std::vector<cplx>& v, const Matrix& C) {
  std::vector<cplx> r(C.cols(), 0.0);
  for (Eigen::Index i = 0; i < C.cols(); ++i)
    for (Eigen::Index j = 0; j < C.rows(); ++j)
      r[i] += v[j] * C(j, i);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- checks --

// F^(1) = F^(0) C^(10) on 0 < z < 1, componentwise relative to
// max(1, |F^(1)_i|).
inline VerificationReport check_connection_01(const SolutionSet& set,
                                              const Parameters& p, double z,
                                              double tol = 1e-8,
                                              const SeriesOptions& opt = {}) {
  VerificationReport r;
  r.identity = "connection01";
  r.n = p.n;
  r.z = z;
  r.tolerance = tol;
  r.provenance = "series at 1 vs series at 0 times c_10";
  auto F1 = set.at(Point::one, z, opt);
  auto F0 = set.at(Point::zero, z, opt, Branch::pos_z);
  auto pred = detail::row_times(F0.values, c_10(p).entries);
  for (int i = 0; i <= p.n; ++i) r.details.push_back(detail::rel(pred[i], F1.values[i]));
  return finalize(r);
}

inline VerificationReport check_connection_01(const Parameters& p, double z,
                                              double tol = 1e-8,
                                              const SeriesOptions& opt = {}) {
  return check_connection_01(SolutionSet(p), p, z, tol, opt);
}

// F^(0) = F^(1) C^(01): the inverse matrix applied to solution vectors.
inline VerificationReport check_corollary(const SolutionSet& set,
                                          const Parameters& p, double z,
                                          double tol = 1e-8,
                                          const SeriesOptions& opt = {}) {
  VerificationReport r;
  r.identity = "corollary";
  r.n = p.n;
  r.z = z;
  r.tolerance = tol;
  r.provenance = "series at 0 vs series at 1 times c_01";
  auto F1 = set.at(Point::one, z, opt);
  auto F0 = set.at(Point::zero, z, opt, Branch::pos_z);
  auto pred = detail::row_times(F1.values, c_01(p).entries);
  for (int i = 0; i <= p.n; ++i) r.details.push_back(detail::rel(pred[i], F0.values[i]));
  return finalize(r);
}

inline VerificationReport check_corollary(const Parameters& p, double z,
                                          double tol = 1e-8,
                                          const SeriesOptions& opt = {}) {
  return check_corollary(SolutionSet(p), p, z, tol, opt);
}

// F_{D^inf} = F_{D^0} C^(inf0) at z < 0 with both sides by quadrature; the
// two series never converge at the same z.
inline VerificationReport check_connection_inf0(const Parameters& p, double z,
                                                std::optional<double> tol = {}) {
  if (p.n > 2) throw config_error("integral route needs n <= 2");
  VerificationReport r;
  r.identity = "connection_inf0";
  r.n = p.n;
  r.z = z;
  r.tolerance = tol ? *tol : (p.n == 1 ? 1e-7 : 1e-5);
  r.provenance = "quadrature over D^inf vs quadrature over D^0 times c_inf0";
  QuadratureOptions q;
  q.tol = p.n == 1 ? 1e-10 : 1e-8;
  std::vector<cplx> Finf, F0;
  for (int i = 1; i <= p.n + 1; ++i) {
    Finf.push_back(integrate_loaded_domain({Family::Dinf, i, p.n, z}, p, q).value);
    F0.push_back(integrate_loaded_domain({Family::D0, i, p.n, z}, p, q).value);
  }
  auto pred = detail::row_times(F0, c_inf0(p).entries);
  for (int i = 0; i <= p.n; ++i) r.details.push_back(detail::rel(pred[i], Finf[i]));
  return finalize(r);
}

// n = 1: the matrix against the Gamma-form Gauss relations, entrywise
// relative to max(1, |entry|).
inline VerificationReport check_gauss(const Parameters& p, MatrixKind kind,
                                      double tol = 1e-10) {
  VerificationReport r;
  r.identity = std::string("gauss_") + to_string(kind);
  r.n = p.n;
  r.tolerance = tol;
  r.provenance = std::string("c_") + to_string(kind) + " vs Gamma-form Gauss relations";
  Matrix C = build_matrix(kind, p).entries;
  Matrix G = gauss_reference(p, kind).entries;
  for (Eigen::Index i = 0; i < C.rows(); ++i)
    for (Eigen::Index j = 0; j < C.cols(); ++j)
      r.details.push_back(detail::rel(C(i, j), G(i, j)));
  return finalize(r);
}

// max(|C01 C10 - I|, |C10 C01 - I|).
inline VerificationReport check_inverse(const Parameters& p, double tol = 1e-10) {
  VerificationReport r;
  r.identity = "inverse";
  r.n = p.n;
  r.tolerance = tol;
  r.provenance = "c_01 closed form times c_10";
  // Entries near 1/s(1e-4) cancel in the product; double storage alone
  // leaves ~1e-10 of rounding there, so the check runs in long double.
  using M = detail::MatrixT<long double>;
  p.check_shape();
  M A = detail::c01_entries<long double>(p, default_eps_generic);
  M B = detail::c10_entries<long double>(p, default_eps_generic);
  M Id = M::Identity(p.n + 1, p.n + 1);
  auto norm = [](const M& m) { return static_cast<double>(m.cwiseAbs().maxCoeff()); };
  r.details = {norm(A * B - Id), norm(B * A - Id)};
  return finalize(r);
}

// Integral over a domain family against Beta prefactor times series.
enum class IntegralIdentity {
  inf,            // D^inf at z < -1
  zero_neg,       // D^0 at -1 < z < 0
  zero,           // D~^0 at 0 < z < 1
  one_holo,       // D~^1_i, i <= n
  one_nonholo,    // D~^1_{n+1}
};

inline const char* to_string(IntegralIdentity id) {
  switch (id) {
    case IntegralIdentity::inf: return "integral_inf";
    case IntegralIdentity::zero_neg: return "integral_zero_neg";
    case IntegralIdentity::zero: return "integral_zero";
    case IntegralIdentity::one_holo: return "integral_one_holo";
    case IntegralIdentity::one_nonholo: return "integral_one_nonholo";
  }
  return "?";
}

struct IntegralVariant {
  HoloBase base = HoloBase::alpha_i;
  NonholoWeight weight = NonholoWeight::pochhammer;
};

inline VerificationReport check_integral(IntegralIdentity id, const Parameters& p,
                                         double z, IntegralVariant variant = {},
                                         double tol = 1e-6,
                                         const SeriesOptions& opt = {}) {
  VerificationReport r;
  r.identity = to_string(id);
  r.n = p.n;
  r.z = z;
  r.tolerance = tol;
  Family fam = Family::D0tilde;
  Point pt = Point::zero;
  Branch br = Branch::pos_z;
  std::vector<int> idx;
  for (int i = 1; i <= p.n + 1; ++i) idx.push_back(i);
  switch (id) {
    case IntegralIdentity::inf: fam = Family::Dinf; pt = Point::inf; break;
    case IntegralIdentity::zero_neg: fam = Family::D0; br = Branch::neg_z; break;
    case IntegralIdentity::zero: break;
    case IntegralIdentity::one_holo:
      fam = Family::D1tilde;
      pt = Point::one;
      idx.pop_back();
      break;
    case IntegralIdentity::one_nonholo:
      fam = Family::D1tilde;
      pt = Point::one;
      idx = {p.n + 1};
      break;
  }
  if (variant.base == HoloBase::alpha_1) {
    r.identity += "_alpha1_base";
    r.expect_failure = true;
    std::erase(idx, 1);  // the two bases coincide for i = 1
  }
  if (variant.weight == NonholoWeight::printed) {
    r.identity += "_plain_weight";
    r.expect_failure = true;
  }
  if (r.expect_failure) r.tolerance = 1e-2;
  r.provenance = std::string("quadrature over ") + to_string(fam) +
                 " vs Beta prefactor times series at " + to_string(pt);
  SolutionSet set(p, variant.base, variant.weight);
  auto sv = set.at(pt, z, opt, br);
  QuadratureOptions q;
  q.tol = p.n == 1 ? 1e-10 : 1e-8;
  for (int i : idx) {
    cplx quad = integrate_loaded_domain({fam, i, p.n, z}, p, q).value;
    r.details.push_back(detail::rel(sv.values[i - 1], quad));
  }
  return finalize(r);
}

inline VerificationReport check_residues(ResidueCase rc, const Parameters& p,
                                         double tol = 1e-11) {
  VerificationReport r;
  r.identity = std::string("residues_") + to_string(rc);
  r.n = p.n;
  r.tolerance = tol;
  r.provenance = "residue sum of the rational function vs sine form and expected value";
  r.details.push_back(residue_sum_check(rc, p).residual);
  return finalize(r);
}

// hat C under integer shifts, relative to max(1, |hat C|).
inline VerificationReport check_periodicity(MatrixKind kind, const Parameters& p,
                                            const std::vector<int>& dalpha,
                                            const std::vector<int>& dbeta,
                                            double tol = 1e-10) {
  VerificationReport r;
  r.identity = std::string("periodicity_") + to_string(kind);
  r.n = p.n;
  r.tolerance = tol;
  r.provenance = "c_hat at shifted vs original parameters";
  double scale = std::max(1.0, max_abs(c_hat(kind, p).entries));
  r.details.push_back(periodicity_residual(kind, p, dalpha, dbeta) / scale);
  return finalize(r);
}

// ----------------------------------------------------------------- draws --

// Uniform double in [0,1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-draw seed from the run seed, a tag and coordinates; every draw can be
// replayed on its own.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, int n,
                                 int k) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  h = splitmix64(seed ^ h);
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  return splitmix64(h ^ static_cast<std::uint64_t>(k));
}

enum class DrawKind {
  generic,     // genericity only
  theorem01,   // plus the Re-conditions of the 0/1 connection formulas
  quadrature,  // plus every domain integrable with slack, |Im| <= 0.3
  residue,     // genericity, |Im| <= 0.3
};

inline bool theorem01_conditions(const Parameters& p, double margin = 0.0) {
  for (int i = 1; i <= p.n + 1; ++i)
    for (int j = 1; j <= p.n + 1; ++j) {
      if (i != j && (p.a(i) - p.b(j) + 1.0).real() <= margin) return false;
      if ((p.b(j) - p.a(j)).real() <= margin) return false;
    }
  return true;
}

inline bool integrable_everywhere(const Parameters& p, double margin) {
  try {
    for (int i = 1; i <= p.n + 1; ++i)
      for (auto [f, z] : {std::pair{Family::D0, -0.5}, {Family::Dinf, -0.5},
                          {Family::D0tilde, 0.5}, {Family::D1tilde, 0.5}})
        detail::check_integrable(detail::domain_chains({f, i, p.n, z}),
                                 detail::integrand_factors(p, z), margin);
  } catch (const Error&) {
    return false;
  }
  return true;
}

inline Parameters draw_parameters(std::uint64_t seed, int n, DrawKind kind,
                                  double eps_generic = 1e-4) {
  std::mt19937_64 g(seed);
  double im = kind == DrawKind::quadrature || kind == DrawKind::residue ? 0.3 : 0.5;
  auto u = [&](double a, double b) { return a + (b - a) * unit_uniform(g); };
  for (long tries = 0; tries < 10000000; ++tries) {
    Parameters p;
    p.n = n;
    for (int i = 0; i <= n; ++i) p.alpha.emplace_back(u(-2, 2), u(-im, im));
    for (int i = 0; i < n; ++i) p.beta.emplace_back(u(-2, 2), u(-im, im));
    if (kind == DrawKind::theorem01 && !theorem01_conditions(p)) continue;
    if (kind == DrawKind::quadrature &&
        !(theorem01_conditions(p, 0.2) && integrable_everywhere(p, 0.2)))
      continue;
    if (validate(p, eps_generic).ok) return p;
  }
  throw numerical_error("parameter draw: rejection budget exhausted");
}

// ---------------------------------------------------------------- suites --

enum class Suite {
  inverse,
  connection01,
  corollary,
  inf0,
  residues,
  periodicity,
  propositions,
  gauss,
};

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s = {Suite::inverse,     Suite::connection01,
                                       Suite::corollary,   Suite::inf0,
                                       Suite::residues,    Suite::periodicity,
                                       Suite::propositions, Suite::gauss};
  return s;
}

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::inverse: return "inverse";
    case Suite::connection01: return "connection01";
    case Suite::corollary: return "corollary";
    case Suite::inf0: return "inf0";
    case Suite::residues: return "residues";
    case Suite::periodicity: return "periodicity";
    case Suite::propositions: return "propositions";
    case Suite::gauss: return "gauss";
  }
  return "?";
}

inline Suite suite_from_string(const std::string& s) {
  for (Suite x : all_suites())
    if (s == to_string(x)) return x;
  throw config_error("unknown suite '" + s + "'");
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  int draws = 0;                // 0: the suite's default count
  std::vector<int> n_values;    // empty: the suite's default range
  SeriesOptions series;
  std::vector<Parameters> corpus;  // extra fixed parameter sets
};

using ReportSink = std::function<void(const VerificationReport&)>;

namespace detail {

inline std::vector<int> ns(const SuiteConfig& c, std::vector<int> dflt) {
  return c.n_values.empty() ? dflt : c.n_values;
}

inline int count(const SuiteConfig& c, int dflt) {
  return c.draws > 0 ? c.draws : dflt;
}

inline VerificationReport error_report(const std::string& identity, int n,
                                       std::uint64_t seed, const Error& e) {
  VerificationReport r;
  r.identity = identity;
  r.n = n;
  r.seed = seed;
  r.tolerance = 0.0;
  r.details = {std::numeric_limits<double>::infinity()};
  r.provenance = std::string("error: ") + e.what();
  return finalize(r);
}

// Runs fn, turning numerical refusals into failing reports so one bad draw
// does not hide the others.
template <class Fn>
void guarded(const ReportSink& out, const std::string& identity, int n,
             std::uint64_t seed, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::config) throw;
    out(error_report(identity, n, seed, e));
  }
}

inline void emit(const ReportSink& out, VerificationReport r,
                 std::optional<std::uint64_t> seed) {
  r.seed = seed;
  out(r);
}

}  // namespace detail

inline const std::vector<double>& z_grid_01() {
  static const std::vector<double> g = {0.3, 0.5, 0.7};
  return g;
}

inline void run_suite(Suite suite, const SuiteConfig& cfg, const ReportSink& out) {
  using detail::emit;
  using detail::guarded;
  const char* tag = to_string(suite);
  switch (suite) {
    case Suite::inverse:
      for (int n : detail::ns(cfg, {1, 2, 3, 4, 5}))
        for (int k = 0; k < detail::count(cfg, 100); ++k) {
          auto s = derive_seed(cfg.seed, tag, n, k);
          guarded(out, "inverse", n, s, [&] {
            emit(out, check_inverse(draw_parameters(s, n, DrawKind::generic)), s);
          });
        }
      break;
    case Suite::connection01:
    case Suite::corollary: {
      bool corollary = suite == Suite::corollary;
      // Both suites draw from the same stream so they see the same parameters.
      for (int n : detail::ns(cfg, {1, 2, 3}))
        for (int k = 0; k < detail::count(cfg, 20); ++k) {
          auto s = derive_seed(cfg.seed, "connection01", n, k);
          guarded(out, tag, n, s, [&] {
            Parameters p = draw_parameters(s, n, DrawKind::theorem01);
            SolutionSet set(p);
            for (double z : z_grid_01())
              emit(out,
                   corollary ? check_corollary(set, p, z, 1e-8, cfg.series)
                             : check_connection_01(set, p, z, 1e-8, cfg.series),
                   s);
          });
        }
      for (const auto& p : cfg.corpus) {
        if (!theorem01_conditions(p)) continue;
        guarded(out, tag, p.n, 0, [&] {
          SolutionSet set(p);
          for (double z : z_grid_01())
            emit(out,
                 corollary ? check_corollary(set, p, z, 1e-8, cfg.series)
                           : check_connection_01(set, p, z, 1e-8, cfg.series),
                 std::nullopt);
        });
      }
      break;
    }
    case Suite::inf0:
      for (int n : detail::ns(cfg, {1, 2}))
        for (int k = 0; k < detail::count(cfg, 3); ++k) {
          auto s = derive_seed(cfg.seed, tag, n, k);
          guarded(out, "connection_inf0", n, s, [&] {
            emit(out, check_connection_inf0(draw_parameters(s, n, DrawKind::quadrature), -0.5), s);
          });
        }
      for (const auto& p : cfg.corpus)
        if (p.n <= 2 && integrable_everywhere(p, 0.05))
          guarded(out, "connection_inf0", p.n, 0, [&] {
            emit(out, check_connection_inf0(p, -0.5), std::nullopt);
          });
      break;
    case Suite::residues:
      for (ResidueCase rc : {ResidueCase::i_offdiag, ResidueCase::i_diag,
                             ResidueCase::ii, ResidueCase::iii, ResidueCase::iv})
        for (int n : detail::ns(cfg, {1, 2, 3})) {
          if (rc == ResidueCase::i_offdiag && n == 1) continue;
          for (int k = 0; k < detail::count(cfg, 200); ++k) {
            auto s = derive_seed(cfg.seed, to_string(rc), n, k);
            guarded(out, std::string("residues_") + to_string(rc), n, s, [&] {
              emit(out, check_residues(rc, draw_parameters(s, n, DrawKind::residue)), s);
            });
          }
        }
      break;
    case Suite::periodicity:
      for (MatrixKind kind : {MatrixKind::hat_one0, MatrixKind::hat_inf0})
        for (int n : detail::ns(cfg, {1, 2, 3}))
          for (int k = 0; k < detail::count(cfg, 50); ++k) {
            auto s = derive_seed(cfg.seed, to_string(kind), n, k);
            guarded(out, std::string("periodicity_") + to_string(kind), n, s, [&] {
              Parameters p = draw_parameters(s, n, DrawKind::generic);
              std::mt19937_64 g(splitmix64(s));
              auto shift_entry = [&] {
                return static_cast<int>(std::floor(5.0 * unit_uniform(g))) - 2;
              };
              std::vector<int> da(n + 1), db(n);
              for (auto& x : da) x = shift_entry();
              for (auto& x : db) x = shift_entry();
              emit(out, check_periodicity(kind, p, da, db), s);
            });
          }
      break;
    case Suite::propositions: {
      auto run = [&](const Parameters& p, std::optional<std::uint64_t> s) {
        guarded(out, "propositions", p.n, s.value_or(0), [&] {
          const SeriesOptions& o = cfg.series;
          emit(out, check_integral(IntegralIdentity::inf, p, -2.0, {}, 1e-6, o), s);
          emit(out, check_integral(IntegralIdentity::zero_neg, p, -0.5, {}, 1e-6, o), s);
          for (double z : z_grid_01()) {
            emit(out, check_integral(IntegralIdentity::zero, p, z, {}, 1e-6, o), s);
            emit(out, check_integral(IntegralIdentity::one_holo, p, z, {}, 1e-6, o), s);
            emit(out, check_integral(IntegralIdentity::one_nonholo, p, z, {}, 1e-6, o), s);
            emit(out, check_integral(IntegralIdentity::one_nonholo, p, z,
                                     {HoloBase::alpha_i, NonholoWeight::printed}, 1e-6, o),
                 s);
            if (p.n >= 2)
              emit(out, check_integral(IntegralIdentity::one_holo, p, z,
                                       {HoloBase::alpha_1, NonholoWeight::pochhammer},
                                       1e-6, o),
                   s);
          }
        });
      };
      for (int n : detail::ns(cfg, {1, 2}))
        for (int k = 0; k < detail::count(cfg, 2); ++k) {
          auto s = derive_seed(cfg.seed, tag, n, k);
          run(draw_parameters(s, n, DrawKind::quadrature), s);
        }
      for (const auto& p : cfg.corpus)
        if (p.n <= 2 && theorem01_conditions(p) && integrable_everywhere(p, 0.05))
          run(p, std::nullopt);
      break;
    }
    case Suite::gauss:
      for (int k = 0; k < detail::count(cfg, 100); ++k) {
        auto s = derive_seed(cfg.seed, tag, 1, k);
        guarded(out, "gauss", 1, s, [&] {
          Parameters p = draw_parameters(s, 1, DrawKind::generic);
          emit(out, check_gauss(p, MatrixKind::one0), s);
          emit(out, check_gauss(p, MatrixKind::inf0), s);
        });
      }
      break;
  }
}

inline std::vector<VerificationReport> run_suite(Suite suite, const SuiteConfig& cfg) {
  std::vector<VerificationReport> v;
  run_suite(suite, cfg, [&](const VerificationReport& r) { v.push_back(r); });
  return v;
}

}  // namespace hgc
