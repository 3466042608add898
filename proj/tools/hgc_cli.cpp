// hgc: evaluate solutions, emit connection matrices, run verification suites,
// compare quadrature against series, and time the series kernel.
//
// Exit status: 0 ok, 1 failed verification, 2 bad configuration,
// 3 numerical refusal. Errors go to stderr as one JSON object.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgc/json_io.hpp"
#include "hgc/oracle.hpp"

namespace {

using namespace hgc;

struct Options {
  std::string params_file;
  std::optional<int> n;
  std::vector<std::string> alpha, beta;
  std::string z = "0.5";
  double tol = 1e-12;
  long max_terms = 100000;
  std::uint64_t seed = 1;
  std::string output = "human";
  std::string kind = "one0";
  std::string point = "0";
  std::string branch;
  std::string suite = "all";
  std::string family;
  std::string input;
  int draws = 0;
  bool max_terms_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<cplx> parse_list(const std::vector<std::string>& items) {
  std::vector<cplx> v;
  for (const auto& s : items) v.push_back(parse_complex(s));
  return v;
}

std::optional<Parameters> maybe_params(const Options& o) {
  if (!o.params_file.empty()) {
    if (!o.alpha.empty() || !o.beta.empty())
      throw config_error("--params and --alpha/--beta are exclusive");
    return parse_params(read_file(o.params_file));
  }
  if (o.alpha.empty() && o.beta.empty()) return std::nullopt;
  Parameters p;
  p.n = o.n.value_or(static_cast<int>(o.beta.size()));
  p.alpha = parse_list(o.alpha);
  p.beta = parse_list(o.beta);
  p.check_shape();
  return p;
}

Parameters require_params(const Options& o) {
  auto p = maybe_params(o);
  if (!p) throw config_error("parameters required: --params FILE or --alpha/--beta");
  return *p;
}

SeriesOptions series_options(const Options& o) {
  if (!(o.tol > 0.0)) throw config_error("--tol must be > 0");
  if (o.max_terms < 1) throw config_error("--max-terms must be >= 1");
  SeriesOptions s;
  s.tol = o.tol;
  s.max_terms = o.max_terms;
  s.boundary_override = o.max_terms_given;
  return s;
}

bool json_out(const Options& o) { return o.output == "json"; }

std::string fmt(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.16g%+.16gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

Point parse_point(const std::string& s) {
  if (s == "0" || s == "zero") return Point::zero;
  if (s == "1" || s == "one") return Point::one;
  if (s == "inf" || s == "infinity") return Point::inf;
  throw config_error("--point must be 0, 1 or inf");
}

int cmd_eval(const Options& o) {
  Parameters p = require_params(o);
  cplx z = parse_complex(o.z);
  Point pt = parse_point(o.point);
  Branch br = z.real() < 0.0 ? Branch::neg_z : Branch::pos_z;
  if (o.branch == "pos_z") br = Branch::pos_z;
  else if (o.branch == "neg_z") br = Branch::neg_z;
  else if (!o.branch.empty()) throw config_error("--branch must be pos_z or neg_z");
  auto v = solution_vector(pt, p, z, series_options(o), br);
  if (json_out(o)) {
    std::cout << to_json(v).dump() << "\n";
    return 0;
  }
  std::printf("point %s  z = %s  (%s)\n", to_string(pt), fmt(z).c_str(), v.branch_note.c_str());
  for (std::size_t k = 0; k < v.values.size(); ++k)
    std::printf("  F_%zu = %-44s terms %ld  tail %.2e\n", k + 1, fmt(v.values[k]).c_str(),
                v.series[k].terms_used, v.series[k].tail_estimate);
  return 0;
}

int cmd_matrix(const Options& o) {
  ConnectionMatrix m;
  if (!o.input.empty()) {
    json j = json::parse(read_file(o.input), nullptr, false);
    if (j.is_discarded()) throw config_error(o.input + ": invalid JSON");
    m = matrix_from_json(j);
  } else {
    m = build_matrix(matrix_kind_from_string(o.kind), require_params(o));
  }
  if (json_out(o)) {
    std::cout << to_json(m).dump() << "\n";
    return 0;
  }
  std::printf("%s  n = %d\n%s\n", to_string(m.kind), m.n, m.convention.c_str());
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k)
      std::printf("  %-44s", fmt(m.entries(i, k)).c_str());
    std::printf("\n");
  }
  return 0;
}

void print_report(const VerificationReport& r, bool as_json) {
  if (as_json) {
    std::cout << to_json(r).dump() << "\n";
    return;
  }
  char z[32] = "-";
  if (r.z) std::snprintf(z, sizeof z, "%g", r.z->real());
  std::string seed = r.seed ? std::to_string(*r.seed) : "-";
  std::printf("%s  %-36s n=%d  z=%-5s residual=%-10.3e tol=%-8.1e seed=%s\n",
              r.pass ? "PASS" : "FAIL", r.identity.c_str(), r.n, z, r.residual,
              r.tolerance, seed.c_str());
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.draws = o.draws;
  cfg.series = series_options(o);
  if (auto p = maybe_params(o)) cfg.corpus.push_back(*p);
  else if (o.n) cfg.n_values = {*o.n};
  if (o.draws < 0) throw config_error("--draws must be >= 0");
  std::vector<Suite> suites =
      o.suite == "all" ? all_suites() : std::vector<Suite>{suite_from_string(o.suite)};
  bool as_json = json_out(o);
  long total = 0, failed = 0;
  for (Suite s : suites)
    run_suite(s, cfg, [&](const VerificationReport& r) {
      ++total;
      failed += r.pass ? 0 : 1;
      print_report(r, as_json);
      std::cout.flush();
    });
  if (!as_json) std::printf("%ld checks, %ld failed\n", total, failed);
  return failed == 0 ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  Parameters p = require_params(o);
  cplx zc = parse_complex(o.z);
  if (zc.imag() != 0.0) throw config_error("oracle needs a real z");
  double z = zc.real();
  std::vector<Family> fams;
  if (!o.family.empty()) {
    fams = {family_from_string(o.family)};
  } else if (z < 0.0) {
    if (z > -1.0) fams.push_back(Family::D0);
    if (z < -1.0) fams.push_back(Family::Dinf);
  } else {
    fams = {Family::D0tilde, Family::D1tilde};
  }
  SeriesOptions so = series_options(o);
  SolutionSet set(p);
  bool as_json = json_out(o);
  for (Family f : fams) {
    Point pt = f == Family::Dinf ? Point::inf : f == Family::D1tilde ? Point::one : Point::zero;
    Branch br = f == Family::D0 ? Branch::neg_z : Branch::pos_z;
    auto sv = set.at(pt, z, so, br);
    for (int i = 1; i <= p.n + 1; ++i) {
      auto q = integrate_loaded_domain({f, i, p.n, z}, p);
      cplx s = sv.values[static_cast<std::size_t>(i - 1)];
      double res = std::abs(q.value - s) / std::max(1.0, std::abs(s));
      if (as_json) {
        json j = {{"family", to_string(f)}, {"index", i},          {"z", z},
                  {"quadrature", to_json(q.value)}, {"quadrature_error", q.error},
                  {"series", to_json(s)},    {"residual", res}};
        std::cout << j.dump() << "\n";
      } else {
        std::printf("%-8s i=%d  quad %-44s series %-44s rel %.2e\n", to_string(f), i,
                    fmt(q.value).c_str(), fmt(s).c_str(), res);
      }
    }
  }
  return 0;
}

int cmd_bench(const Options& o) {
  bool as_json = json_out(o);
  if (!as_json) std::printf("%3s %8s %8s %12s %12s\n", "n", "tol", "terms", "us/call", "tail");
  for (int n = 1; n <= 6; ++n) {
    Parameters p = draw_parameters(derive_seed(o.seed, "bench", n, 0), n, DrawKind::generic);
    for (double tol : {1e-6, 1e-10, 1e-14}) {
      SeriesValue v;
      long reps = 0;
      auto t0 = std::chrono::steady_clock::now();
      double us = 0.0;
      do {
        v = eval_ghs(p.alpha, p.beta, 0.5, tol, o.max_terms);
        ++reps;
        us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
      } while (us < 20000.0);
      us /= static_cast<double>(reps);
      if (as_json)
        std::cout << json{{"n", n}, {"tol", tol}, {"terms_used", v.terms_used},
                          {"tail_estimate", v.tail_estimate}, {"us_per_call", us}}
                         .dump()
                  << "\n";
      else
        std::printf("%3d %8.0e %8ld %12.3f %12.2e\n", n, tol, v.terms_used, us, v.tail_estimate);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized hypergeometric solutions and their connection matrices"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--params", o.params_file, "parameter JSON file");
    c->add_option("--n", o.n, "n (inline parameters; for verify: the n to draw)");
    c->add_option("--alpha", o.alpha, "alpha_1..alpha_{n+1}, \"re\" or \"re+imi\"")->delimiter(',');
    c->add_option("--beta", o.beta, "beta_1..beta_n")->delimiter(',');
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "series tolerance")->capture_default_str();
    c->add_option("--max-terms", o.max_terms,
                  "series term budget; giving it also allows arguments near the disk boundary")
        ->capture_default_str();
    c->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "solution vector at a singular point");
  add_params(eval);
  add_common(eval);
  eval->add_option("--z", o.z, "argument, \"re\" or \"re+imi\"")->capture_default_str();
  eval->add_option("--point", o.point, "0, 1 or inf")->capture_default_str();
  eval->add_option("--branch", o.branch, "pos_z or neg_z (default from the sign of Re z)");

  auto* matrix = app.add_subcommand("matrix", "connection matrix");
  add_params(matrix);
  add_common(matrix);
  matrix->add_option("--kind", o.kind, "inf0, one0, zero1, one_inf, hat_one0, hat_inf0")
      ->capture_default_str();
  matrix->add_option("--input", o.input, "re-emit a matrix JSON document instead");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_params(verify);
  add_common(verify);
  verify->add_option("--suite", o.suite,
                     "inverse, connection01, corollary, inf0, residues, periodicity, "
                     "propositions, gauss or all")
      ->capture_default_str();
  verify->add_option("--draws", o.draws, "draws per n (0: suite default)");
  verify->add_option("--seed", o.seed, "base seed")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "quadrature against series");
  add_params(oracle);
  add_common(oracle);
  oracle->add_option("--z", o.z, "real argument")->capture_default_str();
  oracle->add_option("--family", o.family, "D0, Dinf, D0tilde or D1tilde (default: by z)");

  auto* bench = app.add_subcommand("bench", "series kernel timing");
  add_common(bench);
  bench->add_option("--seed", o.seed, "seed for the parameter draws")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("config", e.what()) << "\n";
    return 2;
  }

  for (auto* c : {eval, matrix, verify, oracle, bench})
    if (c->count("--max-terms") > 0) o.max_terms_given = true;

  try {
    if (*eval) return cmd_eval(o);
    if (*matrix) return cmd_matrix(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*bench) return cmd_bench(o);
  } catch (const Error& e) {
    bool config = e.kind() == ErrorKind::config;
    std::cerr << error_json(config ? "config" : "numerical", e.what()) << "\n";
    return config ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << error_json("numerical", e.what()) << "\n";
    return 3;
  }
  return 2;
}
