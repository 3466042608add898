#include <gtest/gtest.h>

#include "hgc/oracle.hpp"
#include "hgc/verify.hpp"

using namespace hgc;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Parameters corpus_n1() { return make_params({{0.31, 0.05}, {0.62, -0.03}}, {{1.27, 0.04}}); }

Parameters corpus_n2() {
  return make_params({{0.31, 0.05}, {0.42, -0.03}, {0.53, 0.02}}, {{1.17, 0.04}, {0.89, -0.02}});
}

cplx quad(Family f, int i, const Parameters& p, double z, double tol = 0.0) {
  QuadratureOptions o;
  o.tol = tol;
  return integrate_loaded_domain({f, i, p.n, z}, p, o).value;
}

}  // namespace

// One-dimensional integrals of |t|^l |1-t|^m1 |t-z|^m2, reduced to Euler
// integrals by a Moebius substitution and evaluated with mpmath at 30 digits.
TEST(Quadrature, OneDimensionalReference) {
  Parameters p = corpus_n1();
  struct Case {
    Family f;
    int i;
    double z;
    cplx want;
  };
  const Case cases[] = {
      {Family::D0tilde, 1, 0.5, {5.6350862226478026961, 0.60861885612841019583}},
      {Family::D0tilde, 2, 0.5, {3.5339612864592863282, -0.51850696739943133229}},
      {Family::D1tilde, 1, 0.5, {6.3529744327657072455, 0.25091841735150230652}},
      {Family::D1tilde, 2, 0.5, {2.8894895596975207954, -0.17407020401354007322}},
      {Family::D0, 1, -0.5, {5.5173075511775575501, 0.58392452038868062207}},
      {Family::D0, 2, -0.5, {2.9971365675513643339, -0.47914986694275534585}},
      {Family::Dinf, 1, -2.0, {4.0109876770668330979, -0.75731353242710787401}},
      {Family::Dinf, 2, -2.0, {1.6864525155524220654, 0.40041544019825359626}},
  };
  for (const auto& c : cases)
    EXPECT_LT(rel(quad(c.f, c.i, p, c.z, 1e-10), c.want), 1e-9) << to_string(c.f) << c.i;
}

TEST(Quadrature, PlainSeriesRepresentation) {
  Parameters p = make_params({0.3, 0.7}, {1.4});
  cplx want = beta(0.3, 1.1) * eval_ghs({0.3, 0.7}, {1.4}, 0.5).value;
  EXPECT_LT(rel(quad(Family::D0tilde, 2, p, 0.5), want), 1e-8);
  cplx want1 = beta(1.4 - 0.3, 1.0 - 0.7) * f1_nonholo(p, 0.5).value;
  EXPECT_LT(rel(quad(Family::D1tilde, 2, p, 0.5), want1), 1e-8);
}

// n = 2 against the 30-digit F^(0) C^(10) values of the corpus set
TEST(Quadrature, TwoDimensionalReference) {
  Parameters p = corpus_n2();
  EXPECT_LT(rel(quad(Family::D0tilde, 1, p, 0.5), {23.357752974336675975, 6.9226069983460977049}), 1e-6);
  EXPECT_LT(rel(quad(Family::D1tilde, 1, p, 0.5), {24.332840295678792229, -4.0730389923862554578}), 1e-6);
  EXPECT_LT(rel(quad(Family::D1tilde, 3, p, 0.5), {3.6414289078694978286, 0.19742697438479344513}), 1e-6);
}

TEST(Quadrature, HoloBaseDiscrimination) {
  Parameters p = corpus_n2();
  cplx q = quad(Family::D1tilde, 1, p, 0.7);
  cplx pre = beta(p.a(1) - p.b(2) + 1.0, p.b(2) - p.a(2)) * beta(p.a(1), p.a(3) - p.b(1) + 1.0);
  EXPECT_LT(rel(pre * f1_holo(1, p, 0.7).value, q), 1e-6);
  // i = 2 is where the two candidate bases differ
  cplx q2 = quad(Family::D1tilde, 2, p, 0.7);
  cplx pre2 = beta_prefactor(Point::one, 2, p);
  EXPECT_LT(rel(pre2 * f1_holo(2, p, 0.7).value, q2), 1e-6);
  EXPECT_GT(rel(pre2 * f1_holo(2, p, 0.7, {}, HoloBase::alpha_1).value, q2), 1e-2);
}

TEST(Quadrature, SelfConsistency) {
  Parameters p = corpus_n1();
  QuadratureOptions o;
  o.tol = 1e-8;
  auto r = integrate_loaded_domain({Family::D1tilde, 1, 1, 0.3}, p, o);
  EXPECT_LT(r.error, 1e-8 * std::max(1.0, std::abs(r.value)));
  o.tol = 1e-12;
  auto fine = integrate_loaded_domain({Family::D1tilde, 1, 1, 0.3}, p, o);
  EXPECT_LT(std::abs(fine.value - r.value), 1e-8 * std::max(1.0, std::abs(r.value)));
}

TEST(Quadrature, Refusals) {
  Parameters p = corpus_n1();
  EXPECT_THROW(quad(Family::D0tilde, 1, p, -0.5), Error);
  EXPECT_THROW(quad(Family::D0, 1, p, 0.5), Error);
  EXPECT_THROW(quad(Family::D0, 3, p, -0.5), Error);
  Parameters n3 = make_params({0.1, 0.2, 0.3, 0.4}, {1.1, 1.2, 1.3});
  EXPECT_THROW(quad(Family::D0tilde, 1, n3, 0.5), Error);
  // lambda_1 = alpha_2 - beta_1 = -1.2: not integrable at t = 0
  Parameters bad = make_params({0.3, 0.1}, {1.3});
  try {
    quad(Family::D0tilde, 1, bad, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::numerical);
    EXPECT_EQ(std::string(e.what()).rfind("non-integrable exponent", 0), 0u);
  }
}

TEST(BranchFixing, SignsMatchDomains) {
  auto b = branch_fixing({Family::D0, 2, 2, -0.5});  // z < t2 < 0, 1 < t1
  EXPECT_EQ(b.epsilon, (std::vector<int>{1, -1}));
  EXPECT_EQ(b.eta, (std::vector<int>{-1, 1, 1}));
  auto c = branch_fixing({Family::D1tilde, 3, 2, 0.5});  // z < t2 < t1 < 1
  EXPECT_EQ(c.epsilon, (std::vector<int>{1, 1}));
  EXPECT_EQ(c.eta, (std::vector<int>{1, 1, 1}));
  auto d = branch_fixing({Family::Dinf, 1, 1, -2.0});  // t1 < z
  EXPECT_EQ(d.epsilon, (std::vector<int>{-1}));
  EXPECT_EQ(d.eta, (std::vector<int>{1, -1}));
}

TEST(Residues, AllCasesOnDraws) {
  for (ResidueCase rc : {ResidueCase::i_offdiag, ResidueCase::i_diag, ResidueCase::ii,
                         ResidueCase::iii, ResidueCase::iv})
    for (int n = 1; n <= 3; ++n) {
      if (rc == ResidueCase::i_offdiag && n == 1) continue;
      for (int k = 0; k < 40; ++k) {
        Parameters p = draw_parameters(derive_seed(5, "res", n, k), n, DrawKind::residue);
        EXPECT_LT(residue_sum_check(rc, p).residual, 1e-11) << to_string(rc) << " n=" << n;
      }
    }
}

TEST(Residues, ExpectedValues) {
  Parameters p = corpus_n2();
  auto iv = residue_sum_check(ResidueCase::iv, p);
  EXPECT_LT(std::abs(iv.expected + sin_pi(total_exponent(p))), 1e-15);
  auto ii = residue_sum_check(ResidueCase::ii, p, 2, 3);
  EXPECT_EQ(ii.expected, cplx(0.0));
  EXPECT_LT(ii.residual, 1e-11);
  for (int i = 1; i <= 2; ++i) {
    auto d = residue_sum_check(ResidueCase::i_diag, p, i, i);
    cplx want = -sin_pi(total_exponent(p)) / (sin_pi(p.b(i) - p.a(i)) * sin_pi(p.a(i)));
    for (int l = 1; l <= 2; ++l)  // l <= n only
      if (l != i) want *= sin_pi(p.a(i) - p.a(l)) / sin_pi(p.a(i) - p.b(l));
    EXPECT_LT(std::abs(d.expected - want), 1e-14 * std::max(1.0, std::abs(want)));
    EXPECT_LT(std::abs(d.sine_form - want), 1e-11 * std::max(1.0, std::abs(want)));
    EXPECT_LT(d.residual, 1e-11);
  }
  EXPECT_THROW(residue_sum_check(ResidueCase::i_offdiag, p, 1, 1), Error);
}

TEST(Gauss, AgreesWithConnectionMatrices) {
  for (int k = 0; k < 100; ++k) {
    Parameters p = draw_parameters(derive_seed(17, "gauss-test", 1, k), 1, DrawKind::generic);
    EXPECT_LT(check_gauss(p, MatrixKind::one0).residual, 1e-10);
    EXPECT_LT(check_gauss(p, MatrixKind::inf0).residual, 1e-10);
  }
  EXPECT_THROW(gauss_reference(corpus_n2(), MatrixKind::one0), Error);
}
