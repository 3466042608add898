#include <gtest/gtest.h>

#include "hgc/series.hpp"

using namespace hgc;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Parameters corpus_n1() { return make_params({{0.31, 0.05}, {0.62, -0.03}}, {{1.27, 0.04}}); }

Parameters corpus_n2() {
  return make_params({{0.31, 0.05}, {0.42, -0.03}, {0.53, 0.02}}, {{1.17, 0.04}, {0.89, -0.02}});
}

}  // namespace

TEST(EvalGhs, ClosedForms) {
  auto v = eval_ghs({1.0, 1.0}, {2.0}, 0.5);
  EXPECT_NEAR(v.value.real(), 2.0 * std::log(2.0), 1e-12);
  EXPECT_LE(v.tail_estimate, 1e-12);
  EXPECT_NEAR(eval_ghs({1.0, 1.0}, {2.0}, 0.5, 1e-15).value.real(), 2.0 * std::log(2.0), 1e-14);
  EXPECT_EQ(eval_ghs({{0.3, 0.1}, 0.7}, {1.4}, 0.0).value, cplx(1.0));
  cplx b{1.3, -0.2};
  EXPECT_LT(rel(eval_ghs({0.3, b}, {b}, 0.25, 1e-15).value, std::pow(0.75, -0.3)), 1e-14);
}

// mpmath hyper() at 30 digits
TEST(EvalGhs, ReferenceValues) {
  auto v = eval_ghs({{0.3, 0.1}, -0.4, 1.2}, {{1.7, 0.2}, 0.6}, {0.45, 0.2}, 1e-15);
  EXPECT_LT(rel(v.value, {0.93736825271630844844, -0.050491611767167473305}), 1e-13);
  std::vector<cplx> up, lo;
  for (int k = 1; k <= 6; ++k) up.emplace_back(0.1 * k + 0.05, 0.02 * k);
  for (int k = 1; k <= 5; ++k) lo.emplace_back(0.9 + 0.13 * k, -0.03 * k);
  EXPECT_LT(rel(eval_ghs(up, lo, 0.5, 1e-15).value, {1.0000767987783186383, 0.00033512608315593802027}),
            1e-13);
  EXPECT_LT(rel(eval_ghs(up, lo, -0.7, 1e-15).value, {0.99988503099128079051, -0.00043788295188926182251}),
            1e-13);
}

TEST(EvalGhs, CancellingSlotsDropOneLevel) {
  cplx a{0.3, 0.2}, b{-0.7, 0.1}, c{0.45, -0.3}, d{1.6, 0.4};
  EXPECT_LT(rel(eval_ghs({a, b, c}, {d, c}, 0.6).value, eval_ghs({a, b}, {d}, 0.6).value), 1e-13);
}

TEST(EvalGhs, Errors) {
  EXPECT_THROW(eval_ghs({0.3, 0.7}, {1.4}, 1.0), Error);
  try {
    eval_ghs({0.3, 0.7}, {1.4}, 0.999, 1e-14, 50);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_STREQ(e.what(), "max terms exceeded");
    EXPECT_TRUE(is_finite(e.partial()));
  }
  EXPECT_THROW(eval_ghs({0.3, 0.7}, {-2.0}, 0.5), Error);
  auto t = eval_ghs({-3.0, 0.5}, {1.5}, 0.9);  // terminating polynomial
  EXPECT_LE(t.terms_used, 5);
}

TEST(F0, PlainSeriesAndGaussSolution) {
  Parameters p = make_params({0.3, 0.7}, {1.4});
  cplx z = 0.5;
  EXPECT_EQ(f0(2, p, z, Branch::pos_z).value, eval_ghs({0.3, 0.7}, {1.4}, z).value);
  // z^{1-b} 2F1(a-b+1, a'-b+1; 2-b; z)
  cplx want = std::pow(0.5, -0.4) * eval_ghs({-0.1, 0.3}, {0.6}, z).value;
  EXPECT_LT(rel(f0(1, p, z, Branch::pos_z).value, want), 1e-15);
  Parameters q = corpus_n1();
  EXPECT_LT(rel(f0(1, q, 0.3, Branch::pos_z).value, {1.3920251584392663023, 0.06804600987007928815}),
            1e-12);
  EXPECT_LT(rel(f0(1, q, 0.7, Branch::pos_z).value, {1.1244897650571457315, 0.018244006553598655582}),
            1e-12);
  EXPECT_THROW(f0(3, p, z, Branch::pos_z), Error);
}

TEST(Finf, LeadingTermAndZeroExponent) {
  Parameters p = make_params({{0.3, 0.1}, {0.7, -0.2}}, {{1.4, 0.05}});
  cplx z = -1e6;
  auto v = finf(1, p, z, {});
  EXPECT_LT(rel(v.value / std::pow(-z, -p.a(1)), 1.0), 1e-5);
  Parameters q = make_params({0.0, 0.45}, {1.3});
  auto w = finf(1, q, -3.0, {});
  EXPECT_LT(rel(w.value, eval_ghs({-0.3, 0.0}, {0.55}, -1.0 / 3.0).value), 1e-15);
  EXPECT_THROW(finf(1, p, -0.5, {}), Error);
}

TEST(F1, GaussSolutionsAtOne) {
  Parameters p = corpus_n1();
  const double zs[] = {0.3, 0.5, 0.7};
  const cplx holo[] = {{1.4159521781683570269, 0.070336691007811188708},
                       {1.2228830597250005682, 0.035127995910388776332},
                       {1.109458356421884274, 0.016453006730019413373}};
  const cplx nonholo[] = {{1.5095434381152214396, 0.056422215962100227746},
                          {1.0815343016923854113, 0.013118598214793782097},
                          {0.7823748716225825814, -0.0082662053125928584875}};
  for (int k = 0; k < 3; ++k) {
    EXPECT_LT(rel(f1_holo(1, p, zs[k]).value, holo[k]), 1e-12) << zs[k];
    EXPECT_LT(rel(f1_nonholo(p, zs[k]).value, nonholo[k]), 1e-12) << zs[k];
  }
}

// Reference: F^(0) C^(10) in 30-digit arithmetic, divided by the Beta products.
TEST(F1, CorpusN2ReferenceValues) {
  Parameters p = corpus_n2();
  SolutionSet set(p);
  const double zs[] = {0.3, 0.5, 0.7};
  const cplx want[3][3] = {
      {{1.4678438863688047457, 0.075401427458257493065},
       {2.4294292741563429749, -0.0019787364102393752277},
       {1.503412547776346171, 0.024934567270597501738}},
      {{1.2912395813636683536, 0.042186815168958124728},
       {2.0873382339791746308, -0.005032779821149933433},
       {0.8681594385361881809, 0.016450545601851873207}},
      {{1.1848509645191144091, 0.023898793012791918758},
       {1.8843753243769803318, -0.0057307431522774956837},
       {0.47428103922273892953, 0.01260812751599847346}}};
  for (int k = 0; k < 3; ++k) {
    auto v = set.at(Point::one, zs[k]);
    for (int i = 0; i < 3; ++i) EXPECT_LT(rel(v.series[i].value, want[k][i]), 1e-9) << zs[k] << " " << i;
  }
}

TEST(F1, HoloValueAtOneIsTheSliceSum) {
  Parameters p = corpus_n1();
  // n = 1: h(m2) vanishes for m2 > 0, so f(1) = 1
  EXPECT_LT(std::abs(f1_holo(1, p, 1.0).value - 1.0), 1e-14);
}

TEST(F1, NonholoLeadingBehaviour) {
  Parameters p = corpus_n2();
  cplx e = total_exponent(p);
  for (double y : {1e-2, 1e-4}) {
    cplx c = f1_nonholo(p, 1.0 - y).value / std::pow(cplx(y), e);
    EXPECT_LT(std::abs(c - 1.0), 2.0 * y) << y;
  }
}

TEST(F1, PlainWeightDisagreesWithGauss) {
  Parameters p = corpus_n1();
  double d = std::abs(f1_nonholo(p, 0.5, {}, NonholoWeight::printed).value -
                      f1_nonholo(p, 0.5).value);
  EXPECT_GT(d, 1e-2);
}

TEST(F1, Smoothness) {
  Parameters p = corpus_n2();
  SolutionSet set(p);
  double h = 0.02;
  for (int i = 1; i <= 2; ++i) {
    auto f = [&](double z) { return set.holo(i)(z, {}).value; };
    cplx pred = 3.0 * f(0.5 + 2 * h) - 3.0 * f(0.5 + h) + f(0.5);
    EXPECT_LT(std::abs(pred - f(0.5 + 3 * h)), 1e-3) << i;
    cplx second = (f(0.5 + h) - 2.0 * f(0.5) + f(0.5 - h)) / (h * h);
    cplx second2 = (f(0.5 + h / 2) - 2.0 * f(0.5) + f(0.5 - h / 2)) / (h * h / 4);
    EXPECT_LT(std::abs(second - second2), 1e-3 * std::max(1.0, std::abs(second)));
  }
}

TEST(F1, HoloNeedsConvergentParameters) {
  // alpha_3 - beta_2 + 1 <= 0 for the i = 1 solution
  Parameters p = make_params({{0.31, 0.05}, {0.42, -0.03}, {-0.6, 0.02}}, {{1.17, 0.04}, {0.89, -0.02}});
  EXPECT_THROW(HoloSolution(p, 1), Error);
}

TEST(SolutionVector, PlainSeriesComponent) {
  Parameters p = corpus_n2();
  auto v = solution_vector(Point::zero, p, 0.5);
  cplx pre = beta(p.a(1), p.b(1) - p.a(1)) * beta(p.a(2), p.b(2) - p.a(2));
  EXPECT_LT(rel(v.values[2], pre * eval_ghs(p.alpha, p.beta, 0.5).value), 1e-14);
  EXPECT_EQ(v.values.size(), 3u);
  // 30-digit reference values of the Beta-prefactored vector
  EXPECT_LT(rel(v.values[0], {23.357752974336675975, 6.9226069983460977049}), 1e-12);
  EXPECT_LT(rel(v.values[1], {6.9000385820771963076, -1.1021549887148192251}), 1e-12);
  EXPECT_LT(rel(v.values[2], {12.947000824795089456, -1.3736694528682319684}), 1e-12);
  auto w = solution_vector(Point::one, p, 0.5);
  EXPECT_LT(rel(w.values[0], {24.332840295678792229, -4.0730389923862554578}), 1e-9);
  EXPECT_LT(rel(w.values[1], {24.818870952470877728, 7.2315723482937485598}), 1e-9);
  EXPECT_LT(rel(w.values[2], {3.6414289078694978286, 0.19742697438479344513}), 1e-12);
  auto again = solution_vector(Point::one, shift(p, {0, 0, 0}, {0, 0}), 0.5);
  EXPECT_EQ(again.values, w.values);
}

TEST(SolutionVector, BoundaryGuard) {
  Parameters p = corpus_n1();
  EXPECT_THROW(solution_vector(Point::zero, p, 0.85), Error);
  SeriesOptions o;
  o.boundary_override = true;
  EXPECT_NO_THROW(solution_vector(Point::zero, p, 0.85, o));
}
