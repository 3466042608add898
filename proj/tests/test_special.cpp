#include <gtest/gtest.h>

#include <random>

#include "hgc/special.hpp"

using namespace hgc;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST(LogGamma, TrivialValues) {
  EXPECT_LT(std::abs(log_gamma(1.0)), 1e-14);
  EXPECT_NEAR(log_gamma(0.5).real(), 0.5723649429247001, 1e-14);
  EXPECT_NEAR(log_gamma(5.0).real(), std::log(24.0), 1e-14);
}

// mpmath at 30 digits
TEST(LogGamma, ReferenceValues) {
  EXPECT_LT(rel(gamma({0.3, 0.2}), {1.9803581728234425391, -1.4145760083733033149}), 1e-13);
  EXPECT_LT(rel(log_gamma({-2.7, 1.1}), {-2.862089026879696847, -8.7477954918325464046}), 1e-13);
  EXPECT_LT(rel(log_gamma({12.5, -30.0}), {-5.0853503393553046935, -88.54689827081931339}), 1e-13);
}

TEST(LogGamma, PoleIsRefused) {
  EXPECT_THROW(log_gamma(0.0), Error);
  EXPECT_THROW(log_gamma(-3.0), Error);
  try {
    log_gamma(-2.0);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "gamma pole");
  }
}

TEST(LogGamma, Recurrence) {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> re(-20.0, 20.0), im(-20.0, 20.0);
  for (int k = 0; k < 200; ++k) {
    cplx z{re(g), im(g)};
    cplx d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    double turns = d.imag() / (2.0 * pi);
    EXPECT_LT(std::abs(d.real()), 1e-12) << z;
    EXPECT_LT(std::abs(turns - std::round(turns)) * 2.0 * pi, 1e-12) << z;
  }
}

TEST(Beta, Values) {
  EXPECT_LT(std::abs(beta(1.0, 1.0) - 1.0), 1e-14);
  EXPECT_LT(rel(beta(0.5, 0.5), pi), 1e-14);
  EXPECT_LT(rel(beta({0.4, 0.1}, {1.3, -0.2}), {2.0352838389147490005, -0.4077836729528653558}),
            1e-13);
  cplx a{0.7, -0.3}, b{-1.4, 0.2};
  EXPECT_LT(rel(beta(a, b), beta(b, a)), 1e-15);
  EXPECT_THROW(beta(-1.0, 0.5), Error);
}

TEST(Pochhammer, ProductAndShift) {
  EXPECT_EQ(pochhammer(2.0, 3), cplx(24.0));
  EXPECT_EQ(pochhammer({0.3, 0.4}, 0), cplx(1.0));
  EXPECT_EQ(pochhammer(-2.0, 4), cplx(0.0));
  EXPECT_LT(std::abs(pochhammer(1.0, 1) / pochhammer(2.0, 1) * beta(1.0, 1.0) - beta(2.0, 1.0)),
            1e-15);
  EXPECT_LT(rel(pochhammer({0.3, -0.4}, 7), {-136.38279270000007105, -752.45239639999999353}),
            1e-14);
  cplx a{0.37, 0.21}, b{1.3, -0.4};
  for (long m : {1L, 4L, 9L})
    EXPECT_LT(rel(beta(a + static_cast<double>(m), b),
                  pochhammer(a, m) / pochhammer(a + b, m) * beta(a, b)),
              1e-12);
  for (long k : {3L, 11L, 25L})
    EXPECT_LT(rel(pochhammer(a, k), std::exp(log_gamma(a + static_cast<double>(k)) - log_gamma(a))),
              1e-11);
}

TEST(SinPi, Values) {
  EXPECT_NEAR(sin_pi(0.5).real(), 1.0, 1e-16);
  EXPECT_NEAR(sin_pi(1.0 / 6.0).real(), 0.5, 1e-15);
  for (int k = -7; k <= 7; ++k) EXPECT_LT(std::abs(sin_pi(static_cast<double>(k))), 1e-15);
  EXPECT_NEAR(sin_pi(1e6 + 0.3).real(), 0.8090169943749474036, 1e-10);
  EXPECT_LT(rel(sin_pi({0.25, 0.1}), {0.74228904231071281931, 0.22581634647331270217}), 1e-15);
}

TEST(SinPi, ExponentialForm) {
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> re(-4.0, 4.0), im(-5.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    cplx z{re(g), im(g)};
    EXPECT_LT(rel(sin_pi(z), (e_pi(z) - e_pi(-z)) / (2.0 * I)), 1e-13) << z;
  }
}

TEST(EPi, Values) {
  EXPECT_LT(std::abs(e_pi(0.0) - 1.0), 1e-16);
  EXPECT_LT(std::abs(e_pi(1.0) + 1.0), 1e-16);
  EXPECT_LT(std::abs(e_pi(0.5) - I), 1e-16);
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-5.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    cplx a{re(g), im(g)}, b{re(g), im(g)};
    EXPECT_LT(rel(e_pi(a + b), e_pi(a) * e_pi(b)), 1e-14);
  }
}
