#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hgc/json_io.hpp"

using namespace hgc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_params(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.3"), cplx(0.3, 0.0));
  EXPECT_EQ(parse_complex("0.3+0.05i"), cplx(0.3, 0.05));
  EXPECT_EQ(parse_complex("-1.5e-3-2e+1i"), cplx(-1.5e-3, -20.0));
  EXPECT_EQ(parse_complex("-0.2i"), cplx(0.0, -0.2));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("1-i"), cplx(1.0, -1.0));
  EXPECT_THROW(parse_complex("abc"), Error);
  EXPECT_THROW(parse_complex("1+2"), Error);
  EXPECT_THROW(parse_complex(""), Error);
}

TEST(ParseParams, Valid) {
  Parameters p = parse_params(R"({"n":1,"alpha":[[0.3,0],[0.7,0]],"beta":[[1.4,0]]})");
  EXPECT_EQ(p, make_params({0.3, 0.7}, {1.4}));
  Parameters q = parse_params(R"({"n":1,"alpha":[0.3,"0.7-0.1i"],"beta":["1.4"]})");
  EXPECT_EQ(q.a(2), cplx(0.7, -0.1));
}

TEST(ParseParams, Errors) {
  EXPECT_NE(error_of(R"({"n":1,"alpha":[[0.3,0]],"beta":[[1.4,0]]})").find("alpha"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n":2,"alpha":[[0.3,0],[0.7,0],[0.1,0]],"beta":[[1.4,0]]})").find("beta"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n":1,"alpha":[[0.3,0],[0.7,null]],"beta":[[1.4,0]]})")
                .find("non-finite value"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n":1,"alpha":[[0.3,0],[0.7,0]],"beta":["1e999"]})")
                .find("non-finite value"),
            std::string::npos);
  EXPECT_NE(error_of("{").find("invalid JSON"), std::string::npos);
  EXPECT_NE(error_of(R"({"alpha":[],"beta":[]})").find("n"), std::string::npos);
}

TEST(ParseParams, CorpusFiles) {
  for (const char* f : {"n1_real.json", "n1_complex.json", "n2_complex.json"}) {
    std::ifstream in(std::string(HGC_DATA_DIR) + "/" + f);
    ASSERT_TRUE(in) << f;
    std::stringstream ss;
    ss << in.rdbuf();
    Parameters p = parse_params(ss.str());
    EXPECT_TRUE(validate(p).ok) << f;
    EXPECT_EQ(params_from_json(to_json(p)), p);
  }
}

TEST(MatrixJson, BitExactRoundTrip) {
  Parameters p = make_params({{0.31, 0.05}, {0.42, -0.03}, {0.53, 0.02}},
                             {{1.17, 0.04}, {0.89, -0.02}});
  for (auto kind : {MatrixKind::inf0, MatrixKind::one0, MatrixKind::zero1, MatrixKind::one_inf,
                    MatrixKind::hat_one0, MatrixKind::hat_inf0}) {
    auto m = build_matrix(kind, p);
    std::string text = to_json(m).dump();
    auto back = matrix_from_json(json::parse(text));
    EXPECT_EQ(back.entries, m.entries);
    EXPECT_EQ(back.kind, m.kind);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(ReportJson, Schema) {
  VerificationReport r;
  r.identity = "inverse";
  r.n = 2;
  r.z = cplx(0.5, 0.0);
  r.tolerance = 1e-10;
  r.details = {1e-12};
  r.seed = 42;
  finalize(r);
  json j = to_json(r);
  EXPECT_EQ(j["identity"], "inverse");
  EXPECT_EQ(j["z"][0], 0.5);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["pass"], true);
  r.z.reset();
  r.seed.reset();
  json k = to_json(r);
  EXPECT_TRUE(k["z"].is_null());
  EXPECT_TRUE(k["seed"].is_null());
  std::string keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys += it.key() + ",";
  EXPECT_EQ(keys.rfind("identity,n,z,residual,tolerance,pass,seed,details", 0), 0u);
}
