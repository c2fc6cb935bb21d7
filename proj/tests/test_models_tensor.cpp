#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

using namespace logva;

namespace {
const State& gen(const Model& M, const char* name) {
  const auto* g = M.find_generator(name);
  REQUIRE(g != nullptr);
  return g->state;
}
}  // namespace

TEST_CASE("factor generators are prefixed and retain their structure") {
  Model M = parse_model("tensor(sf,fb:1)");
  CHECK(M.parity_of(gen(M, "1.xi")) == 1);
  CHECK(M.parity_of(gen(M, "2.x")) == 0);
  CHECK(M.max_weight(gen(M, "2.x")) == Rat(1));
  CHECK(M.max_weight(gen(M, "1.xi")) == Rat(0));

  // OPEs within one factor are inherited verbatim.
  auto t = singular_ope(M, gen(M, "1.xi"), gen(M, "1.chi"));
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == std::make_pair(Int(1), Int(-1)));
  CHECK(t.begin()->second == Scalar(-1) * M.vacuum);
  auto xx = singular_ope(M, gen(M, "2.x"), gen(M, "2.x"));
  REQUIRE(xx.size() == 1);
  CHECK(xx.begin()->first == std::make_pair(Int(0), Int(1)));
}

TEST_CASE("cross-factor fields are mutually regular and commute") {
  Model M = parse_model("tensor(sf,fb:1)");
  const State& a = gen(M, "1.xi");
  const State& b = gen(M, "2.xt");
  CHECK(singular_ope(M, a, b).empty());
  for (Int n = 0; n <= 2; ++n) CHECK(n_product(M, a, b, n).is_zero());
  // The two orders of the regular product agree (even factor in slot 2).
  CHECK(n_product(M, a, b, -1) == n_product(M, b, a, -1));
  // Braiding acts within the factors only.
  TensorState cross = TensorState::product({&a, &b});
  CHECK(braid(M, cross).is_zero());
  TensorState same = TensorState::product({&a, &gen(M, "1.chi")});
  TensorState bs = braid(M, same);
  REQUIRE(bs.terms().size() == 1);
  CHECK(bs.terms().begin()->second == Scalar(-1));
}

TEST_CASE("conformal structure adds up") {
  Model M = parse_model("tensor(sf,fb:1)");
  // c = -2 + 1 = -1.
  CHECK(extract_central_charge(M) == Scalar(-1));
  CHECK(n_product(M, M.omega, M.omega, 3) == Scalar(Rat(-1, 2)) * M.vacuum);
  CHECK(n_product(M, M.omega, M.omega, 2).is_zero());
  CHECK(n_product(M, M.omega, M.omega, 1) == Scalar(2) * M.omega);
  // L_0 grades by total weight; L_{-1} is the total translation.
  CHECK(n_product(M, M.omega, gen(M, "2.x"), 1) == gen(M, "2.x"));
  CHECK(n_product(M, M.omega, gen(M, "1.xi"), 0) == M.T(gen(M, "1.xi")));
}

TEST_CASE("axiom suites pass at small depth") {
  Model M = parse_model("tensor(sf,fb:1)");
  VerifyOptions opt;
  opt.depth = Rat(2);
  opt.small_depth = Rat(2);
  opt.mode_lo = -1;
  opt.mode_hi = 1;
  opt.random_cases = 5;
  for (const char* suite : {"vacuum", "skew", "units", "virasoro"}) {
    CheckReport r = run_suite(M, suite, opt);
    CAPTURE(suite);
    CHECK(r.ok());
    CHECK(r.pass > 0);
  }
}
