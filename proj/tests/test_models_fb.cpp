#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

using namespace logva;

TEST_CASE("rank-1 structure constants") {
  Model M = parse_model("fb:1");
  const State& xt = M.find_generator("xt")->state;  // weight-0 log partner
  const State& x = M.find_generator("x")->state;    // weight-1 current

  CHECK(M.parity_of(x) == 0);
  CHECK(M.max_weight(xt) == Rat(0));
  CHECK(M.max_weight(x) == Rat(1));

  // x_(0) xt = vac, xt_(0) x = -vac, x_(1) x = <x, x> vac = vac.
  CHECK(n_product(M, x, xt, 0) == State::vacuum());
  CHECK(n_product(M, xt, x, 0) == Scalar(-1) * State::vacuum());
  CHECK(n_product(M, x, x, 1) == State::vacuum());
  CHECK(n_product(M, x, x, 0).is_zero());
  CHECK(n_product(M, xt, xt, 0).is_zero());
  CHECK(n_product(M, xt, xt, 1).is_zero());

  // The current is the derivative of the log partner.
  CHECK(M.T(xt) == x);

  // OPE table: xt xt ~ log z, x xt ~ 1/z, x x ~ 1/z^2.
  CHECK(render_ope(M, singular_ope(M, xt, xt), true) == "log(z) * |0>");
  auto xxt = singular_ope(M, x, xt);
  REQUIRE(xxt.size() == 1);
  CHECK(xxt.begin()->first == std::make_pair(Int(0), Int(0)));
  CHECK(xxt.begin()->second == State::vacuum());
  auto xx = singular_ope(M, x, x);
  REQUIRE(xx.size() == 1);
  CHECK(xx.begin()->first == std::make_pair(Int(0), Int(1)));
  CHECK(xx.begin()->second == State::vacuum());
}

TEST_CASE("central charge equals the rank") {
  CHECK(extract_central_charge(parse_model("fb:1")) == Scalar(1));
  CHECK(extract_central_charge(parse_model("fb:2")) == Scalar(2));
}

TEST_CASE("general Gram matrices") {
  // Rank 2 with an off-diagonal pairing.
  Model M = free_boson({{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(2)}});
  const State& a1 = M.find_generator("a1")->state;
  const State& a2 = M.find_generator("a2")->state;
  const State& t1 = M.find_generator("a~1")->state;
  CHECK(n_product(M, a1, a1, 1) == State::vacuum());
  CHECK(n_product(M, a1, a2, 1) == Scalar(Rat(1, 2)) * State::vacuum());
  CHECK(n_product(M, a2, a2, 1) == Scalar(2) * State::vacuum());
  CHECK(n_product(M, a1, t1, 0) == State::vacuum());
  CHECK(extract_central_charge(M) == Scalar(2));
}

TEST_CASE("braiding nilpotency on the log pair") {
  Model M = parse_model("fb:1");
  const State& xt = M.find_generator("xt")->state;
  TensorState t = TensorState::product({&xt, &xt});
  CHECK(nilpotency_order(M.S, 0, 1, t, M.parity) == 2);
  auto terms = exp_theta(M.S, 0, 1, t, M.parity);
  CHECK(terms.size() == 2);
}

TEST_CASE("axiom suites pass at small depth") {
  Model M = parse_model("fb:1");
  VerifyOptions opt;
  opt.depth = Rat(3);
  opt.small_depth = Rat(2);
  opt.mode_lo = -1;
  opt.mode_hi = 1;
  opt.random_cases = 5;
  for (const char* suite : {"vacuum", "translation", "skew", "units", "virasoro"}) {
    CheckReport r = run_suite(M, suite, opt);
    CAPTURE(suite);
    CHECK(r.ok());
    CHECK(r.pass > 0);
  }
}
