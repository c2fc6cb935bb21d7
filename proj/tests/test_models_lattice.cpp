#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

using namespace logva;

TEST_CASE("rank-1 unit lattice structure constants") {
  Model M = parse_model("lat:1");
  const State& e = M.find_generator("e1")->state;
  const State& f = M.find_generator("f1")->state;
  const State& a = M.find_generator("a1")->state;    // weight-1 current h
  const State& at = M.find_generator("a~1")->state;  // weight-0 log partner

  CHECK(M.max_weight(e) == Rat(1, 2));
  CHECK(M.parity_of(e) == 1);  // |alpha|^2 = 1 is odd

  // Vertex operator products with the two-cocycle: eps(alpha, -alpha) = -1
  // and eps(alpha, alpha) = -1.
  CHECK(n_product(M, e, f, 0) == Scalar(-1) * State::vacuum());
  // e_(−2+S) e = eps(a,a) e^{2a} = -e^{2a}; its weight is |2a|^2/2 = 2.
  State ee = n_product(M, e, e, -2);
  REQUIRE(ee.size() == 1);
  CHECK(ee.terms().begin()->second == Scalar(-1));
  CHECK(M.max_weight(ee) == Rat(2));
  CHECK(n_product(M, e, e, -1).is_zero());
  CHECK(n_product(M, e, e, 0).is_zero());

  // Heisenberg action: a_(0) e = <a, a> e, a~ pairs through the log.
  CHECK(n_product(M, a, e, 0) == e);
  CHECK(n_product(M, at, e, 0).is_zero());
  CHECK(n_product(M, a, a, 1) == State::vacuum());

  // OPE table: the log partner has logarithmic OPEs with vertex operators.
  CHECK(render_ope(M, singular_ope(M, at, at), true) == "log(z) * |0>");
  auto ate = singular_ope(M, at, e);
  REQUIRE(ate.size() == 1);
  CHECK(ate.begin()->first == std::make_pair(Int(1), Int(-1)));
  CHECK(ate.begin()->second == Scalar(-1) * e);
  auto ef = singular_ope(M, e, f);
  REQUIRE(ef.size() == 1);
  CHECK(ef.begin()->first == std::make_pair(Int(0), Int(0)));
  CHECK(ef.begin()->second == Scalar(-1) * State::vacuum());

  // Translation and grading of vertex operators.
  CHECK(M.T(e) == n_product(M, M.omega, e, 0));
  CHECK(n_product(M, M.omega, e, 1) == Scalar(Rat(1, 2)) * e);
}

TEST_CASE("central charge equals the rank") {
  CHECK(extract_central_charge(parse_model("lat:1")) == Scalar(1));
  CHECK(extract_central_charge(parse_model("lat:2")) == Scalar(1));
  CHECK(extract_central_charge(lattice_logva({{1, 0}, {0, 1}})) == Scalar(2));
}

TEST_CASE("norm-2 lattice point is even") {
  Model M = parse_model("lat:2");
  const State& e = M.find_generator("e1")->state;
  const State& f = M.find_generator("f1")->state;
  CHECK(M.parity_of(e) == 0);
  CHECK(M.max_weight(e) == Rat(1));
  CHECK(n_product(M, e, f, 1) == Scalar(-1) * State::vacuum());
  State h = n_product(M, e, f, 0);
  REQUIRE(h.size() == 1);  // -h(-1)
  CHECK(h.terms().begin()->second == Scalar(-1));
}

TEST_CASE("axiom suites pass at small depth") {
  Model M = parse_model("lat:1");
  VerifyOptions opt;
  opt.depth = Rat(2);
  opt.small_depth = Rat(3, 2);
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
