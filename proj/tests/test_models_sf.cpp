#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

using namespace logva;

TEST_CASE("structure constants of the symplectic fermion pair") {
  Model M = symplectic_fermions();
  REQUIRE(M.find_generator("xi") != nullptr);
  REQUIRE(M.find_generator("chi") != nullptr);
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;

  // Both generators are odd and of weight zero.
  CHECK(M.parity_of(xi) == 1);
  CHECK(M.parity_of(chi) == 1);
  CHECK(M.max_weight(xi) == Rat(0));
  CHECK(M.max_weight(chi) == Rat(0));
  CHECK(M.max_weight(M.omega) == Rat(2));

  // The singular OPE table: xi chi ~ log z, chi xi ~ -log z, diagonals regular.
  CHECK(render_ope(M, singular_ope(M, xi, chi), true) == "log(z) * |0>");
  auto cx = singular_ope(M, chi, xi);
  REQUIRE(cx.size() == 1);
  CHECK(cx.begin()->second == State::vacuum());  // -1/1! * log * vac => -log
  CHECK(singular_ope(M, xi, xi).empty());
  CHECK(singular_ope(M, chi, chi).empty());
}

TEST_CASE("central charge is -2") {
  Model M = symplectic_fermions();
  CHECK(extract_central_charge(M) == Scalar(-2));
  CHECK(M.central_charge_expected == Scalar(-2));
}

TEST_CASE("Virasoro data on generators") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  // L_{-1} = T, L_0 = weight, L_1 kills primaries of weight zero.
  CHECK(n_product(M, M.omega, xi, 0) == M.T(xi));
  CHECK(n_product(M, M.omega, xi, 1).is_zero());
  CHECK(n_product(M, M.omega, M.omega, 1) == Scalar(2) * M.omega);
  CHECK(n_product(M, M.omega, M.omega, 2).is_zero());
  CHECK(n_product(M, M.omega, M.omega, 3) == Scalar(-1) * State::vacuum());
}

TEST_CASE("braiding is the log coefficient") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;
  // S(chi (x) xi) = vac (x) vac and the OPE log coefficient match up:
  // mu_{(-1)} S(xi (x) chi) = -vac is the (i=1, n=-1) OPE entry.
  TensorState s = braid(M, TensorState::product({&xi, &chi}));
  CHECK(n_product(M, s, -1) == Scalar(-1) * State::vacuum());
}

TEST_CASE("axiom suites pass at small depth") {
  Model M = symplectic_fermions();
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
