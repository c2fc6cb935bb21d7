#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"

using namespace logva;

namespace {
const Monomial& only_mono(const State& s) {
  REQUIRE(s.size() == 1);
  return s.terms().begin()->first;
}
}  // namespace

TEST_CASE("vacuum axioms through y_coeff") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  // Y(vac, z) v = v: only the (0,0) coefficient survives.
  CHECK(y_coeff(M, State::vacuum(), xi, 0, 0) == xi);
  CHECK(y_coeff(M, State::vacuum(), xi, -1, 0).is_zero());
  CHECK(y_coeff(M, State::vacuum(), xi, 1, 0).is_zero());
  CHECK(y_coeff(M, State::vacuum(), xi, 0, 1).is_zero());
  // Creation property: Y(a, z) vac = a + O(z), no singular or zeta terms.
  CHECK(y_coeff(M, xi, State::vacuum(), 0, 0) == xi);
  CHECK(y_coeff(M, xi, State::vacuum(), -1, 0).is_zero());
  CHECK(y_coeff(M, xi, State::vacuum(), 0, 1).is_zero());
}

TEST_CASE("symplectic fermion products and translation") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;

  // All nonnegative-index products of the weight-zero generators vanish;
  // the logarithm lives purely in the zeta direction.
  for (Int n = 0; n <= 3; ++n) {
    CHECK(n_product(M, xi, chi, n).is_zero());
    CHECK(n_product(M, xi, xi, n).is_zero());
    CHECK(n_product(M, chi, chi, n).is_zero());
  }
  // The log coefficient of Y(xi, z) chi at z^0 is the vacuum.
  CHECK(y_coeff(M, xi, chi, 0, 1) == State::vacuum());

  // Translation generator.
  CHECK(M.T(xi) == n_product(M, M.omega, xi, 0));
  // omega products: L_0 xi = 0 (weight zero), L_0 omega = 2 omega.
  CHECK(n_product(M, M.omega, xi, 1).is_zero());
  CHECK(n_product(M, M.omega, M.omega, 1) == Scalar(2) * M.omega);
  // Central term: omega_(3+S) omega = (c/2) vac with c = -2.
  CHECK(n_product(M, M.omega, M.omega, 3) == Scalar(-1) * State::vacuum());
}

TEST_CASE("mode_action agrees with n_product against the vacuum") {
  Model M = parse_model("fb:1");
  const State& x = M.find_generator("x")->state;
  const State& xt = M.find_generator("xt")->state;
  for (Int n = -2; n <= 2; ++n) {
    CHECK(mode_action(M, x, n, xt) == n_product(M, x, xt, n));
    CHECK(mode_action(M, M.omega, n, x) == n_product(M, M.omega, x, n));
  }
  CHECK(n_product(M, x, xt, 0) == State::vacuum());
  CHECK(n_product(M, x, x, 1) == State::vacuum());
  CHECK(n_product(M, xt, x, 0) == Scalar(-1) * State::vacuum());
}

TEST_CASE("derived_coeff equals the basis route") {
  Model M = symplectic_fermions();
  const Monomial& xi = only_mono(M.find_generator("xi")->state);
  const Monomial& chi = only_mono(M.find_generator("chi")->state);
  // a = mu_{(n)}(xi (x) chi) computed once through the model basis, once
  // through the regularized two-variable product.
  for (Int n : {-1LL, -2LL}) {
    State a = n_product(M, State(xi), State(chi), n);
    for (Int m = -3; m <= 2; ++m) {
      for (Int k = 0; k <= 2; ++k) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(derived_coeff(M, xi, n, chi, Monomial{}, m, k) ==
              y_coeff(M, a, State::vacuum(), m, k));
        CHECK(derived_coeff(M, xi, n, chi, chi, m, k) ==
              y_coeff(M, a, State(chi), m, k));
      }
    }
  }
}

TEST_CASE("field_eval materializes an exact window") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;
  LogSeries1 f = field_eval(M, xi, chi, 3);
  CHECK(f.window.hi == 3);
  CHECK(f.window.lo <= kNegInf);
  CHECK(f.extract(0, 1) == State::vacuum());      // the log term
  CHECK(f.extract(-1, 0).is_zero());              // no pole
  CHECK(f.extract(0, 0) == n_product(M, xi, chi, -1));
  CHECK_THROWS_AS(f.extract(4, 0), window_error);
}

TEST_CASE("singular OPE extraction") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;

  auto t = singular_ope(M, xi, chi);
  REQUIRE(t.size() == 1);
  auto it = t.begin();
  CHECK(it->first == std::make_pair(Int(1), Int(-1)));
  CHECK(it->second == Scalar(-1) * State::vacuum());
  // Rendering carries the (-1)^i/i! log^i convention: -1 * -log = +log.
  CHECK(render_ope(M, t, true) == "log(z) * |0>");

  CHECK(singular_ope(M, xi, xi).empty());
  CHECK(render_ope(M, singular_ope(M, xi, xi), true) == "0");
}

TEST_CASE("locality order and the N-independence pad") {
  Model M = symplectic_fermions();
  CHECK(locality_order(M, Rat(0), Rat(0)) == 0);
  CHECK(locality_order(M, Rat(2), Rat(2)) == 4);
  CHECK(locality_order(M, Rat(1, 2), Rat(1)) == 2);  // round up to even
  locality_order_pad() = 2;
  CHECK(locality_order(M, Rat(2), Rat(2)) == 6);
  locality_order_pad() = 0;

  // The computed coefficients do not depend on the chosen order.
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;
  State base = n_product(M, xi, chi, -2);
  locality_order_pad() = 4;
  Model M2 = symplectic_fermions();  // fresh cache
  CHECK(n_product(M2, xi, chi, -2) == base);
  locality_order_pad() = 0;
}

TEST_CASE("fields and the theta map") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;

  CHECK(theta_map(M, identity_field()) == State::vacuum());
  // State-field correspondence: f(z)|0> at 0 returns the state.
  CHECK(theta_map(M, field_of(M, xi)) == xi);
  CHECK(theta_map(M, field_of(M, M.omega)) == M.omega);

  // d/dz of a field corresponds to T.
  Field df = dz_field(M, field_of(M, xi));
  CHECK(theta_map(M, df) == M.T(xi));

  // The normal-ordered product of two log fields keeps zeta terms at the
  // vacuum, so its theta map is rejected rather than silently truncated.
  Field no = normal_order(M, field_of(M, xi), field_of(M, chi));
  CHECK_THROWS(theta_map(M, no));

  // eval agrees with field_eval for plain state fields.
  LogSeries1 a = eval(M, field_of(M, xi), chi, 2);
  LogSeries1 b = field_eval(M, xi, chi, 2);
  CHECK(a.extract(0, 1) == b.extract(0, 1));
  CHECK(a.extract(1, 0) == b.extract(1, 0));
}
