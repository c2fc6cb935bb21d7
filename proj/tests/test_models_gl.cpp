#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

using namespace logva;

namespace {
Scalar gamma_coeff() {
  // The coefficient of omega in l_(1+S) l / 2: forced by associativity of
  // the mode algebra (see models_gl.cpp).
  return Scalar(Rat(15, 16)) - Scalar(Rat(1, 6)) * Scalar::beta();
}
}  // namespace

TEST_CASE("generator data") {
  Model M = gurarie_ludwig();
  for (const char* g : {"L", "l", "xi", "xibar"}) REQUIRE(M.find_generator(g));
  const State& L = M.find_generator("L")->state;
  const State& l = M.find_generator("l")->state;
  const State& xi = M.find_generator("xi")->state;
  const State& xb = M.find_generator("xibar")->state;
  CHECK(M.omega == L);
  CHECK(M.parity_of(L) == 0);
  CHECK(M.parity_of(l) == 0);
  CHECK(M.parity_of(xi) == 1);
  CHECK(M.parity_of(xb) == 1);
  for (const auto& g : M.generators) CHECK(M.max_weight(g.state) == Rat(2));
}

TEST_CASE("odd derivations eta and etabar") {
  Model M = gurarie_ludwig();
  const State& L = M.find_generator("L")->state;
  const State& l = M.find_generator("l")->state;
  const State& xi = M.find_generator("xi")->state;
  const State& xb = M.find_generator("xibar")->state;

  CHECK(M.gl_eta(L).is_zero());
  CHECK(M.gl_etabar(L).is_zero());
  CHECK(M.gl_eta(l) == Scalar(-2) * xi);
  CHECK(M.gl_etabar(l) == Scalar(2) * xb);
  CHECK(M.gl_eta(xb) == L);
  CHECK(M.gl_etabar(xi) == L);
  CHECK(M.gl_eta(xi).is_zero());
  CHECK(M.gl_etabar(xb).is_zero());

  // eta^2 = etabar^2 = 0 and eta etabar = -etabar eta on deeper states.
  State probe = mode_action(M, l, -2, mode_action(M, l, -1, M.vacuum));
  CHECK(M.gl_eta(M.gl_eta(probe)).is_zero());
  CHECK(M.gl_etabar(M.gl_etabar(probe)).is_zero());
  CHECK(M.gl_eta(M.gl_etabar(probe)) + M.gl_etabar(M.gl_eta(probe)) == State());
}

TEST_CASE("products of the logarithmic pair") {
  Model M = gurarie_ludwig();
  const State& L = M.find_generator("L")->state;
  const State& l = M.find_generator("l")->state;
  const State& xi = M.find_generator("xi")->state;
  const State& xb = M.find_generator("xibar")->state;
  Scalar beta = Scalar::beta();
  Scalar g = gamma_coeff();

  // Central-type products.
  CHECK(n_product(M, L, l, 3) == beta * M.vacuum);
  CHECK(n_product(M, l, L, 3) == beta * M.vacuum);
  CHECK(n_product(M, xi, xb, 3) == (Scalar(Rat(1, 2)) * beta) * M.vacuum);
  CHECK(n_product(M, xb, xi, 3) == (Scalar(Rat(-1, 2)) * beta) * M.vacuum);
  CHECK(n_product(M, L, L, 3).is_zero());
  CHECK(n_product(M, l, l, 3).is_zero());
  for (const char* a : {"L", "l", "xi", "xibar"})
    for (const char* b : {"L", "l", "xi", "xibar"})
      CHECK(n_product(M, M.find_generator(a)->state, M.find_generator(b)->state, 2)
                .is_zero());

  // Weight-grading products (index 1 = the L_0 column).
  CHECK(n_product(M, L, L, 1) == Scalar(2) * L);
  CHECK(n_product(M, L, l, 1) == L + Scalar(2) * l);
  CHECK(n_product(M, L, xi, 1) == Scalar(2) * xi);
  CHECK(n_product(M, l, xi, 1) == Scalar(Rat(1, 2)) * xi);
  CHECK(n_product(M, l, xb, 1) == Scalar(Rat(1, 2)) * xb);
  CHECK(n_product(M, xi, xb, 1) == Scalar(Rat(1, 4)) * L + l);
  CHECK(n_product(M, xb, xi, 1) == Scalar(Rat(-1, 4)) * L - l);
  CHECK(n_product(M, xi, xi, 1).is_zero());
  // l_(1+S) l carries the associativity-forced omega coefficient 2*gamma.
  CHECK(n_product(M, l, l, 1) == (Scalar(2) * g) * L + l);

  // Translation column (index 0).
  CHECK(n_product(M, L, l, 0) == M.T(l));
  CHECK(n_product(M, l, l, 0) == Scalar(Rat(1, 2)) * M.T(l) + g * M.T(L));
  CHECK(n_product(M, l, xi, 0) == Scalar(Rat(3, 4)) * M.T(xi));
  CHECK(n_product(M, xi, xb, 0) ==
        Scalar(Rat(1, 8)) * M.T(L) + Scalar(Rat(1, 2)) * M.T(l));
  CHECK(n_product(M, xi, l, 0) == Scalar(Rat(-1, 4)) * M.T(xi));
}

TEST_CASE("central charge is zero but the log pairing is beta") {
  Model M = gurarie_ludwig();
  CHECK(extract_central_charge(M) == Scalar(0));
  // [L_2, l_{-2}] vac = beta vac: the defining normalization of l.
  const State& L = M.find_generator("L")->state;
  const State& l = M.find_generator("l")->state;
  State lhs = mode_action(M, L, 3, mode_action(M, l, -1, M.vacuum)) -
              mode_action(M, l, -1, mode_action(M, L, 3, M.vacuum));
  CHECK(lhs == Scalar::beta() * M.vacuum);
}

TEST_CASE("pinned beta specializes every product") {
  Model M = gurarie_ludwig(Rat(5, 8));
  const State& L = M.find_generator("L")->state;
  const State& l = M.find_generator("l")->state;
  CHECK(M.gl_beta == Scalar(Rat(5, 8)));
  CHECK(n_product(M, L, l, 3) == Scalar(Rat(5, 8)) * M.vacuum);
  State ll = n_product(M, l, l, 1);
  // gamma at beta = 5/8: 15/16 - 5/48 = 5/6; omega coefficient 2*gamma = 5/3.
  CHECK(ll.coeff(L.terms().begin()->first) == Scalar(Rat(5, 3)));
  CHECK(parse_model("gl:beta=5/8").gl_beta == Scalar(Rat(5, 8)));
}

TEST_CASE("logarithmic OPE of xi with xibar") {
  Model M = gurarie_ludwig();
  const State& xi = M.find_generator("xi")->state;
  const State& xb = M.find_generator("xibar")->state;
  const State& L = M.find_generator("L")->state;
  auto t = singular_ope(M, xi, xb);
  REQUIRE(t.size() == 6);
  CHECK(t.at({0, 3}) == (Scalar(Rat(1, 2)) * Scalar::beta()) * M.vacuum);
  CHECK(t.at({1, 1}) == Scalar(-1) * L);
  // The log^1 constant term is the square of the Virasoro field:
  // -1/2 L(-2)^2 vac.
  State l2 = mode_action(M, L, -1, L);
  CHECK(t.at({1, -1}) == Scalar(Rat(-1, 2)) * l2);
}

TEST_CASE("free-basis enumeration") {
  Model M = gurarie_ludwig();
  auto b = M.basis(Rat(4), 2);
  CHECK(b.size() == 21);
  int wt4 = 0;
  for (const auto& m : b)
    if (M.weight(m) == Rat(4)) ++wt4;
  CHECK(wt4 == 12);
}

TEST_CASE("mode brackets agree across all three routes") {
  Model M = gurarie_ludwig();
  const State& l = M.find_generator("l")->state;
  const State& xb = M.find_generator("xibar")->state;
  State v = mode_action(M, l, -2, M.vacuum);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (Int m = -1; m <= 1; ++m) {
        for (Int k = -1; k <= 1; ++k) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(m);
          CAPTURE(k);
          const State& sa = M.generators[static_cast<size_t>(a)].state;
          const State& sb = M.generators[static_cast<size_t>(b)].state;
          State ab = M.gl_mode_act(a, m, M.gl_mode_act(b, k, v));
          State ba = M.gl_mode_act(b, k, M.gl_mode_act(a, m, v));
          State direct = (a >= 2 && b >= 2) ? ab + ba : ab - ba;
          CHECK(direct == gl_template_bracket(M, a, m, b, k, v));
          CHECK(direct == gl_borcherds_bracket(M, sa, m + 1, sb, k + 1, v));
        }
      }
    }
  }
  // A harmonic-tail case: [xi_2, xibar_{-2}] on a deep state.
  State w = mode_action(M, xb, -3, v);
  State ab = M.gl_mode_act(2, 2, M.gl_mode_act(3, -2, w));
  State ba = M.gl_mode_act(3, -2, M.gl_mode_act(2, 2, w));
  CHECK(ab + ba == gl_template_bracket(M, 2, 2, 3, -2, w));
}
