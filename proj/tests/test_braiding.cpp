#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/core.hpp"
#include "logva/models.hpp"

using namespace logva;

namespace {
TensorState tp(const State& a, const State& b) { return TensorState::product({&a, &b}); }
}  // namespace

TEST_CASE("symplectic fermion braiding on generators") {
  Model M = symplectic_fermions();
  const State& xi = M.find_generator("xi")->state;
  const State& chi = M.find_generator("chi")->state;

  // S(chi (x) xi) = + vac (x) vac; S(xi (x) chi) = - vac (x) vac.
  TensorState vv = tp(State::vacuum(), State::vacuum());
  CHECK(braid(M, tp(chi, xi)) == vv);
  CHECK(braid(M, tp(xi, chi)) == Scalar(-1) * vv);
  CHECK(braid(M, tp(xi, xi)).is_zero());
  CHECK(braid(M, tp(chi, chi)).is_zero());

  // S kills the vacuum pair: nilpotency order 2.
  CHECK(nilpotency_order(M.S, 0, 1, tp(chi, xi), M.parity) == 2);
  CHECK(nilpotency_order(M.S, 0, 1, vv, M.parity) == 1);
  CHECK(nilpotency_order(M.S, 0, 1, TensorState(), M.parity) == 0);
}

TEST_CASE("free boson braiding") {
  Model M = parse_model("fb:1");
  const State& xt = M.find_generator("xt")->state;
  CHECK(braid(M, tp(xt, xt)) ==
        Scalar(-1) * tp(State::vacuum(), State::vacuum()));
  CHECK(nilpotency_order(M.S, 0, 1, tp(xt, xt), M.parity) == 2);
}

TEST_CASE("Gurarie-Ludwig braiding is nilpotent of order three") {
  Model M = gurarie_ludwig();
  const State& l = M.find_generator("l")->state;
  const State& L = M.find_generator("L")->state;
  const State& xi = M.find_generator("xi")->state;
  const State& xb = M.find_generator("xibar")->state;

  TensorState ll = tp(l, l);
  CHECK(braid(M, ll) == Scalar(2) * tp(xi, xb) - Scalar(2) * tp(xb, xi));
  CHECK(braid_pow(M, ll, 2) == Scalar(-2) * tp(L, L));
  CHECK(braid_pow(M, ll, 3).is_zero());
  CHECK(nilpotency_order(M.S, 0, 1, ll, M.parity) == 3);

  // L is S-trivial against everything.
  CHECK(braid(M, tp(L, l)).is_zero());
  CHECK(nilpotency_order(M.S, 0, 1, tp(L, l), M.parity) == 1);
}

TEST_CASE("exp_theta lists exactly the nonzero powers") {
  Model M = gurarie_ludwig();
  const State& l = M.find_generator("l")->state;
  auto terms = exp_theta(M.S, 0, 1, tp(l, l), M.parity);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].first == 0);
  CHECK(terms[0].second == tp(l, l));
  CHECK(terms[1].first == 1);
  CHECK(terms[1].second == braid(M, tp(l, l)));
  CHECK(terms[2].first == 2);
  CHECK(terms[2].second == braid_pow(M, tp(l, l), 2));
}

TEST_CASE("binom_shift matches the expanded polynomial in S") {
  Model M = gurarie_ludwig();
  const State& l = M.find_generator("l")->state;
  TensorState t = tp(l, l);
  for (Int n : {-3LL, -1LL, 0LL, 2LL, 5LL}) {
    // C(n+S, 2) = (n(n-1) + (2n-1) S + S^2) / 2 on a probe with S^3 = 0.
    TensorState expect = Scalar(Rat(static_cast<long>(n * (n - 1)), 2)) * t;
    expect += Scalar(Rat(static_cast<long>(2 * n - 1), 2)) * braid(M, t);
    expect += Scalar(Rat(1, 2)) * braid_pow(M, t, 2);
    CHECK(binom_shift(M.S, 0, 1, n, 2, t, M.parity) == expect);
  }
  CHECK(binom_shift(M.S, 0, 1, 4, 0, t, M.parity) == t);
  CHECK(binom_shift(M.S, 0, 1, 4, -1, t, M.parity).is_zero());
  // C(1+S, 1) = 1 + S.
  CHECK(binom_shift(M.S, 0, 1, 1, 1, t, M.parity) == t + braid(M, t));
}

TEST_CASE("braiding axioms hold on generator probes") {
  for (const char* spec : {"sf", "fb:1", "gl"}) {
    Model M = parse_model(spec);
    for (const auto& ga : M.generators) {
      for (const auto& gb : M.generators) {
        CAPTURE(spec);
        CAPTURE(ga.name);
        CAPTURE(gb.name);
        // S P = P S (symmetry of the braiding with the Koszul flip).
        CHECK(symmetry_defect(M.S, tp(ga.state, gb.state), M.parity).is_zero());
        // Slot copies commute on three-tensor probes.
        for (const auto& gc : M.generators) {
          TensorState t3 =
              TensorState::product({&ga.state, &gb.state, &gc.state});
          CHECK(slot_commutator_defect(M.S, 0, 1, 1, 2, t3, M.parity).is_zero());
          CHECK(slot_commutator_defect(M.S, 0, 1, 0, 2, t3, M.parity).is_zero());
        }
      }
    }
  }
}
