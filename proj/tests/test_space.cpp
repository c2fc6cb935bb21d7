#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/space.hpp"

using namespace logva;

namespace {

Letter let(int tag, int mode) { return Letter{tag, mode}; }
Monomial mono(std::initializer_list<Letter> ls) {
  Monomial m;
  m.word.assign(ls);
  return m;
}

}  // namespace

TEST_CASE("letter and monomial ordering") {
  CHECK(let(0, -2) < let(0, -1));
  CHECK(let(0, -2) < let(1, -2));  // ties broken by tag
  CHECK(let(1, -3) < let(0, -2));  // mode dominates

  CHECK(Monomial{}.is_vacuum());
  Monomial latpt;
  latpt.lat = {0, 0};
  CHECK(latpt.is_vacuum());
  latpt.lat = {1, 0};
  CHECK(!latpt.is_vacuum());
  CHECK(!mono({let(0, -2)}).is_vacuum());

  // Shorter words sort first.
  CHECK(mono({let(0, -5)}) < mono({let(0, -2), let(0, -2)}));
}

TEST_CASE("state container invariants") {
  State s;
  CHECK(s.is_zero());
  Monomial a = mono({let(0, -2)}), b = mono({let(1, -2)});
  s.add(a, Scalar(Rat(1, 2)));
  s.add(b, Scalar(3));
  CHECK(s.size() == 2);
  CHECK(s.coeff(a) == Scalar(Rat(1, 2)));
  CHECK(s.coeff(mono({let(2, -2)})).is_zero());

  // Exact cancellation removes the entry.
  s.add(a, Scalar(Rat(-1, 2)));
  CHECK(s.size() == 1);
  CHECK(s.coeff(a).is_zero());

  State t = Scalar(2) * s;
  CHECK(t.coeff(b) == Scalar(6));
  t.axpy(Scalar(-2), s);
  CHECK(t.is_zero());

  CHECK(State::vacuum() - State::vacuum() == State::zero());
  CHECK(State::vacuum() + State::vacuum() == Scalar(2) * State::vacuum());
}

TEST_CASE("linear operators and super-commutators") {
  // f: shifts tag 0 -> tag 1; g: scales by the mode.
  LinOp f{1, Rat(0), [](const Monomial& m) {
            Monomial out = m;
            for (auto& l : out.word)
              if (l.tag == 0) l.tag = 1;
            return State(out);
          }};
  LinOp g{0, Rat(0), [](const Monomial& m) {
            return Scalar(m.word.empty() ? 0 : m.word[0].mode) * State(m);
          }};
  State probe(mono({let(0, -3)}));
  State fg = f(g(probe)), gf = g(f(probe));
  CHECK(fg == Scalar(-3) * State(mono({let(1, -3)})));
  CHECK(super_commutator(f, g, probe) == fg - gf);
  CHECK(super_commutator(f, g, probe).is_zero());

  // Odd-odd commutator uses the plus sign.
  CHECK(super_commutator(f, f, probe) == Scalar(2) * f(f(probe)));
}

TEST_CASE("tensor product assembly") {
  State a(mono({let(0, -2)}), Scalar(2));
  State b(mono({let(1, -2)}), Scalar(Rat(1, 2)));
  TensorState t = TensorState::product({&a, &b});
  REQUIRE(t.terms().size() == 1);
  CHECK(t.terms().begin()->second == Scalar(1));
  CHECK(t.terms().begin()->first[0] == mono({let(0, -2)}));
  CHECK(t.terms().begin()->first[1] == mono({let(1, -2)}));

  State sum = a + b;
  TensorState t2 = TensorState::product({&sum, &sum});
  CHECK(t2.terms().size() == 4);
}

TEST_CASE("tensor_apply Koszul signs") {
  // All monomials with a nonempty word are odd.
  ParityFn parity = [](const Monomial& m) { return m.word.empty() ? 0 : 1; };
  LinOp oddop{1, Rat(0), [](const Monomial& m) {
                Monomial out = m;
                out.word.push_back(let(9, -1));
                return State(out);
              }};
  Monomial x = mono({let(0, -2)});
  TensorState t(TensorMono{x, x});

  // Acting in slot 1 passes the odd slot-0 factor: sign -1.
  TensorState r1 = tensor_apply({{1, &oddop}}, t, parity);
  REQUIRE(r1.terms().size() == 1);
  CHECK(r1.terms().begin()->second == Scalar(-1));

  // Acting in slot 0 passes nothing: sign +1.
  TensorState r0 = tensor_apply({{0, &oddop}}, t, parity);
  CHECK(r0.terms().begin()->second == Scalar(1));

  // (f (x) g)(a (x) b): both slots at once, g applied first.
  TensorState rb = tensor_apply({{0, &oddop}, {1, &oddop}}, t, parity);
  REQUIRE(rb.terms().size() == 1);
  CHECK(rb.terms().begin()->second == Scalar(-1));
}

TEST_CASE("koszul_swap12") {
  ParityFn parity = [](const Monomial& m) { return m.word.empty() ? 0 : 1; };
  Monomial x = mono({let(0, -2)}), y = mono({let(1, -3)});
  TensorState t(TensorMono{x, y});
  TensorState sw = koszul_swap12(t, parity);
  REQUIRE(sw.terms().size() == 1);
  CHECK(sw.terms().begin()->first[0] == y);
  CHECK(sw.terms().begin()->first[1] == x);
  CHECK(sw.terms().begin()->second == Scalar(-1));  // odd * odd

  // Even in slot 0: no sign.
  TensorState u(TensorMono{Monomial{}, y});
  CHECK(koszul_swap12(u, parity).terms().begin()->second == Scalar(1));

  // Involution up to sign: P^2 = id.
  CHECK(koszul_swap12(sw, parity) == t);
}
