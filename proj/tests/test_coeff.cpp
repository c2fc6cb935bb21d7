#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "logva/coeff.hpp"

using namespace logva;

TEST_CASE("scalar construction and queries") {
  Scalar z;
  CHECK(z.is_zero());
  CHECK(z.is_rational());
  CHECK(z.rational() == Rat(0));
  CHECK(z.degree() == -1);
  CHECK(z.str() == "0");

  Scalar two(2);
  CHECK(!two.is_zero());
  CHECK(two.is_rational());
  CHECK(two.rational() == Rat(2));
  CHECK(two.degree() == 0);

  Scalar half(Rat(1, 2));
  CHECK(half.str() == "1/2");

  Scalar b = Scalar::beta();
  CHECK(!b.is_rational());
  CHECK(b.degree() == 1);
  CHECK(b.coeff(0) == Rat(0));
  CHECK(b.coeff(1) == Rat(1));
  CHECK(b.coeff(7) == Rat(0));
  CHECK_THROWS_AS(b.rational(), std::logic_error);
}

TEST_CASE("scalar arithmetic in Q[beta]") {
  Scalar b = Scalar::beta();
  Scalar p = Scalar(3) + Scalar(2) * b;  // 3 + 2b
  CHECK(p.coeff(0) == Rat(3));
  CHECK(p.coeff(1) == Rat(2));

  Scalar q = p * p;  // 9 + 12b + 4b^2
  CHECK(q.degree() == 2);
  CHECK(q.coeff(0) == Rat(9));
  CHECK(q.coeff(1) == Rat(12));
  CHECK(q.coeff(2) == Rat(4));

  // Cancellation trims back to the canonical form.
  Scalar d = q - q;
  CHECK(d.is_zero());
  Scalar e = p - Scalar(2) * b;
  CHECK(e.is_rational());
  CHECK(e.rational() == Rat(3));

  CHECK(-p + p == Scalar(0));
  CHECK((p / Rat(2)).coeff(1) == Rat(1));
  CHECK_THROWS_AS(p / Rat(0), std::domain_error);

  // Equality and strict ordering are well defined.
  CHECK(p == Scalar(3) + b + b);
  CHECK(p != q);
  CHECK((Scalar(1) < b));  // lower degree sorts first
}

TEST_CASE("degree cap raises cap_error") {
  Scalar b = Scalar::beta();
  Scalar b2 = b * b;
  Scalar b4 = b2 * b2;
  CHECK(b4.degree() == 4);
  CHECK_THROWS_AS(b4 * b, cap_error);
}

TEST_CASE("pin_beta substitutes a rational value") {
  Scalar b = Scalar::beta();
  Scalar p = Scalar(1) + Scalar(2) * b + Scalar(3) * b * b;
  Scalar at2 = p.pin_beta(Rat(2));
  CHECK(at2.is_rational());
  CHECK(at2.rational() == Rat(17));
  CHECK(p.pin_beta(Rat(0)).rational() == Rat(1));
  CHECK(p.pin_beta(Rat(-1, 2)).rational() == Rat(3, 4));
}

TEST_CASE("string rendering") {
  Scalar b = Scalar::beta();
  Scalar p = Scalar(Rat(1, 2)) + Scalar(Rat(-1, 6)) * b;
  CHECK(p.str() == "1/2 + -1/6*b");
  CHECK(p.str(true) == "1/2 + -1/6*β");
  CHECK((b * b).str() == "1*b^2");
}

TEST_CASE("combinatorial helpers") {
  CHECK(harmonic(0) == Rat(0));
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(3) == Rat(11, 6));
  CHECK(harmonic(5) == Rat(137, 60));

  CHECK(factorial(0) == Rat(1));
  CHECK(factorial(5) == Rat(120));

  CHECK(binomial(4, 2) == Rat(6));
  CHECK(binomial(4, 0) == Rat(1));
  CHECK(binomial(3, 5) == Rat(0));
  CHECK(binomial(-1, 3) == Rat(-1));
  CHECK(binomial(-2, 2) == Rat(3));
  CHECK(binomial(7, -1) == Rat(0));
}
