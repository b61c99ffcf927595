#include <doctest.h>

#include <sstream>

#include "cglab/rational.hpp"
#include "cglab/rng.hpp"

using namespace cglab;

TEST_CASE("rationals stay in lowest terms with positive denominators") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7).num() == 0);
  CHECK(Rational(0, 7).den() == 1);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("floor rounds toward minus infinity") {
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(3, 2).floor() == 1);
  CHECK(Rational(-4, 2).floor() == -2);
  CHECK(Rational(7).floor() == 7);
  CHECK(Rational(-3, 2).ceil() == -1);

  // 1000 random p/q, negative and positive, against integer floor division.
  Rng rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const long p = static_cast<long>(rng.range(-500, 500));
    const long q = static_cast<long>(rng.range(1, 60));
    const Rational r(p, q);
    CHECK(r.floor() == floor_div(Integer(p), Integer(q)));
  }
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("-42").str() == "-42");
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);

  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r(static_cast<long>(rng.range(-9999, 9999)),
                     static_cast<long>(rng.range(1, 997)));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("arithmetic identities") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(static_cast<long>(rng.range(-50, 50)),
                     static_cast<long>(rng.range(1, 20)));
    const Rational b(static_cast<long>(rng.range(-50, 50)),
                     static_cast<long>(rng.range(1, 20)));
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a * b / b == a);
    Rational acc = a;
    acc.submul(b, Rational(2));  // acc = a - 2b
    CHECK(acc == a - b - b);
    acc.addmul(b, Rational(2));
    CHECK(acc == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering and stream output") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}
