#include <doctest.h>

#include <sstream>

#include "cglab/ip.hpp"

using namespace cglab;

TEST_CASE("jeroslow instance layout") {
  const IntegerProgram ip = make_jeroslow(3);
  CHECK(ip.num_vars() == 3);
  CHECK(ip.num_constraints() == 2);
  for (Index j = 0; j < 3; ++j) {
    CHECK(ip.objective()[j] == Rational(0));
    CHECK(ip.matrix()(0, j) == Rational(2));
    CHECK(ip.matrix()(1, j) == Rational(-2));
    CHECK((*ip.upper_bounds())[j] == 1);
  }
  CHECK(ip.rhs()[0] == Rational(3));
  CHECK(ip.rhs()[1] == Rational(-3));

  CHECK(ip.norm_a11() == Rational(12));
  CHECK(ip.norm_b1() == Rational(6));

  CHECK_THROWS_AS(make_jeroslow(4), std::invalid_argument);
  CHECK_THROWS_AS(make_jeroslow(1), std::invalid_argument);
  CHECK_THROWS_AS(make_jeroslow(-3), std::invalid_argument);
}

TEST_CASE("jeroslow instances are integer infeasible") {
  // Binary box enumeration finds no feasible point for any odd n <= 11.
  for (int n = 3; n <= 11; n += 2) {
    const IntegerProgram ip = make_jeroslow(n);
    const IntVec box = IntVec::Ones(n);
    CHECK(enumerate_integer_points(ip, box).points.empty());
  }
}

TEST_CASE("packing generator is deterministic and keeps the origin feasible") {
  const IntegerProgram a = random_packing_ip(1, 2, 2, 1);
  const IntegerProgram b = random_packing_ip(1, 2, 2, 1);
  std::ostringstream sa, sb;
  write_instance(sa, a);
  write_instance(sb, b);
  CHECK(sa.str() == sb.str());

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const IntegerProgram ip = random_packing_ip(seed, 4, 3, 5);
    for (Index i = 0; i < ip.num_constraints(); ++i) {
      CHECK(ip.rhs()[i] >= Rational(1));  // x = 0 satisfies every row
      for (Index j = 0; j < ip.num_vars(); ++j) {
        CHECK(ip.matrix()(i, j).sign() >= 0);
      }
    }
    for (Index j = 0; j < ip.num_vars(); ++j) {
      CHECK(ip.objective()[j] >= Rational(1));
    }
  }
  CHECK_THROWS_AS(random_packing_ip(1, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("packing feasible set is nonempty and finite under the box") {
  const IntegerProgram ip = random_packing_ip(7, 4, 3, 5);
  IntVec box = IntVec::Constant(4, 20);
  const IntegerPointSet pts = enumerate_integer_points(ip, box);
  CHECK(!pts.points.empty());  // origin at least
  CHECK(pts.points.size() < 21u * 21 * 21 * 21);
  // Every reported point satisfies all rows.
  for (const IntVec& p : pts.points) {
    for (Index i = 0; i < ip.num_constraints(); ++i) {
      Rational lhs;
      for (Index j = 0; j < 4; ++j) lhs += ip.matrix()(i, j) * Rational(p[j]);
      CHECK(lhs <= ip.rhs()[i]);
    }
  }
}

TEST_CASE("enumeration matches an independent nested-loop sweep") {
  const IntegerProgram ip = random_packing_ip(7, 3, 2, 3);
  IntVec box = IntVec::Constant(3, 3);
  const IntegerPointSet pts = enumerate_integer_points(ip, box);

  std::vector<IntVec> expected;
  const std::int64_t cap0 = std::min<std::int64_t>(3, (*ip.upper_bounds())[0]);
  const std::int64_t cap1 = std::min<std::int64_t>(3, (*ip.upper_bounds())[1]);
  const std::int64_t cap2 = std::min<std::int64_t>(3, (*ip.upper_bounds())[2]);
  for (std::int64_t z = 0; z <= cap2; ++z) {
    for (std::int64_t y = 0; y <= cap1; ++y) {
      for (std::int64_t x = 0; x <= cap0; ++x) {
        bool ok = true;
        for (Index i = 0; i < 2 && ok; ++i) {
          const Rational lhs = ip.matrix()(i, 0) * Rational(x) +
                               ip.matrix()(i, 1) * Rational(y) +
                               ip.matrix()(i, 2) * Rational(z);
          ok = lhs <= ip.rhs()[i];
        }
        if (ok) {
          IntVec p(3);
          p << x, y, z;
          expected.push_back(p);
        }
      }
    }
  }
  REQUIRE(pts.points.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(pts.points[i] == expected[i]);
  }
}

TEST_CASE("enumeration respects the m = 0 box and the budget") {
  IntegerProgram free_ip(RatVec::Zero(2), RatMat(0, 2), RatVec(0));
  IntVec box = IntVec::Ones(2);
  CHECK(enumerate_integer_points(free_ip, box).points.size() == 4);

  IntVec huge = IntVec::Constant(2, 100'000);
  CHECK_THROWS_AS(enumerate_integer_points(free_ip, huge, 1000), BudgetError);
}

TEST_CASE("instance text format round-trips bit-exactly") {
  const IntegerProgram ip = random_packing_ip(3, 3, 2, 4);
  std::ostringstream first;
  write_instance(first, ip);

  std::istringstream in(first.str());
  const IntegerProgram back = read_instance(in);
  std::ostringstream second;
  write_instance(second, back);
  CHECK(first.str() == second.str());

  // Rationals, comments, and a boundless instance.
  std::istringstream custom(
      "# tiny example\n"
      "2 1\n"
      "1/2 -3\n"
      "2/3 1\n"
      "5/2\n");
  const IntegerProgram c = read_instance(custom);
  CHECK(c.num_vars() == 2);
  CHECK(c.objective()[0] == Rational(1, 2));
  CHECK(c.matrix()(0, 0) == Rational(2, 3));
  CHECK(c.rhs()[0] == Rational(5, 2));
  CHECK(!c.upper_bounds());

  std::istringstream bad("1 1\n1\n1\n");
  CHECK_THROWS_AS(read_instance(bad), std::invalid_argument);

  // Constraint-free instances round-trip too (blank rhs line).
  IntVec free_bounds = IntVec::Constant(2, 3);
  IntegerProgram free_ip(RatVec::Ones(2), RatMat(0, 2), RatVec(0),
                         free_bounds);
  std::ostringstream fs;
  write_instance(fs, free_ip);
  std::istringstream fin(fs.str());
  const IntegerProgram free_back = read_instance(fin);
  CHECK(free_back.num_constraints() == 0);
  REQUIRE(free_back.upper_bounds().has_value());
  CHECK((*free_back.upper_bounds())[1] == 3);
  std::ostringstream fs2;
  write_instance(fs2, free_back);
  CHECK(fs.str() == fs2.str());
}

TEST_CASE("norm accessors agree with elementwise summation") {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const IntegerProgram ip = random_packing_ip(seed, 4, 3, 6);
    Rational a11;
    for (Index j = 0; j < ip.num_vars(); ++j) a11 += l1_norm(ip.column(j));
    CHECK(ip.norm_a11() == a11);

    Rational b1;
    for (Index i = 0; i < ip.num_constraints(); ++i) b1 += abs(ip.rhs()[i]);
    CHECK(ip.norm_b1() == b1);
  }
}
