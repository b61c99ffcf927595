#include "cglab/rational.hpp"

#include <ostream>

namespace cglab {

void Rational::canonicalize() {
  if (sgn(q_.get_den()) == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

void Rational::submul(const Rational& f, const Rational& y) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), f.q_.get_mpq_t(), y.q_.get_mpq_t());
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::addmul(const Rational& f, const Rational& y) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), f.q_.get_mpq_t(), y.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer floor_div(const Integer& p, const Integer& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return out;
}

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cglab
