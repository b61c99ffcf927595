// Exact rational scalar used throughout the solver. Backed by GMP's mpq,
// kept canonical (lowest terms, positive denominator) at all times.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cglab {

using Integer = mpz_class;

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(static_cast<long>(n)) {}
  Rational(long n) : q_(n) {}
  Rational(long long n) : q_(static_cast<long>(n)) {
    static_assert(sizeof(long long) == sizeof(long));
  }
  Rational(const Integer& n) : q_(n) {}

  // p/q in lowest terms; q must be nonzero.
  Rational(long num, long den) : q_(num, den) { canonicalize(); }
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    canonicalize();
  }

  // Parses "p/q" or a bare integer.
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Exact floor/ceil, rounding toward -inf / +inf.
  Integer floor() const;
  Integer ceil() const;

  // Nearest double (GMP rounds toward zero); scores only, never solver paths.
  double to_double() const { return q_.get_d(); }

  // "p/q", or "p" when the denominator is 1. Round-trips through parse().
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  // *this -= f * y / *this += f * y without allocating a temporary.
  // Simplex pivot and dot-product kernels.
  void submul(const Rational& f, const Rational& y);
  void addmul(const Rational& f, const Rational& y);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  void canonicalize();

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Exact floor of p/q for standalone integers, rounding toward -inf.
Integer floor_div(const Integer& p, const Integer& q);

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes);
inline std::uint64_t fnv1a(std::string_view bytes) {
  return fnv1a(1469598103934665603ull, bytes);
}

}  // namespace cglab

namespace Eigen {

template <>
struct NumTraits<cglab::Rational> : GenericNumTraits<cglab::Rational> {
  using Real = cglab::Rational;
  using NonInteger = cglab::Rational;
  using Nested = cglab::Rational;
  using Literal = long;

  static inline Real epsilon() { return {}; }
  static inline Real dummy_precision() { return {}; }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
