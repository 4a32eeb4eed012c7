#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthocount {

using Integer = mpz_class;

inline Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer int_pow(long base, unsigned long exp) {
  return int_pow(Integer(base), exp);
}

// Generalized binomial coefficient C(m, j) for any integer m and j >= 0.
// Always an integer; computed by the exact stepwise recurrence.
inline Integer binomial(long m, long j) {
  if (j < 0) return 0;
  Integer acc = 1;
  for (long t = 1; t <= j; ++t) {
    acc *= Integer(m - t + 1);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(t));
  }
  return acc;
}

// Exact rational number. Always in lowest terms with positive denominator;
// every operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                             // NOLINT
  Rational(const Integer& n) : v_(n) {}                  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Exact integer value; throws if not an integer.
  Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return v_.get_num();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return v_ < 0 ? -*this : *this; }

  // Integer exponent, negative allowed for nonzero values.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: 0^negative");
      return Rational(Integer(1), Integer(1)) / pow(-e);
    }
    Rational r(int_pow(num(), static_cast<unsigned long>(e)),
               int_pow(den(), static_cast<unsigned long>(e)));
    return r;
  }

  // "num/den", or just "num" for integers.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// q^e for integer e of either sign.
inline Rational q_power(int q, long e) {
  if (e >= 0) return Rational(int_pow(q, static_cast<unsigned long>(e)));
  return Rational(Integer(1), int_pow(q, static_cast<unsigned long>(-e)));
}

}  // namespace orthocount
