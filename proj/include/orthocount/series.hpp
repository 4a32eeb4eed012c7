#pragma once

#include <vector>

#include "orthocount/rational.hpp"

namespace orthocount {

// Power series in z modulo z^(order+1), exact rational coefficients.
// Immutable in normal use; all arithmetic respects the truncation order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  static TruncatedSeries constant(int order, const Rational& c);
  static TruncatedSeries one(int order) { return constant(order, Rational(1)); }
  static TruncatedSeries monomial(int order, int k, const Rational& c);

  int order() const { return order_; }
  const Rational& coeff(int n) const;
  void set_coeff(int n, const Rational& c);

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { a += b; return a; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { a -= b; return a; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& o) { *this = *this * o; return *this; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s);

  // Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;

  // Multiplication by z^k (coefficients shift up, truncation applies).
  TruncatedSeries shifted(int k) const;

  // Nonnegative integer power by binary exponentiation.
  TruncatedSeries pow(const Integer& e) const;

  bool operator==(const TruncatedSeries& o) const = default;

  // First index where the two series differ, or -1 if equal. Orders must match.
  int first_difference(const TruncatedSeries& o) const;

  std::string str() const;  // comma-separated coefficient list

 private:
  void check_same_order(const TruncatedSeries& o) const;
  int order_;
  std::vector<Rational> c_;
};

// One factor (1 + sign * scale * z^z_power)^power of a finite product.
struct ProductFactor {
  int sign;         // +1 or -1
  int z_power;      // 1 or 2
  Rational scale;   // typically q^{-a}
  long power;       // integer exponent, either sign
};

// Exact truncation of the product of the given factors.
TruncatedSeries expand_product(const std::vector<ProductFactor>& factors, int order);

// Exact truncation of the infinite product
//   prod_{j >= 0} (1 + sign * z^z_power / q^{a0 + j*da})^power,
// computed by elementary-symmetric-function summation from the exact power
// sums of the geometric value sequence (never by a truncated partial
// product, whose coefficients would differ from the limit).
TruncatedSeries geometric_family_series(int q, int a0, int da, int sign, int z_power,
                                        long power, int order);

// Exact truncation of prod over 1 <= i < j with i + j odd of
// (1 - z^2/q^{i+j})^power; the pair (i, j) with i + j = 2m + 1 occurs m
// times. start_m > 1 drops the leading factors (used to cross-check the
// closed form against literal multiplication).
TruncatedSeries cross_family_series(int q, long power, int order, int start_m = 1);

// Pair of series graded by the sign group {+, -}: multiplication follows
// (a+, a-)(b+, b-) = (a+b+ + a-b-, a+b- + a-b+).
class GradedSeries {
 public:
  GradedSeries(TruncatedSeries plus, TruncatedSeries minus);
  static GradedSeries one(int order);
  static GradedSeries ungraded(TruncatedSeries plus);  // minus component zero

  int order() const { return plus_.order(); }
  const TruncatedSeries& plus() const { return plus_; }
  const TruncatedSeries& minus() const { return minus_; }
  const TruncatedSeries& component(int sign) const { return sign >= 0 ? plus_ : minus_; }
  TruncatedSeries total() const { return plus_ + minus_; }

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries& operator*=(const GradedSeries& o) { *this = *this * o; return *this; }

  GradedSeries pow(const Integer& e) const;

  bool operator==(const GradedSeries& o) const = default;

 private:
  TruncatedSeries plus_, minus_;
};

}  // namespace orthocount
