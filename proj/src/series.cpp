#include "orthocount/series.hpp"

#include <sstream>
#include <stdexcept>

namespace orthocount {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, const Rational& c) {
  TruncatedSeries s(order);
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  if (k <= order) s.c_[static_cast<size_t>(k)] = c;
  return s;
}

const Rational& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::coeff: index out of range");
  return c_[static_cast<size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, const Rational& c) {
  if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::set_coeff: index out of range");
  c_[static_cast<size_t>(n)] = c;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TruncatedSeries: truncation orders differ");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = -c_[n];
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_same_order(o);
  for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_same_order(o);
  for (int n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same_order(b);
  TruncatedSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
  for (int n = 0; n <= s.order_; ++n) s.c_[n] *= c;
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero())
    throw std::domain_error("TruncatedSeries::inverse: zero constant term");
  TruncatedSeries r(order_);
  Rational inv0 = Rational(1) / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  TruncatedSeries r(order_);
  for (int n = 0; n + k <= order_; ++n) r.c_[n + k] = c_[n];
  return r;
}

TruncatedSeries TruncatedSeries::pow(const Integer& e) const {
  if (e < 0) throw std::invalid_argument("TruncatedSeries::pow: negative exponent");
  TruncatedSeries result = TruncatedSeries::one(order_);
  TruncatedSeries base = *this;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

int TruncatedSeries::first_difference(const TruncatedSeries& o) const {
  check_same_order(o);
  for (int n = 0; n <= order_; ++n)
    if (c_[n] != o.c_[n]) return n;
  return -1;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  for (int n = 0; n <= order_; ++n) {
    if (n) os << ", ";
    os << c_[n].str();
  }
  return os.str();
}

TruncatedSeries expand_product(const std::vector<ProductFactor>& factors, int order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("expand_product: sign must be +-1");
    if (f.z_power != 1 && f.z_power != 2) throw std::invalid_argument("expand_product: z_power must be 1 or 2");
    if (f.power == 0 || f.scale.is_zero()) continue;
    // (1 + s*c*z^k)^m = sum_j C(m,j) (s*c)^j z^{jk}
    TruncatedSeries factor(order);
    Rational term_base = f.sign < 0 ? -f.scale : f.scale;
    Rational t(1);
    for (int j = 0; j * f.z_power <= order; ++j) {
      factor.set_coeff(j * f.z_power, Rational(binomial(f.power, j)) * t);
      t *= term_base;
    }
    acc = acc * factor;
  }
  return acc;
}

namespace {

// prod_v (1 + v Z) truncated at Z^count from the power sums p_s = sum_v v^s,
// via Newton's identity t e_t = sum_{s=1..t} (-1)^{s-1} p_s e_{t-s}.
std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& p, int count) {
  std::vector<Rational> e(static_cast<size_t>(count) + 1, Rational(0));
  e[0] = Rational(1);
  for (int t = 1; t <= count; ++t) {
    Rational acc(0);
    for (int s = 1; s <= t; ++s) {
      Rational term = p[static_cast<size_t>(s)] * e[static_cast<size_t>(t - s)];
      acc += (s % 2 == 1) ? term : -term;
    }
    e[static_cast<size_t>(t)] = acc / Rational(t);
  }
  return e;
}

TruncatedSeries series_from_elementary(const std::vector<Rational>& e, int z_power, long power,
                                       int order) {
  TruncatedSeries base(order);
  for (int t = 0; t * z_power <= order && t < static_cast<int>(e.size()); ++t)
    base.set_coeff(t * z_power, e[static_cast<size_t>(t)]);
  if (power == 1) return base;
  if (power >= 0) return base.pow(Integer(power));
  return base.inverse().pow(Integer(-power));
}

}  // namespace

TruncatedSeries geometric_family_series(int q, int a0, int da, int sign, int z_power,
                                        long power, int order) {
  if (q < 2) throw std::invalid_argument("geometric_family_series: q must be >= 2");
  if (da < 1) throw std::invalid_argument("geometric_family_series: da must be >= 1");
  if (a0 < 0) throw std::invalid_argument("geometric_family_series: a0 must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("geometric_family_series: bad sign");
  int count = order / z_power;
  // values v_j = sign q^{-a0} (q^{-da})^j, so p_s = sign^s q^{-a0 s}/(1 - q^{-da s})
  std::vector<Rational> p(static_cast<size_t>(count) + 1, Rational(0));
  for (int s = 1; s <= count; ++s) {
    Rational ps = q_power(q, -static_cast<long>(a0) * s) /
                  (Rational(1) - q_power(q, -static_cast<long>(da) * s));
    if (sign < 0 && s % 2 == 1) ps = -ps;
    p[static_cast<size_t>(s)] = ps;
  }
  return series_from_elementary(elementary_from_power_sums(p, count), z_power, power, order);
}

TruncatedSeries cross_family_series(int q, long power, int order, int start_m) {
  if (q < 2) throw std::invalid_argument("cross_family_series: q must be >= 2");
  if (start_m < 1) throw std::invalid_argument("cross_family_series: start_m must be >= 1");
  int count = order / 2;
  // values -q^{-(2m+1)} with multiplicity m for m >= start_m:
  //   p_s = (-1)^s sum_{m >= M} m q^{-s(2m+1)}
  //       = (-1)^s q^{-s} y^M (M - (M-1) y)/(1-y)^2,  y = q^{-2s}
  std::vector<Rational> p(static_cast<size_t>(count) + 1, Rational(0));
  long M = start_m;
  for (int s = 1; s <= count; ++s) {
    Rational y = q_power(q, -2L * s);
    Rational one_minus_y = Rational(1) - y;
    Rational ps = q_power(q, -static_cast<long>(s)) * y.pow(M) *
                  (Rational(M) - Rational(M - 1) * y) / (one_minus_y * one_minus_y);
    if (s % 2 == 1) ps = -ps;
    p[static_cast<size_t>(s)] = ps;
  }
  return series_from_elementary(elementary_from_power_sums(p, count), 2, power, order);
}

GradedSeries::GradedSeries(TruncatedSeries plus, TruncatedSeries minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.order() != minus_.order())
    throw std::invalid_argument("GradedSeries: component orders differ");
}

GradedSeries GradedSeries::one(int order) {
  return GradedSeries(TruncatedSeries::one(order), TruncatedSeries(order));
}

GradedSeries GradedSeries::ungraded(TruncatedSeries plus) {
  int n = plus.order();
  return GradedSeries(std::move(plus), TruncatedSeries(n));
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  return GradedSeries(a.plus_ + b.plus_, a.minus_ + b.minus_);
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  return GradedSeries(a.plus_ * b.plus_ + a.minus_ * b.minus_,
                      a.plus_ * b.minus_ + a.minus_ * b.plus_);
}

GradedSeries GradedSeries::pow(const Integer& e) const {
  if (e < 0) throw std::invalid_argument("GradedSeries::pow: negative exponent");
  GradedSeries result = GradedSeries::one(order());
  if (e == 0) return result;
  GradedSeries base = *this;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

}  // namespace orthocount
