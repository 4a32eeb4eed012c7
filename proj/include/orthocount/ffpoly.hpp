#pragma once

#include <string>
#include <vector>

#include "orthocount/rational.hpp"

namespace orthocount {

// The finite field F_q, q = p^k a prime power. Elements are integers in
// [0, q): the base-p digit encoding of the residue polynomial, so 0 and 1
// are the additive and multiplicative identities. Arithmetic is realized as
// F_p[x]/(m(x)) with m the least monic irreducible of degree k (m(x) = x for
// k = 1) and cached in full tables. Instances are immutable and shareable.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  // Coefficients of the defining modulus, lowest degree first.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int inv(int a) const;
  int pow(int a, long e) const;

 private:
  int idx(int a, int b) const { return check(a) * q_ + check(b); }
  int check(int a) const;
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

// Shared registry of fields; returned references stay valid for the
// lifetime of the process. Thread-safe.
const FiniteField& GF(int q);

bool is_prime_power(int q);

// Polynomial over F_q, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(const FiniteField& F) : F_(&F) {}
  Poly(const FiniteField& F, std::vector<int> coeffs);

  const FiniteField& field() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
  }
  int constant_term() const { return coeff(0); }
  const std::vector<int>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mod(const Poly& divisor) const;

  bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator<(const Poly& o) const;  // degree, then coefficients high-to-low

  std::string str() const;  // e.g. "t^3+t+1", "t^2+2t+2"

 private:
  void normalize();
  const FiniteField* F_;
  std::vector<int> c_;
};

bool divides(const Poly& d, const Poly& f);

// f*(t) = a0^{-1} t^d f(1/t) for monic f with f(0) != 0.
Poly dual(const Poly& f);

// All monic irreducible polynomials of degree d over F_q with nonzero
// constant term, sorted, memoized. Requires q^d within desk scale.
const std::vector<Poly>& enumerate_irreducibles(int q, int d);

// Irreducibility by trial division against irreducibles of degree <= deg/2.
// The polynomial must have a nonzero constant term.
bool is_irreducible(const Poly& f);

// Number of all monic irreducibles of degree d over F_q (including t when
// d = 1): (1/d) sum_{e|d} mu(e) q^{d/e}.
Integer irreducible_count_formula(int q, int d);

enum class CountMethod {
  Enumeration,  // brute force over enumerate_irreducibles (the oracle)
  OrbitCount,   // exact Galois-orbit recursion, no enumeration
  Auto,         // Enumeration while q^d is small, OrbitCount beyond
};

// N*(q; d): monic irreducible self-dual polynomials of degree d with nonzero
// constant term. M*(q; d): unordered dual pairs {g, g*}, g != g*, of monic
// irreducibles of degree d with nonzero constant term.
Integer count_N_star(int q, int d, CountMethod method = CountMethod::Auto);
Integer count_M_star(int q, int d, CountMethod method = CountMethod::Auto);

}  // namespace orthocount
