#include "orthocount/degree_sums.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orthocount {

namespace {

Integer even_torus_product(int q, int upto) {
  // prod_{i=1}^{upto} (q^{2i} - 1)
  Integer r = 1;
  for (int i = 1; i <= upto; ++i) r *= int_pow(q, static_cast<unsigned long>(2 * i)) - 1;
  return r;
}

void require_prime_power(int q, const char* who) {
  if (!is_prime_power(q)) throw std::invalid_argument(std::string(who) + ": q must be a prime power");
}

void require_type(int type, const char* who) {
  if (type != 1 && type != -1) throw std::invalid_argument(std::string(who) + ": type must be +1 or -1");
}

// sum over partitions of m of delta_U(lambda, 2d) z^{m d}, graded by the
// parity of m (each self-dual slot flips the type sign with its m_f).
GradedSeries u_slot_graded(int q, int d, int order) {
  TruncatedSeries even(order), odd(order);
  for (int m = 0; m * d <= order; ++m) {
    Rational acc(0);
    for (const Partition& lam : Partition::of(m)) acc += delta_u(lam, 2 * d, q);
    (m % 2 == 0 ? even : odd).set_coeff(m * d, acc);
  }
  return GradedSeries(std::move(even), std::move(odd));
}

TruncatedSeries gl_slot(int q, int d, int order) {
  TruncatedSeries s(order);
  for (int m = 0; m * d <= order; ++m) {
    Rational acc(0);
    for (const Partition& lam : Partition::of(m)) acc += delta_gl(lam, d, q);
    s.set_coeff(m * d, acc);
  }
  return s;
}

// prod_d (U_d)^{N*(q;2d)} (GL_d)^{M*(q;d)} with the type-sign grading.
GradedSeries poly_slot_factor_dp(int q, int order) {
  GradedSeries acc = GradedSeries::one(order);
  for (int d = 1; d <= order; ++d) {
    Integer nstar = count_N_star(q, 2 * d);
    if (nstar > 0) acc *= u_slot_graded(q, d, order).pow(nstar);
    Integer mstar = count_M_star(q, d);
    if (mstar > 0) acc *= GradedSeries::ungraded(gl_slot(q, d, order)).pow(mstar);
  }
  return acc;
}

// Same product taken over the actual enumerated polynomials, one factor per
// self-dual f and per dual pair {g, g*}. Independent of the N*/M* counts.
GradedSeries poly_slot_factor_explicit(int q, int order) {
  GradedSeries acc = GradedSeries::one(order);
  for (int d = 1; d <= order; ++d) {
    GradedSeries u = u_slot_graded(q, d, order);
    for (const Poly& f : enumerate_irreducibles(q, 2 * d))
      if (f == dual(f)) acc *= u;
    GradedSeries gl = GradedSeries::ungraded(gl_slot(q, d, order));
    const auto& irr = enumerate_irreducibles(q, d);
    for (const Poly& g : irr) {
      Poly gs = dual(g);
      if (g == gs || gs < g) continue;
      if (!std::binary_search(irr.begin(), irr.end(), gs))
        throw std::logic_error("poly_slot_factor_explicit: dual missing from the irreducible list");
      acc *= gl;
    }
  }
  return acc;
}

GradedSeries poly_slot_factor(int q, int order, SigmaRoute route) {
  return route == SigmaRoute::GradedDP ? poly_slot_factor_dp(q, order)
                                       : poly_slot_factor_explicit(q, order);
}

// The unipotent +-1-eigenvalue factor of the SO degree-sum generating
// function: sum_{Lambda in S} delta z^|Lambda| for even q, T^2 + G^2 for odd.
GradedSeries so_unipotent_factor(int q, int order) {
  if (q % 2 == 0) return graded_S_sum(q, order);
  GradedSeries t = graded_T_sum(q, order);
  GradedSeries g = GradedSeries::ungraded(series_G(q, order, SeriesRoute::SymbolSum));
  return t * t + g * g;
}

GradedSeries o_unipotent_factor(int q, int order) {
  GradedSeries t = graded_T_sum(q, order);
  return q % 2 == 0 ? t : t * t;
}

// Product form of the polynomial-slot factor:
// (1-z)^{-1} prod (1 - z/q^{2i-1})^e / (1 - z^2/q^{2i}) prod_{i<j odd} (1 - z^2/q^{i+j})^e.
TruncatedSeries oldresult_rhs(int q, int order) {
  long e = e_of_q(q);
  return expand_product({{-1, 1, Rational(1), -1}}, order) *
         geometric_family_series(q, 1, 2, -1, 1, e, order) *
         geometric_family_series(q, 2, 2, -1, 2, -1, order) *
         cross_family_series(q, e, order);
}

// (1-z)^{-1} prod (1 + sigma z/q^{2i-1})^e / (1 - z^2/q^{2i}), sigma = +-1.
TruncatedSeries fgs_combined_branch(int q, int order, int sigma) {
  long e = e_of_q(q);
  return expand_product({{-1, 1, Rational(1), -1}}, order) *
         geometric_family_series(q, 1, 2, sigma, 1, e, order) *
         geometric_family_series(q, 2, 2, -1, 2, -1, order);
}

// prod_{i >= 1} (1 - z/q^{i-1})^{-1}
TruncatedSeries euler_rhs(int q, int order) {
  return geometric_family_series(q, 0, 1, -1, 1, -1, order);
}

TruncatedSeries euler_lhs(int q, int order) {
  // sum_n z^n / prod_{i=1}^n (1 - q^{-i})
  TruncatedSeries s(order);
  Rational denom(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) denom *= Rational(1) - q_power(q, -n);
    s.set_coeff(n, Rational(1) / denom);
  }
  return s;
}

}  // namespace

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::O: os << "O"; break;
    case GroupKind::SO: os << "SO"; break;
    case GroupKind::Sp: os << "Sp"; break;
  }
  if (kind != GroupKind::Sp) os << (type > 0 ? "+" : "-");
  os << "(" << 2 * n << "," << q << ")";
  return os.str();
}

Integer group_order(const GroupSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("group_order: n must be >= 1");
  require_prime_power(spec.q, "group_order");
  int q = spec.q;
  int n = spec.n;
  if (spec.kind == GroupKind::Sp) {
    return int_pow(q, static_cast<unsigned long>(n) * n) * even_torus_product(q, n);
  }
  require_type(spec.type, "group_order");
  Integer o = 2 * int_pow(q, static_cast<unsigned long>(n) * (n - 1)) *
              (int_pow(q, static_cast<unsigned long>(n)) - spec.type) * even_torus_product(q, n - 1);
  if (spec.kind == GroupKind::SO) {
    if (o % 2 != 0) throw std::logic_error("group_order: odd orthogonal order");
    o /= 2;
  }
  return o;
}

int SemisimpleDatum::weight() const {
  int w = m_plus() + m_minus();
  for (const auto& s : unitary) w += s.lambda.size() * s.f.degree() / 2;
  for (const auto& s : linear) w += s.lambda.size() * s.g.degree();
  return w;
}

int type_sign(const SemisimpleDatum& datum) {
  int t = datum.xi_plus.defect_class() * datum.xi_minus.defect_class();
  for (const auto& s : datum.unitary)
    if (s.lambda.size() % 2 != 0) t = -t;
  return t;
}

Integer P_O(const SemisimpleDatum& datum, int q) {
  Integer r = 1;
  for (const auto& s : datum.unitary) {
    int half_deg = s.f.degree() / 2;
    for (int i = 1; i <= s.lambda.size(); ++i) {
      Integer f = int_pow(q, static_cast<unsigned long>(i) * half_deg);
      r *= (i % 2 == 0) ? Integer(f - 1) : Integer(f + 1);
    }
  }
  for (const auto& s : datum.linear) {
    for (int i = 1; i <= s.lambda.size(); ++i)
      r *= int_pow(q, static_cast<unsigned long>(i) * s.g.degree()) - 1;
  }
  auto orth_tail = [&](int m, int eta) {
    if (m == 0) return;
    r *= int_pow(q, static_cast<unsigned long>(m)) - eta;
    r *= even_torus_product(q, m - 1);
  };
  orth_tail(datum.m_plus(), datum.xi_plus.defect_class());
  orth_tail(datum.m_minus(), datum.xi_minus.defect_class());
  return r;
}

Integer P_Sp(const SemisimpleDatum& datum, int q) {
  Integer r = 1;
  for (const auto& s : datum.unitary) {
    int half_deg = s.f.degree() / 2;
    for (int i = 1; i <= s.lambda.size(); ++i) {
      Integer f = int_pow(q, static_cast<unsigned long>(i) * half_deg);
      r *= (i % 2 == 0) ? Integer(f - 1) : Integer(f + 1);
    }
  }
  for (const auto& s : datum.linear) {
    for (int i = 1; i <= s.lambda.size(); ++i)
      r *= int_pow(q, static_cast<unsigned long>(i) * s.g.degree()) - 1;
  }
  int mp = datum.m_plus();
  if (mp > 0) {
    r *= int_pow(q, static_cast<unsigned long>(mp)) - datum.xi_plus.defect_class();
    r *= even_torus_product(q, mp - 1);
  }
  r *= even_torus_product(q, datum.m_minus());  // type B tail at t-1
  return r;
}

Integer sigma_O(int n, int q, int type, SigmaRoute route) {
  if (n < 1) throw std::invalid_argument("sigma_O: n must be >= 1");
  require_prime_power(q, "sigma_O");
  require_type(type, "sigma_O");
  GradedSeries total = poly_slot_factor(q, n, route) * o_unipotent_factor(q, n);
  Rational c = total.component(type).coeff(n);
  Rational sigma = c * Rational(2) * Rational(Integer(int_pow(q, static_cast<unsigned long>(n)) - type)) *
                   Rational(even_torus_product(q, n - 1));
  return sigma.to_integer();
}

Integer sigma_SO(int n, int q, int type, SigmaRoute route) {
  if (n < 1) throw std::invalid_argument("sigma_SO: n must be >= 1");
  require_prime_power(q, "sigma_SO");
  require_type(type, "sigma_SO");
  GradedSeries total = poly_slot_factor(q, n, route) * so_unipotent_factor(q, n);
  Rational c = total.component(type).coeff(n);
  Rational sigma = c * Rational(Integer(int_pow(q, static_cast<unsigned long>(n)) - type)) *
                   Rational(even_torus_product(q, n - 1));
  return sigma.to_integer();
}

Integer sigma_Sp(int n, int q, SigmaRoute route) {
  if (n < 0) throw std::invalid_argument("sigma_Sp: n must be >= 0");
  require_prime_power(q, "sigma_Sp");
  if (q % 2 == 0)
    throw std::invalid_argument("sigma_Sp: q must be odd (the symplectic class data needs t+1 != t-1)");
  if (n == 0) return 1;
  TruncatedSeries total = poly_slot_factor(q, n, route).total() *
                          series_T(q, n, SeriesRoute::SymbolSum) *
                          series_W(q, n, SeriesRoute::SymbolSum);
  Rational sigma = total.coeff(n) * Rational(even_torus_product(q, n));
  return sigma.to_integer();
}

TypedSeriesPair fgs_involution_series(FgsKind kind, int q, int order) {
  require_prime_power(q, "fgs_involution_series");
  long e = e_of_q(q);
  Rational half(Integer(1), Integer(2));
  switch (kind) {
    case FgsKind::OOddQ:
    case FgsKind::OEvenQ: {
      bool want_odd = (kind == FgsKind::OOddQ);
      if (want_odd != (q % 2 == 1))
        throw std::invalid_argument("fgs_involution_series: parity mismatch between kind and q");
      TruncatedSeries a = half * (expand_product({{-1, 1, Rational(q), -1}}, order) *
                                  geometric_family_series(q, 0, 2, +1, 1, e, order) *
                                  geometric_family_series(q, 0, 2, -1, 2, -1, order));
      TruncatedSeries b = half * (geometric_family_series(q, 1, 2, +1, 1, e, order) *
                                  geometric_family_series(q, 0, 2, -1, 2, -1, order));
      return {a + b, a - b};
    }
    case FgsKind::SO: {
      TruncatedSeries a = expand_product({{-1, 2, Rational(1), -1}}, order) *
                          geometric_family_series(q, 1, 2, +1, 1, e, order) *
                          geometric_family_series(q, 2, 2, -1, 2, -1, order);
      TruncatedSeries b = geometric_family_series(q, 2, 2, +1, 1, e, order) *
                          geometric_family_series(q, 2, 2, -1, 2, -1, order);
      return {a + b, a - b};
    }
    case FgsKind::OMinusSO: {
      TruncatedSeries c = (expand_product({{-1, 2, Rational(1), -1}}, order) *
                           geometric_family_series(q, 1, 2, +1, 1, e, order) *
                           geometric_family_series(q, 2, 2, -1, 2, -1, order))
                              .shifted(1);
      return {c, c};
    }
  }
  throw std::logic_error("fgs_involution_series: unreachable");
}

Integer fgs_involution_count(InvolutionSet set, int n, int q, int type) {
  if (n < 1) throw std::invalid_argument("fgs_involution_count: n must be >= 1");
  require_type(type, "fgs_involution_count");
  if (set == InvolutionSet::O) {
    auto pr = fgs_involution_series(q % 2 ? FgsKind::OOddQ : FgsKind::OEvenQ, q, n);
    Rational a = (type > 0 ? pr.plus : pr.minus).coeff(n);
    Rational count = a * Rational(group_order({GroupKind::O, n, q, type})) /
                     q_power(q, static_cast<long>(n) * n);
    return count.to_integer();
  }
  auto pr = fgs_involution_series(FgsKind::SO, q, n);
  Rational b = (set == InvolutionSet::SO)
                   ? (type > 0 ? pr.plus : pr.minus).coeff(n)
                   : fgs_involution_series(FgsKind::OMinusSO, q, n).plus.coeff(n);
  Rational count = b * Rational(group_order({GroupKind::SO, n, q, type})) /
                   q_power(q, static_cast<long>(n) * (n - 1));
  return count.to_integer();
}

const std::vector<std::string>& identity_registry() {
  static const std::vector<std::string> names = {
      "old-result",  "genfun-O",           "genfun-SO",           "T-product",
      "G-product",   "R-product",          "W-product",           "euler",
      "indicators-O-even", "indicators-SO-even", "sp-chain",
  };
  return names;
}

IdentityDefaults identity_defaults(const std::string& name) {
  static const std::vector<int> all_q = {2, 3, 4, 5, 7, 8, 9};
  if (name == "euler") return {{2, 3, 5}, 20};
  if (name == "sp-chain") return {{3, 5, 7, 9}, 12};
  if (std::find(identity_registry().begin(), identity_registry().end(), name) ==
      identity_registry().end())
    throw std::invalid_argument("identity_defaults: unknown identity " + name);
  return {all_q, 12};
}

IdentityOutcome verify_identity(const std::string& name, int q, int order) {
  require_prime_power(q, "verify_identity");
  if (order < 0) throw std::invalid_argument("verify_identity: negative order");
  int e = e_of_q(q);
  TruncatedSeries lhs(order), rhs(order);

  if (name == "euler") {
    lhs = euler_lhs(q, order);
    rhs = euler_rhs(q, order);
  } else if (name == "T-product") {
    lhs = series_T(q, order, SeriesRoute::SymbolSum);
    rhs = series_T(q, order, SeriesRoute::InfiniteProduct);
  } else if (name == "G-product") {
    lhs = series_G(q, order, SeriesRoute::SymbolSum);
    rhs = series_G(q, order, SeriesRoute::InfiniteProduct);
  } else if (name == "R-product") {
    lhs = series_R(q, order, SeriesRoute::SymbolSum);
    rhs = series_R(q, order, SeriesRoute::InfiniteProduct);
  } else if (name == "W-product") {
    lhs = series_W(q, order, SeriesRoute::SymbolSum);
    rhs = series_W(q, order, SeriesRoute::InfiniteProduct);
  } else if (name == "old-result") {
    lhs = poly_slot_factor_dp(q, order).total();
    rhs = oldresult_rhs(q, order);
  } else if (name == "genfun-O") {
    lhs = (poly_slot_factor_dp(q, order) * o_unipotent_factor(q, order)).total();
    rhs = oldresult_rhs(q, order) *
          series_T_product(q, order).pow(Integer(e));
  } else if (name == "genfun-SO") {
    lhs = (poly_slot_factor_dp(q, order) * so_unipotent_factor(q, order)).total();
    rhs = oldresult_rhs(q, order) *
          (series_T_product(q, order).pow(Integer(e)) +
           series_G_product(q, order).pow(Integer(e)));
  } else if (name == "indicators-O-even") {
    lhs = (poly_slot_factor_dp(q, order) * o_unipotent_factor(q, order)).total();
    rhs = fgs_combined_branch(q, order, +1);
  } else if (name == "indicators-SO-even") {
    lhs = (poly_slot_factor_dp(q, order) * so_unipotent_factor(q, order)).total();
    rhs = fgs_combined_branch(q, order, +1) + fgs_combined_branch(q, order, -1);
  } else if (name == "sp-chain") {
    if (q % 2 == 0)
      throw std::invalid_argument("verify_identity: sp-chain requires odd q");
    lhs = poly_slot_factor_dp(q, order).total() * series_T(q, order, SeriesRoute::SymbolSum) *
          series_W(q, order, SeriesRoute::SymbolSum);
    rhs = euler_rhs(q, order);
  } else {
    throw std::invalid_argument("verify_identity: unknown identity " + name);
  }

  IdentityOutcome out;
  out.name = name;
  out.q = q;
  out.order = order;
  out.first_mismatch = lhs.first_difference(rhs);
  out.pass = out.first_mismatch < 0;
  out.lhs = lhs.str();
  out.rhs = rhs.str();
  return out;
}

const std::vector<std::string>& named_series_list() {
  static const std::vector<std::string> names = {
      "T", "G", "R", "W", "fgs-O", "fgs-SO", "fgs-OminusSO",
      "genfunO-rhs", "genfunSO-rhs", "euler-rhs",
  };
  return names;
}

TruncatedSeries named_series(const std::string& name, int q, int order) {
  require_prime_power(q, "named_series");
  int e = e_of_q(q);
  if (name == "T") return series_T(q, order, SeriesRoute::SymbolSum);
  if (name == "G") return series_G(q, order, SeriesRoute::SymbolSum);
  if (name == "R") return series_R(q, order, SeriesRoute::SymbolSum);
  if (name == "W") return series_W(q, order, SeriesRoute::SymbolSum);
  if (name == "fgs-O") return fgs_combined_branch(q, order, +1);
  if (name == "fgs-SO")
    return fgs_combined_branch(q, order, +1) + fgs_combined_branch(q, order, -1);
  if (name == "fgs-OminusSO") return fgs_involution_series(FgsKind::OMinusSO, q, order).plus;
  if (name == "genfunO-rhs")
    return oldresult_rhs(q, order) * series_T_product(q, order).pow(Integer(e));
  if (name == "genfunSO-rhs")
    return oldresult_rhs(q, order) *
           (series_T_product(q, order).pow(Integer(e)) +
            series_G_product(q, order).pow(Integer(e)));
  if (name == "euler-rhs") return euler_rhs(q, order);
  throw std::invalid_argument("named_series: unknown series " + name);
}

}  // namespace orthocount
