#include "orthocount/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orthocount {

namespace {

// Plain mod-p polynomial helpers used only to bootstrap a field; coefficient
// vectors lowest degree first, not normalized.
std::vector<int> modp_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

std::vector<int> modp_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[static_cast<size_t>(i)] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      auto& t = a[static_cast<size_t>(i - dm + j)];
      t = ((t - c * m[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  a.resize(static_cast<size_t>(dm));
  return a;
}

bool modp_irreducible(const std::vector<int>& f, int p);

// All monic polynomials of degree d over F_p as coefficient vectors, by
// ascending integer encoding of the lower coefficients.
bool modp_has_factor_of_degree(const std::vector<int>& f, int p, int e) {
  std::vector<int> g(static_cast<size_t>(e) + 1, 0);
  g[static_cast<size_t>(e)] = 1;
  long total = 1;
  for (int i = 0; i < e; ++i) total *= p;
  for (long enc = 0; enc < total; ++enc) {
    long v = enc;
    for (int i = 0; i < e; ++i) {
      g[static_cast<size_t>(i)] = static_cast<int>(v % p);
      v /= p;
    }
    if (!modp_irreducible(g, p)) continue;
    auto rem = modp_rem(f, g, p);
    if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return true;
  }
  return false;
}

bool modp_irreducible(const std::vector<int>& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return d == 1;
  for (int e = 1; 2 * e <= d; ++e)
    if (modp_has_factor_of_degree(f, p, e)) return false;
  return true;
}

int factor_prime_power(int q, int& p_out) {
  if (q < 2) return 0;
  int q0 = q;
  int p = 0;
  for (int c = 2; c * c <= q0; ++c) {
    if (q0 % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) {
    p_out = q;
    return 1;
  }
  int k = 0;
  while (q0 % p == 0) {
    q0 /= p;
    ++k;
  }
  if (q0 != 1) return 0;
  p_out = p;
  return k;
}

}  // namespace

bool is_prime_power(int q) {
  int p = 0;
  return factor_prime_power(q, p) > 0;
}

FiniteField::FiniteField(int q) : q_(q) {
  k_ = factor_prime_power(q, p_);
  if (k_ == 0) throw std::invalid_argument("FiniteField: q must be a prime power >= 2");
  if (q > 4096) throw std::invalid_argument("FiniteField: q out of supported range");

  if (k_ == 1) {
    modulus_ = {0, 1};  // m(x) = x
  } else {
    // Least monic irreducible of degree k over F_p by integer encoding of the
    // lower coefficients.
    long total = 1;
    for (int i = 0; i < k_; ++i) total *= p_;
    std::vector<int> m(static_cast<size_t>(k_) + 1, 0);
    m[static_cast<size_t>(k_)] = 1;
    bool found = false;
    for (long enc = 0; enc < total && !found; ++enc) {
      long v = enc;
      for (int i = 0; i < k_; ++i) {
        m[static_cast<size_t>(i)] = static_cast<int>(v % p_);
        v /= p_;
      }
      if (modp_irreducible(m, p_)) found = true;
    }
    if (!found) throw std::logic_error("FiniteField: no irreducible modulus found");
    modulus_ = m;
  }

  auto digits = [&](int a) {
    std::vector<int> d(static_cast<size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      d[static_cast<size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<size_t>(i)];
    return a;
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(static_cast<size_t>(q_));
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> nd(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) nd[static_cast<size_t>(i)] = (p_ - da[static_cast<size_t>(i)]) % p_;
    neg_[static_cast<size_t>(a)] = encode(nd);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> s(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i)
        s[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = encode(s);
      auto prod = modp_rem(modp_mul(da, db, p_), modulus_, p_);
      prod.resize(static_cast<size_t>(k_), 0);
      mul_[static_cast<size_t>(a) * q_ + b] = encode(prod);
    }
  }
}

int FiniteField::check(int a) const {
  if (a < 0 || a >= q_) throw std::out_of_range("FiniteField: element out of range");
  return a;
}

int FiniteField::inv(int a) const {
  check(a);
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("FiniteField: no inverse found");
}

int FiniteField::pow(int a, long e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

const FiniteField& GF(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::make_unique<FiniteField>(q)).first;
  return *it->second;
}

Poly::Poly(const FiniteField& F, std::vector<int> coeffs) : F_(&F), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.F_ != b.F_) throw std::invalid_argument("Poly: mixed fields");
  std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.F_->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(*a.F_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.F_ != b.F_) throw std::invalid_argument("Poly: mixed fields");
  std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.F_->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(*a.F_, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.F_ != b.F_) throw std::invalid_argument("Poly: mixed fields");
  if (a.is_zero() || b.is_zero()) return Poly(*a.F_);
  std::vector<int> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = a.F_->add(r[i + j], a.F_->mul(a.c_[i], b.c_[j]));
  return Poly(*a.F_, std::move(r));
}

Poly Poly::mod(const Poly& divisor) const {
  if (F_ != divisor.F_) throw std::invalid_argument("Poly: mixed fields");
  if (divisor.is_zero()) throw std::domain_error("Poly::mod: division by zero polynomial");
  std::vector<int> r = c_;
  int dd = divisor.degree();
  int lead_inv = F_->inv(divisor.c_.back());
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    int c = r[static_cast<size_t>(i)];
    if (c == 0) continue;
    int factor = F_->mul(c, lead_inv);
    for (int j = 0; j <= dd; ++j) {
      auto& t = r[static_cast<size_t>(i - dd + j)];
      t = F_->sub(t, F_->mul(factor, divisor.c_[static_cast<size_t>(j)]));
    }
  }
  r.resize(static_cast<size_t>(dd));
  return Poly(*F_, std::move(r));
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int c = coeff(i);
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool divides(const Poly& d, const Poly& f) { return f.mod(d).is_zero(); }

Poly dual(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("dual: polynomial must be monic");
  if (f.constant_term() == 0) throw std::domain_error("dual: zero constant term");
  const FiniteField& F = f.field();
  int d = f.degree();
  int a0_inv = F.inv(f.constant_term());
  std::vector<int> r(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) r[static_cast<size_t>(j)] = F.mul(a0_inv, f.coeff(d - j));
  return Poly(F, std::move(r));
}

namespace {

std::mutex irr_mutex;
std::map<std::pair<int, int>, std::vector<Poly>> irr_cache;

const std::vector<Poly>& enumerate_irreducibles_locked(int q, int d);

bool is_irreducible_impl(const Poly& f) {
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int e = 1; 2 * e <= d; ++e) {
    for (const Poly& g : enumerate_irreducibles_locked(f.field().q(), e))
      if (divides(g, f)) return false;
  }
  return true;
}

const std::vector<Poly>& enumerate_irreducibles_locked(int q, int d) {
  auto key = std::make_pair(q, d);
  auto it = irr_cache.find(key);
  if (it != irr_cache.end()) return it->second;

  if (d < 1) throw std::invalid_argument("enumerate_irreducibles: d must be >= 1");
  double size = 1;
  for (int i = 0; i < d; ++i) size *= q;
  if (size > 2.1e7)
    throw std::domain_error("enumerate_irreducibles: q^d exceeds the enumeration envelope");

  const FiniteField& F = GF(q);
  std::vector<Poly> out;
  // Monic, degree d, constant term nonzero; iterate the free coefficients.
  std::vector<int> c(static_cast<size_t>(d) + 1, 0);
  c[static_cast<size_t>(d)] = 1;
  long total = 1;
  for (int i = 0; i < d - 1; ++i) total *= q;
  for (int c0 = 1; c0 < q; ++c0) {
    c[0] = c0;
    for (long enc = 0; enc < total; ++enc) {
      long v = enc;
      for (int i = 1; i < d; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int>(v % q);
        v /= q;
      }
      Poly f(F, c);
      if (is_irreducible_impl(f)) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  return irr_cache.emplace(key, std::move(out)).first->second;
}

// Self-dual irreducibles of degree 2m with nonzero constant are in bijection
// with Galois orbits of size 2m inside U_m = {a : a^{q^m + 1} = 1}; an
// element of U_m of degree 2j exists exactly when j | m with m/j odd, and
// the degree-1 members are 1 (always) and -1 (q odd). Hence
//   q^m + 1 = e(q) + sum_{j | m, m/j odd} 2j N*(q; 2j).
Integer n_star_orbit(int q, int d) {
  if (d == 1) return (q % 2 == 1) ? 2 : 1;
  if (d % 2 == 1) return 0;
  int m = d / 2;
  Integer acc = int_pow(q, static_cast<unsigned long>(m)) + 1;
  acc -= (q % 2 == 1) ? 2 : 1;
  for (int j = 1; j < m; ++j) {
    if (m % j == 0 && (m / j) % 2 == 1) acc -= Integer(2 * j) * n_star_orbit(q, 2 * j);
  }
  if (acc % (2 * m) != 0) throw std::logic_error("n_star_orbit: non-integral count");
  return acc / (2 * m);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

bool enumeration_feasible(int q, int d) {
  double size = 1;
  for (int i = 0; i < d; ++i) size *= q;
  return size <= 2.0e5;
}

}  // namespace

const std::vector<Poly>& enumerate_irreducibles(int q, int d) {
  if (!is_prime_power(q)) throw std::invalid_argument("enumerate_irreducibles: q must be a prime power");
  std::lock_guard<std::mutex> lock(irr_mutex);
  return enumerate_irreducibles_locked(q, d);
}

bool is_irreducible(const Poly& f) {
  if (f.constant_term() == 0) throw std::domain_error("is_irreducible: zero constant term");
  std::lock_guard<std::mutex> lock(irr_mutex);
  return is_irreducible_impl(f);
}

Integer irreducible_count_formula(int q, int d) {
  if (d < 1) throw std::invalid_argument("irreducible_count_formula: d must be >= 1");
  Integer acc = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    acc += Integer(mobius(e)) * int_pow(q, static_cast<unsigned long>(d / e));
  }
  if (acc % d != 0) throw std::logic_error("irreducible_count_formula: non-integral count");
  return acc / d;
}

Integer count_N_star(int q, int d, CountMethod method) {
  if (!is_prime_power(q) || d < 1) throw std::invalid_argument("count_N_star: parameter range");
  if (method == CountMethod::Auto)
    method = enumeration_feasible(q, d) ? CountMethod::Enumeration : CountMethod::OrbitCount;
  if (method == CountMethod::OrbitCount) return n_star_orbit(q, d);
  Integer n = 0;
  for (const Poly& f : enumerate_irreducibles(q, d))
    if (f == dual(f)) ++n;
  return n;
}

Integer count_M_star(int q, int d, CountMethod method) {
  if (!is_prime_power(q) || d < 1) throw std::invalid_argument("count_M_star: parameter range");
  if (method == CountMethod::Auto)
    method = enumeration_feasible(q, d) ? CountMethod::Enumeration : CountMethod::OrbitCount;
  if (method == CountMethod::OrbitCount) {
    Integer total = irreducible_count_formula(q, d) - (d == 1 ? 1 : 0);
    Integer m2 = total - n_star_orbit(q, d);
    if (m2 % 2 != 0) throw std::logic_error("count_M_star: odd non-self-dual count");
    return m2 / 2;
  }
  const auto& irr = enumerate_irreducibles(q, d);
  Integer pairs = 0;
  for (const Poly& g : irr) {
    Poly gs = dual(g);
    if (g == gs) continue;
    if (!std::binary_search(irr.begin(), irr.end(), gs))
      throw std::logic_error("count_M_star: dual of an irreducible missing from the list");
    if (g < gs) ++pairs;
  }
  return pairs;
}

}  // namespace orthocount
