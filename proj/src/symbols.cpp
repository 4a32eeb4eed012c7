#include "orthocount/symbols.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orthocount {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i && v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool rows_reduced(const std::vector<int>& a, const std::vector<int>& b) {
  return !(!a.empty() && !b.empty() && a[0] == 0 && b[0] == 0);
}

void validate_rows(const std::vector<int>& a, const std::vector<int>& b) {
  if (!strictly_increasing(a) || !strictly_increasing(b))
    throw std::invalid_argument("symbol rows must be strictly increasing and non-negative");
  if (!rows_reduced(a, b))
    throw std::invalid_argument("symbol not reduced: both rows start with 0");
}

int row_sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

int rank_of_rows(const std::vector<int>& a, const std::vector<int>& b) {
  int t = static_cast<int>(a.size() + b.size());
  return row_sum(a) + row_sum(b) - ((t - 1) * (t - 1)) / 4;
}

std::string rows_str(const std::vector<int>& a, const std::vector<int>& b, char open, char close) {
  std::ostringstream os;
  os << open;
  auto put = [&](const std::vector<int>& r) {
    os << "{";
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) os << ",";
      os << r[i];
    }
    os << "}";
  };
  put(a);
  os << ",";
  put(b);
  os << close;
  return os.str();
}

// c(Lambda) = sum over i >= 1 of C(r+k-2i, 2) while the argument stays >= 2.
long c_exponent(int total_len) {
  long c = 0;
  for (int i = 1; total_len - 2 * i >= 2; ++i) {
    long a = total_len - 2 * i;
    c += a * (a - 1) / 2;
  }
  return c;
}

// Shared closed form behind the three delta functions: products over rows of
// |q^mu_i - q^mu_j|, (q^mu_i + q^nu_j), divided by 2^two_exp q^c and the
// hook products prod_{j<=entry} (q^{2j} - 1).
Rational delta_core(const std::vector<int>& mu, const std::vector<int>& nu, int q, long two_exp) {
  Integer num = 1;
  auto row_diffs = [&](const std::vector<int>& r) {
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = i + 1; j < r.size(); ++j) {
        Integer d = int_pow(q, static_cast<unsigned long>(r[j])) -
                    int_pow(q, static_cast<unsigned long>(r[i]));
        num *= abs(d);
      }
  };
  row_diffs(mu);
  row_diffs(nu);
  for (int a : mu)
    for (int b : nu)
      num *= int_pow(q, static_cast<unsigned long>(a)) + int_pow(q, static_cast<unsigned long>(b));

  Integer den = int_pow(2, static_cast<unsigned long>(two_exp));
  den *= int_pow(q, static_cast<unsigned long>(c_exponent(static_cast<int>(mu.size() + nu.size()))));
  auto hooks = [&](const std::vector<int>& r) {
    for (int entry : r)
      for (int j = 1; j <= entry; ++j)
        den *= int_pow(q, static_cast<unsigned long>(2 * j)) - 1;
  };
  hooks(mu);
  hooks(nu);
  return Rational(num, den);
}

// Strictly increasing non-negative rows of the given length and exact sum,
// entries >= min_value.
void gen_rows(int length, int sum, int min_value, std::vector<int>& cur,
              const std::function<void(const std::vector<int>&)>& emit) {
  if (length == 0) {
    if (sum == 0) emit(cur);
    return;
  }
  // Remaining entries must be strictly increasing from v, so the minimum
  // attainable is v + (v+1) + ... ; stop once that exceeds sum.
  for (int v = min_value;; ++v) {
    long min_rest = 0;
    for (int t = 0; t < length; ++t) min_rest += v + t;
    if (min_rest > sum) break;
    cur.push_back(v);
    gen_rows(length - 1, sum - v, v + 1, cur, emit);
    cur.pop_back();
  }
}

// Minimum total sum of a reduced row pair of lengths (r, k).
long min_reduced_sum(int r, int k) {
  auto stair = [](int n) { return static_cast<long>(n) * (n - 1) / 2; };
  long s = stair(r) + stair(k);
  if (r >= 1 && k >= 1) s += std::min(r, k);  // one of the rows must avoid 0
  return s;
}

constexpr int kRowLengthSlack = 4;  // r + k <= 2n + slack covers every defect

std::mutex cache_mutex;

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

long Partition::n_stat() const {
  long s = 0;
  for (size_t i = 0; i < parts.size(); ++i) s += static_cast<long>(i) * parts[i];
  return s;
}

std::vector<int> Partition::hook_lengths() const {
  std::vector<int> hooks;
  size_t rows = parts.size();
  for (size_t i = 0; i < rows; ++i) {
    for (int j = 1; j <= parts[i]; ++j) {
      int arm = parts[i] - j;
      int leg = 0;
      for (size_t t = i + 1; t < rows && parts[t] >= j; ++t) ++leg;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

const std::vector<Partition>& Partition::of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) throw std::invalid_argument("Partition::of: negative n");
  rec(n, n == 0 ? 1 : n);
  return cache.emplace(n, std::move(out)).first->second;
}

Symbol::Symbol(std::vector<int> a, std::vector<int> b, bool primed)
    : a_(std::move(a)), b_(std::move(b)), primed_(primed) {
  validate_rows(a_, b_);
  if (a_ > b_) std::swap(a_, b_);  // canonical unordered representative
  if (primed_ && a_ != b_)
    throw std::invalid_argument("Symbol: primed flag only valid for degenerate symbols");
}

int Symbol::rank() const { return rank_of_rows(a_, b_); }

int Symbol::defect() const {
  return std::abs(static_cast<int>(a_.size()) - static_cast<int>(b_.size()));
}

int Symbol::defect_class() const { return defect() % 4 == 0 ? +1 : -1; }

std::string Symbol::str() const {
  return rows_str(a_, b_, '[', ']') + (primed_ ? "'" : "");
}

OrthSymbol::OrthSymbol(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  validate_rows(a_, b_);
}

int OrthSymbol::rank() const { return rank_of_rows(a_, b_); }

int OrthSymbol::defect() const {
  return std::abs(static_cast<int>(a_.size()) - static_cast<int>(b_.size()));
}

int OrthSymbol::defect_class() const { return defect() % 4 == 0 ? +1 : -1; }

std::string OrthSymbol::str() const { return rows_str(a_, b_, '(', ')'); }

OddSymbol::OddSymbol(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  validate_rows(a_, b_);
  int d = static_cast<int>(a_.size()) - static_cast<int>(b_.size());
  if (d <= 0 || d % 2 == 0)
    throw std::invalid_argument("OddSymbol: defect must be odd and positive");
}

int OddSymbol::rank() const { return rank_of_rows(a_, b_); }

int OddSymbol::defect() const {
  return static_cast<int>(a_.size()) - static_cast<int>(b_.size());
}

std::string OddSymbol::str() const { return rows_str(a_, b_, '[', ']'); }

namespace {

// Enumeration of reduced row pairs of exact rank n. emit(a, b) receives each
// unordered pair once with len(a) >= len(b); ordered = true emits every
// ordered pair instead.
void enumerate_row_pairs(int n, bool ordered, bool odd_defect,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
  for (int total = 0; total <= 2 * n + kRowLengthSlack; ++total) {
    int sum = n + ((total - 1) * (total - 1)) / 4;
    for (int k = 0; k <= total; ++k) {
      int r = total - k;
      if (!ordered && r < k) continue;
      int defect = r - k;
      if (odd_defect) {
        if (defect <= 0 || defect % 2 == 0) continue;
      } else {
        if (std::abs(defect) % 2 != 0) continue;
      }
      if (min_reduced_sum(r, k) > sum) continue;
      // split the total sum; each side must at least cover its staircase
      int sa_min = r * (r - 1) / 2;
      int sa_max = sum - k * (k - 1) / 2;
      for (int sa = sa_min; sa <= sa_max; ++sa) {
        std::vector<int> rowa;
        gen_rows(r, sa, 0, rowa, [&](const std::vector<int>& ra) {
          std::vector<int> rowb;
          gen_rows(k, sum - sa, 0, rowb, [&](const std::vector<int>& rb) {
            if (!rows_reduced(ra, rb)) return;
            if (!ordered && r == k && rb < ra) return;  // unordered: emit once
            emit(ra, rb);
          });
        });
      }
    }
  }
}

}  // namespace

const std::vector<Symbol>& symbols_of_rank(int n, SymbolClass c) {
  static std::map<std::pair<int, int>, std::vector<Symbol>> cache;
  if (n < 0) throw std::invalid_argument("symbols_of_rank: negative rank");
  auto key = std::make_pair(n, static_cast<int>(c));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Symbol> out;
  enumerate_row_pairs(n, /*ordered=*/false, /*odd_defect=*/false,
                      [&](const std::vector<int>& a, const std::vector<int>& b) {
                        if (rank_of_rows(a, b) != n) return;
                        Symbol s(a, b);
                        bool keep = false;
                        switch (c) {
                          case SymbolClass::SPlus: keep = s.defect_class() > 0; break;
                          case SymbolClass::SMinus: keep = s.defect_class() < 0; break;
                          case SymbolClass::EvenAll: keep = true; break;
                          case SymbolClass::Degenerate: keep = s.degenerate(); break;
                          case SymbolClass::NonDegenerate: keep = !s.degenerate(); break;
                        }
                        if (!keep) return;
                        out.push_back(s);
                        if (s.degenerate()) out.emplace_back(a, b, /*primed=*/true);
                      });
  return cache.emplace(key, std::move(out)).first->second;
}

const std::vector<OrthSymbol>& orth_symbols_of_rank(int n, OrthClass c) {
  static std::map<std::pair<int, int>, std::vector<OrthSymbol>> cache;
  if (n < 0) throw std::invalid_argument("orth_symbols_of_rank: negative rank");
  auto key = std::make_pair(n, static_cast<int>(c));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<OrthSymbol> out;
  enumerate_row_pairs(n, /*ordered=*/true, /*odd_defect=*/false,
                      [&](const std::vector<int>& a, const std::vector<int>& b) {
                        if (rank_of_rows(a, b) != n) return;
                        OrthSymbol s(a, b);
                        bool keep = (c == OrthClass::All) ||
                                    (c == OrthClass::Plus && s.defect_class() > 0) ||
                                    (c == OrthClass::Minus && s.defect_class() < 0);
                        if (keep) out.push_back(std::move(s));
                      });
  return cache.emplace(key, std::move(out)).first->second;
}

const std::vector<OddSymbol>& odd_symbols_of_rank(int n) {
  static std::map<int, std::vector<OddSymbol>> cache;
  if (n < 0) throw std::invalid_argument("odd_symbols_of_rank: negative rank");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<OddSymbol> out;
  enumerate_row_pairs(n, /*ordered=*/true, /*odd_defect=*/true,
                      [&](const std::vector<int>& a, const std::vector<int>& b) {
                        if (rank_of_rows(a, b) != n) return;
                        out.emplace_back(a, b);
                      });
  return cache.emplace(n, std::move(out)).first->second;
}

Rational delta_symbol(const Symbol& s, int q) {
  if (s.defect() % 2 != 0) throw std::invalid_argument("delta_symbol: defect must be even");
  const auto& a = s.row_a();
  const auto& b = s.row_b();
  if (a.empty() && b.empty()) return Rational(1);
  int total = static_cast<int>(a.size() + b.size());
  long two_exp = s.degenerate() ? static_cast<long>(a.size()) : (total - 2) / 2;
  return delta_core(a, b, q, two_exp);
}

Rational delta_orth(const OrthSymbol& s, int q) {
  if (s.defect() % 2 != 0) throw std::invalid_argument("delta_orth: defect must be even");
  const auto& a = s.row_a();
  const auto& b = s.row_b();
  if (a.empty() && b.empty()) return Rational(2);
  int total = static_cast<int>(a.size() + b.size());
  return delta_core(a, b, q, (total - 2) / 2);
}

Rational delta_odd(const OddSymbol& s, int q) {
  const auto& a = s.row_a();
  const auto& b = s.row_b();
  int total = static_cast<int>(a.size() + b.size());
  return delta_core(a, b, q, (total - 1) / 2);
}

Rational delta_gl(const Partition& lambda, int d, int q) {
  if (d < 1) throw std::invalid_argument("delta_gl: d must be >= 1");
  if (lambda.parts.empty()) return Rational(1);
  Integer Q = int_pow(q, static_cast<unsigned long>(d));
  Integer num = int_pow(Q, static_cast<unsigned long>(lambda.n_stat()));
  Integer den = 1;
  for (int h : lambda.hook_lengths()) den *= int_pow(Q, static_cast<unsigned long>(h)) - 1;
  return Rational(num, den);
}

Rational delta_u(const Partition& lambda, int two_d, int q) {
  if (two_d < 2 || two_d % 2 != 0) throw std::invalid_argument("delta_u: two_d must be even and >= 2");
  if (lambda.parts.empty()) return Rational(1);
  int d = two_d / 2;
  Integer Q = int_pow(q, static_cast<unsigned long>(d));
  Integer num = int_pow(Q, static_cast<unsigned long>(lambda.n_stat()));
  Integer den = 1;
  for (int h : lambda.hook_lengths()) {
    Integer f = int_pow(Q, static_cast<unsigned long>(h));
    den *= (h % 2 == 0) ? Integer(f - 1) : Integer(f + 1);
  }
  return Rational(num, den).abs();
}

namespace {

TruncatedSeries sum_over_orth(int q, int order, OrthClass c) {
  TruncatedSeries s(order);
  Rational half(Integer(1), Integer(2));
  for (int n = 0; n <= order; ++n) {
    Rational acc(0);
    for (const OrthSymbol& xi : orth_symbols_of_rank(n, c)) acc += delta_orth(xi, q);
    s.set_coeff(n, half * acc);
  }
  return s;
}

TruncatedSeries sum_over_symbols(int q, int order, SymbolClass c, bool halve) {
  TruncatedSeries s(order);
  Rational w = halve ? Rational(Integer(1), Integer(2)) : Rational(1);
  for (int n = 0; n <= order; ++n) {
    Rational acc(0);
    for (const Symbol& lam : symbols_of_rank(n, c)) acc += delta_symbol(lam, q);
    s.set_coeff(n, w * acc);
  }
  return s;
}

// Infinite geometric family with its first `prefix` factors expanded
// literally and the rest in closed form; the result does not depend on the
// split.
TruncatedSeries geometric_with_prefix(int q, int a0, int da, int sign, long power, int order,
                                      int prefix) {
  std::vector<ProductFactor> head;
  for (int j = 0; j < prefix; ++j)
    head.push_back({sign, 1, q_power(q, -(a0 + static_cast<long>(j) * da)), power});
  return expand_product(head, order) *
         geometric_family_series(q, a0 + prefix * da, da, sign, 1, power, order);
}

TruncatedSeries cross_with_prefix(int q, long power, int order, int prefix) {
  std::vector<ProductFactor> head;
  for (int m = 1; m <= prefix; ++m)
    head.push_back({-1, 2, q_power(q, -(2L * m + 1)), power * m});
  return expand_product(head, order) * cross_family_series(q, power, order, prefix + 1);
}

}  // namespace

TruncatedSeries series_T_product(int q, int order, int literal_prefix) {
  return geometric_with_prefix(q, 1, 2, +1, +1, order, literal_prefix) *  // (1 + z/q^{2i-1})
         geometric_with_prefix(q, 1, 2, -1, -1, order, literal_prefix) *  // (1 - z/q^{2i-1})^{-1}
         cross_with_prefix(q, -1, order, literal_prefix);
}

TruncatedSeries series_G_product(int q, int order, int literal_prefix) {
  return cross_with_prefix(q, -1, order, literal_prefix);
}

TruncatedSeries series_R_product(int q, int order, int literal_prefix) {
  TruncatedSeries ratio = geometric_with_prefix(q, 1, 2, +1, +1, order, literal_prefix) *
                          geometric_with_prefix(q, 1, 2, -1, -1, order, literal_prefix);
  return (ratio - TruncatedSeries::one(order)) * series_G_product(q, order, literal_prefix);
}

TruncatedSeries series_W_product(int q, int order, int literal_prefix) {
  return geometric_with_prefix(q, 2, 2, +1, +1, order, literal_prefix) *  // (1 + z/q^{2i})
         geometric_with_prefix(q, 1, 2, -1, -1, order, literal_prefix) *  // (1 - z/q^{2i-1})^{-1}
         cross_with_prefix(q, -1, order, literal_prefix);
}

TruncatedSeries series_T(int q, int order, SeriesRoute route) {
  if (route == SeriesRoute::InfiniteProduct) return series_T_product(q, order);
  return sum_over_orth(q, order, OrthClass::All);
}

TruncatedSeries series_G(int q, int order, SeriesRoute route) {
  if (route == SeriesRoute::InfiniteProduct) return series_G_product(q, order);
  return sum_over_symbols(q, order, SymbolClass::Degenerate, /*halve=*/true);
}

TruncatedSeries series_R(int q, int order, SeriesRoute route) {
  if (route == SeriesRoute::InfiniteProduct) return series_R_product(q, order);
  // Full delta per non-degenerate symbol: each [mu,nu] carries two ordered
  // orthogonal symbols of the same delta, so this equals the half-weighted
  // sum over the ordered pairs and satisfies T = R + G.
  return sum_over_symbols(q, order, SymbolClass::NonDegenerate, /*halve=*/false);
}

TruncatedSeries series_W(int q, int order, SeriesRoute route) {
  if (route == SeriesRoute::InfiniteProduct) return series_W_product(q, order);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) {
    Rational acc(0);
    for (const OddSymbol& u : odd_symbols_of_rank(n)) acc += delta_odd(u, q);
    s.set_coeff(n, acc);
  }
  return s;
}

GradedSeries graded_T_sum(int q, int order) {
  return GradedSeries(sum_over_orth(q, order, OrthClass::Plus),
                      sum_over_orth(q, order, OrthClass::Minus));
}

GradedSeries graded_S_sum(int q, int order) {
  return GradedSeries(sum_over_symbols(q, order, SymbolClass::SPlus, /*halve=*/false),
                      sum_over_symbols(q, order, SymbolClass::SMinus, /*halve=*/false));
}

}  // namespace orthocount
