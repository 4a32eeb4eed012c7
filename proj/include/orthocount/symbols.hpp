#pragma once

#include <string>
#include <vector>

#include "orthocount/series.hpp"

namespace orthocount {

// Integer partition, weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;                      // |lambda|
  long n_stat() const;                   // sum (i-1) * lambda_i
  std::vector<int> hook_lengths() const;

  bool operator==(const Partition&) const = default;

  // All partitions of n, memoized, deterministic order.
  static const std::vector<Partition>& of(int n);
};

// Reduced unordered pair of strictly increasing non-negative rows. Rows are
// normalized so rowA <= rowB lexicographically; when the rows are equal the
// primed flag distinguishes the two degenerate copies.
class Symbol {
 public:
  Symbol(std::vector<int> a, std::vector<int> b, bool primed = false);

  const std::vector<int>& row_a() const { return a_; }
  const std::vector<int>& row_b() const { return b_; }
  bool primed() const { return primed_; }
  bool degenerate() const { return a_ == b_; }

  int rank() const;
  int defect() const;          // |r - k|
  int defect_class() const;    // +1 if defect = 0 mod 4, -1 if 2 mod 4

  bool operator==(const Symbol&) const = default;
  std::string str() const;

 private:
  std::vector<int> a_, b_;
  bool primed_;
};

// Ordered variant: orthogonal symbol.
class OrthSymbol {
 public:
  OrthSymbol() = default;  // (empty, empty), rank 0
  OrthSymbol(std::vector<int> a, std::vector<int> b);

  const std::vector<int>& row_a() const { return a_; }
  const std::vector<int>& row_b() const { return b_; }
  bool degenerate() const { return a_ == b_; }

  int rank() const;
  int defect() const;
  int defect_class() const;

  bool operator==(const OrthSymbol&) const = default;
  std::string str() const;

 private:
  std::vector<int> a_, b_;
};

// Symbol of odd positive defect (rowA longer than rowB).
class OddSymbol {
 public:
  OddSymbol(std::vector<int> a, std::vector<int> b);

  const std::vector<int>& row_a() const { return a_; }
  const std::vector<int>& row_b() const { return b_; }

  int rank() const;
  int defect() const;  // r - k, odd and positive

  bool operator==(const OddSymbol&) const = default;
  std::string str() const;

 private:
  std::vector<int> a_, b_;
};

enum class SymbolClass {
  SPlus,          // even defect, defect = 0 mod 4 (contains the degenerates)
  SMinus,         // defect = 2 mod 4
  EvenAll,        // all even defect
  Degenerate,     // equal rows, both primed copies
  NonDegenerate,  // even defect, rows distinct
};

enum class OrthClass { Plus, Minus, All };

// Complete duplicate-free lists of reduced symbols of exact rank n,
// memoized behind a synchronized cache. Degenerate symbols appear twice
// (primed and unprimed) in the S-families and once in the O-families.
const std::vector<Symbol>& symbols_of_rank(int n, SymbolClass c);
const std::vector<OrthSymbol>& orth_symbols_of_rank(int n, OrthClass c);
const std::vector<OddSymbol>& odd_symbols_of_rank(int n);

// Modified unipotent character degrees.
Rational delta_symbol(const Symbol& s, int q);
Rational delta_orth(const OrthSymbol& s, int q);
Rational delta_odd(const OddSymbol& s, int q);

// Hook-length modified degrees for GL(m, q^d) and U(m, q^d) unipotent
// characters; two_d is twice the extension degree carried by the U slot.
Rational delta_gl(const Partition& lambda, int d, int q);
Rational delta_u(const Partition& lambda, int two_d, int q);

enum class SeriesRoute { SymbolSum, InfiniteProduct };

// The four unipotent degree-sum generating functions, computable both by
// summation over symbols and by infinite product expansion.
TruncatedSeries series_T(int q, int order, SeriesRoute route);
TruncatedSeries series_G(int q, int order, SeriesRoute route);
TruncatedSeries series_R(int q, int order, SeriesRoute route);
TruncatedSeries series_W(int q, int order, SeriesRoute route);

// Product-route builders. literal_prefix leading factors of every infinite
// family are multiplied in literally before the exact closed-form tail takes
// over; the truncation is independent of that split, which is the testable
// form of cutoff stability.
TruncatedSeries series_T_product(int q, int order, int literal_prefix = 0);
TruncatedSeries series_G_product(int q, int order, int literal_prefix = 0);
TruncatedSeries series_R_product(int q, int order, int literal_prefix = 0);
TruncatedSeries series_W_product(int q, int order, int literal_prefix = 0);

// Defect-class graded sums used by the degree-sum machinery:
//   graded_T_sum: sum over orthogonal symbols of (1/2) delta(Xi) z^|Xi|
//   graded_S_sum: sum over all even-defect symbols of delta(Lambda) z^|Lambda|
GradedSeries graded_T_sum(int q, int order);
GradedSeries graded_S_sum(int q, int order);

}  // namespace orthocount
