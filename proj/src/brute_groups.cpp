#include "orthocount/brute_groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace orthocount {

namespace {

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : m) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using MatSet = std::unordered_set<Mat, MatHash>;

int first_nonsquare(const FiniteField& F) {
  std::vector<bool> sq(static_cast<size_t>(F.q()), false);
  for (int a = 0; a < F.q(); ++a) sq[static_cast<size_t>(F.mul(a, a))] = true;
  for (int a = 2; a < F.q(); ++a)
    if (!sq[static_cast<size_t>(a)]) return a;
  throw std::logic_error("first_nonsquare: every element is a square");
}

int irreducible_binary_coefficient(const FiniteField& F) {
  // least a with t^2 + t + a irreducible, i.e. no root in F_q
  for (int a = 1; a < F.q(); ++a) {
    bool has_root = false;
    for (int t = 0; t < F.q(); ++t)
      if (F.add(F.add(F.mul(t, t), t), a) == 0) {
        has_root = true;
        break;
      }
    if (!has_root) return a;
  }
  throw std::logic_error("irreducible_binary_coefficient: none found");
}

// Symplectic Gram matrix: <v, w> = v^T [[0, -I], [I, 0]] w.
std::vector<int> symplectic_gram(const FiniteField& F, int dim) {
  int n = dim / 2;
  std::vector<int> J(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < n; ++i) {
    J[static_cast<size_t>(i) * dim + (n + i)] = F.neg(1);
    J[static_cast<size_t>(n + i) * dim + i] = 1;
  }
  return J;
}

int gram_pair(const FiniteField& F, const std::vector<int>& gram, int dim,
              const std::vector<int>& v, const std::vector<int>& w) {
  int acc = 0;
  for (int i = 0; i < dim; ++i) {
    if (v[static_cast<size_t>(i)] == 0) continue;
    int row = 0;
    for (int j = 0; j < dim; ++j)
      row = F.add(row, F.mul(gram[static_cast<size_t>(i) * dim + j], w[static_cast<size_t>(j)]));
    acc = F.add(acc, F.mul(v[static_cast<size_t>(i)], row));
  }
  return acc;
}

std::vector<int> decode_vector(int dim, int q, long enc) {
  std::vector<int> v(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    v[static_cast<size_t>(i)] = static_cast<int>(enc % q);
    enc /= q;
  }
  return v;
}

Mat columns_to_mat(int dim, const std::vector<std::vector<int>>& cols) {
  Mat m(static_cast<size_t>(dim) * dim, 0);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i)
      m[static_cast<size_t>(i) * dim + j] = static_cast<uint8_t>(cols[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  return m;
}

// Exhaustive search over images of the basis vectors; a partial choice is
// extended only while it still satisfies the form conditions, so the visited
// full matrices are exactly the isometries.
template <typename KeepColumn, typename PairOk>
std::vector<Mat> enumerate_isometries(int dim, int q, KeepColumn keep, PairOk pair_ok) {
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  std::vector<std::vector<int>> candidates;
  candidates.reserve(static_cast<size_t>(total));
  for (long enc = 0; enc < total; ++enc) candidates.push_back(decode_vector(dim, q, enc));

  std::vector<Mat> out;
  std::vector<std::vector<int>> cols;
  std::function<void(int)> rec = [&](int j) {
    if (j == dim) {
      out.push_back(columns_to_mat(dim, cols));
      return;
    }
    for (const auto& v : candidates) {
      if (!keep(j, v)) continue;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = pair_ok(i, j, cols[static_cast<size_t>(i)], v);
      if (!ok) continue;
      cols.push_back(v);
      rec(j + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Mat> closure(const FiniteField& F, int dim, const std::vector<Mat>& generators) {
  MatSet seen;
  std::vector<Mat> frontier;
  Mat id = mat_identity(dim);
  seen.insert(id);
  frontier.push_back(id);
  for (const Mat& g : generators)
    if (seen.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& f : frontier)
      for (const Mat& g : generators) {
        Mat p = mat_mul(F, dim, f, g);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Mat> reflection_generators(const QuadraticSpace& space) {
  const FiniteField& F = GF(space.q());
  int dim = space.dim();
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= space.q();
  std::vector<Mat> gens;
  for (long enc = 1; enc < total; ++enc) {
    std::vector<int> w = decode_vector(dim, space.q(), enc);
    int qw = space.quad(w);
    if (qw == 0) continue;
    int qw_inv = F.inv(qw);
    // r_w: v -> v - (B(v, w)/Q(w)) w, applied to each basis vector
    std::vector<std::vector<int>> cols;
    cols.reserve(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      std::vector<int> e(static_cast<size_t>(dim), 0);
      e[static_cast<size_t>(j)] = 1;
      int c = F.mul(space.bilin(e, w), qw_inv);
      for (int i = 0; i < dim; ++i)
        e[static_cast<size_t>(i)] = F.sub(e[static_cast<size_t>(i)], F.mul(c, w[static_cast<size_t>(i)]));
      cols.push_back(std::move(e));
    }
    gens.push_back(columns_to_mat(dim, cols));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<Mat> symplectic_transvection_generators(const FiniteField& F, int dim,
                                                    const std::vector<int>& gram) {
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= F.q();
  std::vector<Mat> gens;
  for (long enc = 1; enc < total; ++enc) {
    std::vector<int> v = decode_vector(dim, F.q(), enc);
    for (int lambda = 1; lambda < F.q(); ++lambda) {
      // x -> x + lambda <x, v> v
      std::vector<std::vector<int>> cols;
      cols.reserve(static_cast<size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        std::vector<int> e(static_cast<size_t>(dim), 0);
        e[static_cast<size_t>(j)] = 1;
        int c = F.mul(lambda, gram_pair(F, gram, dim, e, v));
        for (int i = 0; i < dim; ++i)
          e[static_cast<size_t>(i)] = F.add(e[static_cast<size_t>(i)], F.mul(c, v[static_cast<size_t>(i)]));
        cols.push_back(std::move(e));
      }
      gens.push_back(columns_to_mat(dim, cols));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

bool enumeration_feasible(int dim, int q) {
  double cost = 1;
  for (int i = 0; i < dim * dim; ++i) cost *= q;
  return cost <= 4.5e7;
}

void check_feasible(const GroupSpec& spec) {
  int dim = 2 * spec.n;
  bool ok = false;
  if (spec.kind == GroupKind::Sp) {
    ok = (dim == 2 && spec.q <= 7) || (dim == 4 && spec.q <= 3);
  } else {
    ok = (dim <= 4 && spec.q <= 3) || (dim == 6 && spec.q == 2);
  }
  if (!ok)
    throw std::domain_error("build_group: " + spec.str() + " is outside the feasibility envelope");
}

std::vector<Mat> enumerate_orthogonal(const QuadraticSpace& space) {
  return enumerate_isometries(
      space.dim(), space.q(),
      [&](int j, const std::vector<int>& v) {
        return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }) &&
               space.quad(v) == space.basis_value(j);
      },
      [&](int i, int j, const std::vector<int>& vi, const std::vector<int>& vj) {
        return space.bilin(vi, vj) == space.form_matrix(i, j);
      });
}

std::vector<Mat> build_orthogonal_elements(const QuadraticSpace& space, const Integer& expected) {
  const FiniteField& F = GF(space.q());
  int dim = space.dim();
  if (enumeration_feasible(dim, space.q())) return enumerate_orthogonal(space);
  auto elements = closure(F, dim, reflection_generators(space));
  if (Integer(static_cast<unsigned long>(elements.size())) != expected) {
    // Reflection closure stalled (the known O+(4,2)-style exception): a short
    // closure is never accepted, so redo the work exhaustively if possible.
    if (enumeration_feasible(dim, space.q())) return enumerate_orthogonal(space);
    throw std::logic_error("build_group: reflection closure stalled at " +
                           std::to_string(elements.size()) + " of " + expected.get_str());
  }
  return elements;
}

std::vector<Mat> build_symplectic_elements(int dim, int q) {
  const FiniteField& F = GF(q);
  std::vector<int> gram = symplectic_gram(F, dim);
  if (enumeration_feasible(dim, q)) {
    return enumerate_isometries(
        dim, q,
        [&](int, const std::vector<int>& v) {
          return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
        },
        [&](int i, int j, const std::vector<int>& vi, const std::vector<int>& vj) {
          return gram_pair(F, gram, dim, vi, vj) ==
                 gram[static_cast<size_t>(i) * dim + j];
        });
  }
  return closure(F, dim, symplectic_transvection_generators(F, dim, gram));
}

const QuadraticSpace& space_for(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, QuadraticSpace>* cache =
      new std::map<std::tuple<int, int, int>, QuadraticSpace>();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(spec.n, spec.q, spec.type);
  auto it = cache->find(key);
  if (it == cache->end())
    it = cache->emplace(key, QuadraticSpace(2 * spec.n, spec.q, spec.type)).first;
  return it->second;
}

}  // namespace

QuadraticSpace::QuadraticSpace(int dim, int q, int type) : dim_(dim), q_(q), type_(type) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("QuadraticSpace: dimension must be even and >= 2");
  if (type != 1 && type != -1) throw std::invalid_argument("QuadraticSpace: type must be +-1");
  const FiniteField& F = GF(q);
  int n = dim / 2;
  diag_.assign(static_cast<size_t>(dim), 0);
  b_.assign(static_cast<size_t>(dim) * dim, 0);
  // Q(v) = sum_{i<n} x_i x_{2n-1-i} (+ the central pair), zero-based indexing.
  auto add_pair_term = [&](int i, int j, int coeff) {
    // contributes coeff * x_i x_j; polar form picks up B(e_i, e_j) = coeff
    b_[static_cast<size_t>(i) * dim + j] = F.add(b_[static_cast<size_t>(i) * dim + j], coeff);
    b_[static_cast<size_t>(j) * dim + i] = F.add(b_[static_cast<size_t>(j) * dim + i], coeff);
    cross_.push_back({i, j, coeff});
  };
  for (int i = 0; i < n - 1; ++i) add_pair_term(i, dim - 1 - i, 1);
  if (type == 1) {
    add_pair_term(n - 1, n, 1);
  } else if (q % 2 == 0) {
    // x_{n-1}^2 + x_{n-1} x_n + a x_n^2 with t^2 + t + a irreducible
    int a = irreducible_binary_coefficient(F);
    diag_[static_cast<size_t>(n - 1)] = 1;
    diag_[static_cast<size_t>(n)] = a;
    add_pair_term(n - 1, n, 1);
  } else {
    // x_{n-1}^2 - delta x_n^2 with delta a non-square
    diag_[static_cast<size_t>(n - 1)] = 1;
    diag_[static_cast<size_t>(n)] = F.neg(first_nonsquare(F));
    // diagonal terms contribute 2 Q(e_i) on the polar form diagonal
    b_[static_cast<size_t>(n - 1) * dim + (n - 1)] = F.add(1, 1);
    b_[static_cast<size_t>(n) * dim + n] = F.add(diag_[static_cast<size_t>(n)], diag_[static_cast<size_t>(n)]);
  }
}

int QuadraticSpace::quad(const std::vector<int>& v) const {
  const FiniteField& F = GF(q_);
  int acc = 0;
  for (int i = 0; i < dim_; ++i) {
    int x = v[static_cast<size_t>(i)];
    if (x == 0) continue;
    acc = F.add(acc, F.mul(diag_[static_cast<size_t>(i)], F.mul(x, x)));
  }
  for (const auto& t : cross_)
    acc = F.add(acc, F.mul(t.coeff, F.mul(v[static_cast<size_t>(t.i)], v[static_cast<size_t>(t.j)])));
  return acc;
}

int QuadraticSpace::bilin(const std::vector<int>& v, const std::vector<int>& w) const {
  const FiniteField& F = GF(q_);
  int acc = 0;
  for (int i = 0; i < dim_; ++i) {
    if (v[static_cast<size_t>(i)] == 0) continue;
    int row = 0;
    for (int j = 0; j < dim_; ++j)
      row = F.add(row, F.mul(b_[static_cast<size_t>(i) * dim_ + j], w[static_cast<size_t>(j)]));
    acc = F.add(acc, F.mul(v[static_cast<size_t>(i)], row));
  }
  return acc;
}

MatrixGroup::MatrixGroup(GroupSpec spec, int dim, std::vector<Mat> elements)
    : spec_(spec), dim_(dim), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  Integer expected = group_order(spec_);
  if (Integer(static_cast<unsigned long>(elements_.size())) != expected)
    throw std::logic_error("MatrixGroup: built " + std::to_string(elements_.size()) +
                           " elements for " + spec_.str() + ", order formula gives " +
                           expected.get_str());
}

bool MatrixGroup::contains(const Mat& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

Mat mat_identity(int dim) {
  Mat m(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m[static_cast<size_t>(i) * dim + i] = 1;
  return m;
}

Mat mat_mul(const FiniteField& F, int dim, const Mat& a, const Mat& b) {
  Mat r(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      int aik = a[static_cast<size_t>(i) * dim + k];
      if (aik == 0) continue;
      for (int j = 0; j < dim; ++j) {
        auto& t = r[static_cast<size_t>(i) * dim + j];
        t = static_cast<uint8_t>(F.add(t, F.mul(aik, b[static_cast<size_t>(k) * dim + j])));
      }
    }
  return r;
}

std::vector<int> mat_apply(const FiniteField& F, int dim, const Mat& m, const std::vector<int>& v) {
  std::vector<int> r(static_cast<size_t>(dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      r[static_cast<size_t>(i)] =
          F.add(r[static_cast<size_t>(i)], F.mul(m[static_cast<size_t>(i) * dim + j], v[static_cast<size_t>(j)]));
  return r;
}

MatrixGroup build_group(const GroupSpec& spec) {
  check_feasible(spec);
  int dim = 2 * spec.n;
  if (spec.kind == GroupKind::Sp) {
    return MatrixGroup(spec, dim, build_symplectic_elements(dim, spec.q));
  }
  const QuadraticSpace& space = space_for({GroupKind::O, spec.n, spec.q, spec.type});
  std::vector<Mat> elements =
      build_orthogonal_elements(space, group_order({GroupKind::O, spec.n, spec.q, spec.type}));
  if (spec.kind == GroupKind::SO) {
    std::vector<Mat> so;
    for (const Mat& g : elements)
      if (so_membership(g, space)) so.push_back(g);
    return MatrixGroup(spec, dim, std::move(so));
  }
  return MatrixGroup(spec, dim, std::move(elements));
}

MatrixGroup so_subgroup(const MatrixGroup& o_group) {
  if (o_group.spec().kind != GroupKind::O)
    throw std::invalid_argument("so_subgroup: ambient group must be an O group");
  const QuadraticSpace& space =
      space_for({GroupKind::O, o_group.spec().n, o_group.spec().q, o_group.spec().type});
  std::vector<Mat> so;
  for (const Mat& g : o_group.elements())
    if (so_membership(g, space)) so.push_back(g);
  GroupSpec spec = o_group.spec();
  spec.kind = GroupKind::SO;
  return MatrixGroup(spec, o_group.dim(), std::move(so));
}

bool so_membership(const Mat& g, const QuadraticSpace& space) {
  const FiniteField& F = GF(space.q());
  int dim = space.dim();
  std::vector<int> work(static_cast<size_t>(dim) * dim);
  if (space.q() % 2 == 0) {
    // Dickson invariant: rank(g + I) over F_q, even iff g in SO
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        work[static_cast<size_t>(i) * dim + j] =
            F.add(g[static_cast<size_t>(i) * dim + j], (i == j) ? 1 : 0);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
      int pivot = -1;
      for (int r = row; r < dim; ++r)
        if (work[static_cast<size_t>(r) * dim + col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < dim; ++j)
        std::swap(work[static_cast<size_t>(pivot) * dim + j], work[static_cast<size_t>(row) * dim + j]);
      int inv = F.inv(work[static_cast<size_t>(row) * dim + col]);
      for (int r = row + 1; r < dim; ++r) {
        int factor = F.mul(work[static_cast<size_t>(r) * dim + col], inv);
        if (factor == 0) continue;
        for (int j = 0; j < dim; ++j)
          work[static_cast<size_t>(r) * dim + j] =
              F.sub(work[static_cast<size_t>(r) * dim + j],
                    F.mul(factor, work[static_cast<size_t>(row) * dim + j]));
      }
      ++row;
      ++rank;
    }
    return rank % 2 == 0;
  }
  // odd q: determinant = 1
  for (int i = 0; i < dim * dim; ++i) work[static_cast<size_t>(i)] = g[static_cast<size_t>(i)];
  int det = 1;
  int row = 0;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = row; r < dim; ++r)
      if (work[static_cast<size_t>(r) * dim + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;  // singular: not orthogonal at all
    if (pivot != row) {
      for (int j = 0; j < dim; ++j)
        std::swap(work[static_cast<size_t>(pivot) * dim + j], work[static_cast<size_t>(row) * dim + j]);
      det = F.neg(det);
    }
    int p = work[static_cast<size_t>(row) * dim + col];
    det = F.mul(det, p);
    int inv = F.inv(p);
    for (int r = row + 1; r < dim; ++r) {
      int factor = F.mul(work[static_cast<size_t>(r) * dim + col], inv);
      if (factor == 0) continue;
      for (int j = 0; j < dim; ++j)
        work[static_cast<size_t>(r) * dim + j] =
            F.sub(work[static_cast<size_t>(r) * dim + j],
                  F.mul(factor, work[static_cast<size_t>(row) * dim + j]));
    }
    ++row;
  }
  return det == 1;
}

Integer count_involutions(const MatrixGroup& group, Coset coset) {
  if (group.spec().kind == GroupKind::Sp && coset != Coset::All)
    throw std::invalid_argument("count_involutions: coset selector is invalid for Sp");
  const FiniteField& F = GF(group.spec().q);
  int dim = group.dim();
  Mat id = mat_identity(dim);
  const QuadraticSpace* space = nullptr;
  if (coset != Coset::All)
    space = &space_for({GroupKind::O, group.spec().n, group.spec().q, group.spec().type});
  long count = 0;
  for (const Mat& g : group.elements()) {
    if (mat_mul(F, dim, g, g) != id) continue;
    if (coset == Coset::All) {
      ++count;
    } else {
      bool in_so = so_membership(g, *space);
      if ((coset == Coset::SO) == in_so) ++count;
    }
  }
  return count;
}

Integer count_twisted_involutions_sp(const MatrixGroup& sp_group) {
  if (sp_group.spec().kind != GroupKind::Sp)
    throw std::invalid_argument("count_twisted_involutions_sp: group must be symplectic");
  int q = sp_group.spec().q;
  if (q % 2 == 0) throw std::invalid_argument("count_twisted_involutions_sp: q must be odd");
  const FiniteField& F = GF(q);
  int dim = sp_group.dim();
  int n = dim / 2;
  Mat y(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < n; ++i) y[static_cast<size_t>(i) * dim + i] = 1;
  for (int i = n; i < dim; ++i) y[static_cast<size_t>(i) * dim + i] = static_cast<uint8_t>(F.neg(1));
  Mat id = mat_identity(dim);
  long count = 0;
  // y g y^{-1} = g^{-1}  iff  (y g)^2 = 1, since y^2 = 1
  for (const Mat& g : sp_group.elements()) {
    Mat x = mat_mul(F, dim, y, g);
    if (mat_mul(F, dim, x, x) == id) ++count;
  }
  return count;
}

SigmaRealOutcome check_strongly_sigma_real(const MatrixGroup& so_group,
                                           const MatrixGroup& o_group) {
  const GroupSpec& spec = so_group.spec();
  if (spec.kind != GroupKind::SO || o_group.spec().kind != GroupKind::O)
    throw std::invalid_argument("check_strongly_sigma_real: expects (SO, O) pair");
  if ((2 * spec.n) % 4 != 2)
    throw std::invalid_argument("check_strongly_sigma_real: dimension must be 2 mod 4");
  const FiniteField& F = GF(spec.q);
  int dim = so_group.dim();
  Mat id = mat_identity(dim);

  // Involutions of the non-identity coset.
  std::vector<Mat> coset_involutions;
  for (const Mat& k : o_group.elements()) {
    if (so_group.contains(k)) continue;
    if (mat_mul(F, dim, k, k) == id) coset_involutions.push_back(k);
  }

  // g in SO is inverted by the involution k iff (kg)^2 = 1; the products kx
  // of two coset involutions therefore sweep out exactly the strongly
  // sigma-real elements of SO.
  MatSet reachable;
  for (const Mat& k : coset_involutions)
    for (const Mat& x : coset_involutions)
      reachable.insert(mat_mul(F, dim, k, x));

  SigmaRealOutcome out;
  out.checked = static_cast<long>(so_group.elements().size());
  for (const Mat& g : so_group.elements())
    if (!reachable.count(g)) out.failures.push_back(g);
  out.ok = out.failures.empty();
  return out;
}

}  // namespace orthocount
