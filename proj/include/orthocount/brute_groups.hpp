#pragma once

#include <cstdint>
#include <vector>

#include "orthocount/degree_sums.hpp"
#include "orthocount/ffpoly.hpp"

namespace orthocount {

// Square matrix over F_q, row-major, one byte per entry; entry (i,j) is the
// coefficient of e_i in the image of e_j.
using Mat = std::vector<uint8_t>;

// Quadratic space of even dimension over F_q with split (+1) or non-split
// (-1) type. The split form is x_1 x_2n + ... + x_n x_{n+1}; the non-split
// form replaces the central hyperbolic pair by an anisotropic binary form.
class QuadraticSpace {
 public:
  QuadraticSpace(int dim, int q, int type);

  int dim() const { return dim_; }
  int q() const { return q_; }
  int type() const { return type_; }

  int basis_value(int i) const { return diag_[static_cast<size_t>(i)]; }        // Q(e_i)
  int form_matrix(int i, int j) const { return b_[static_cast<size_t>(i * dim_ + j)]; }  // B(e_i, e_j)
  int quad(const std::vector<int>& v) const;
  int bilin(const std::vector<int>& v, const std::vector<int>& w) const;

 private:
  struct CrossTerm {
    int i, j, coeff;
  };
  int dim_, q_, type_;
  std::vector<int> diag_;        // coefficients of the x_i^2 terms
  std::vector<CrossTerm> cross_; // the x_i x_j terms of Q
  std::vector<int> b_;           // polar form matrix
};

// Explicit element set of a form-preserving matrix group, with its spec.
class MatrixGroup {
 public:
  MatrixGroup(GroupSpec spec, int dim, std::vector<Mat> elements);

  const GroupSpec& spec() const { return spec_; }
  int dim() const { return dim_; }
  const std::vector<Mat>& elements() const { return elements_; }
  bool contains(const Mat& m) const;

 private:
  GroupSpec spec_;
  int dim_;
  std::vector<Mat> elements_;  // sorted canonical byte encodings
};

// Builds the complete element set and asserts its cardinality against the
// order formula. Full backtracking enumeration within the small envelope,
// reflection/transvection closure beyond; a closure that stalls short of
// the target order is never accepted.
MatrixGroup build_group(const GroupSpec& spec);

// SO subgroup of a built orthogonal group (membership filter, order checked).
MatrixGroup so_subgroup(const MatrixGroup& o_group);

// Dickson/determinant membership test: det(g) = 1 for odd q,
// rank(g + I) even for even q.
bool so_membership(const Mat& g, const QuadraticSpace& space);

enum class Coset { All, SO, OMinusSO };

// Number of g in the selected coset with g^2 = 1, identity included.
Integer count_involutions(const MatrixGroup& group, Coset coset = Coset::All);

// #{g in Sp(2n, q) : y g y^{-1} = g^{-1}} for y = diag(I_n, -I_n), q odd.
Integer count_twisted_involutions_sp(const MatrixGroup& sp_group);

struct SigmaRealOutcome {
  bool ok = false;
  long checked = 0;
  std::vector<Mat> failures;  // elements of SO inverted by no coset involution
};

// Verifies that every element of SO is inverted by an involution in
// O minus SO. Requires dim = 2 mod 4.
SigmaRealOutcome check_strongly_sigma_real(const MatrixGroup& so_group,
                                           const MatrixGroup& o_group);

// Helpers shared with tests.
Mat mat_identity(int dim);
Mat mat_mul(const FiniteField& F, int dim, const Mat& a, const Mat& b);
std::vector<int> mat_apply(const FiniteField& F, int dim, const Mat& m, const std::vector<int>& v);

}  // namespace orthocount
