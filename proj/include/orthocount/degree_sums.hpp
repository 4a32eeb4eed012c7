#pragma once

#include <string>
#include <vector>

#include "orthocount/ffpoly.hpp"
#include "orthocount/series.hpp"
#include "orthocount/symbols.hpp"

namespace orthocount {

enum class GroupKind { O, SO, Sp };

// A finite classical group: O^type(2n, q), SO^type(2n, q) or Sp(2n, q).
// n is the half-dimension; type is +1 or -1 (0 for Sp).
struct GroupSpec {
  GroupKind kind;
  int n;
  int q;
  int type = 0;

  std::string str() const;
};

Integer group_order(const GroupSpec& spec);

// e(q) = 1 for even q, 2 for odd q.
inline int e_of_q(int q) { return q % 2 == 0 ? 1 : 2; }

// A semisimple class datum: partitions attached to self-dual polynomial
// slots and dual-pair slots, plus orthogonal-symbol labels at the +-1
// eigenvalues (xi_minus stays empty for even q, where t+1 = t-1).
struct SemisimpleDatum {
  struct USlot {
    Poly f;            // element of N(q)', even degree
    Partition lambda;  // m_f = |lambda|
  };
  struct GLSlot {
    Poly g;            // representative of a pair {g, g*} with g != g*
    Partition lambda;  // m_g = |lambda|
  };

  std::vector<USlot> unitary;
  std::vector<GLSlot> linear;
  OrthSymbol xi_plus;   // label at t+1, rank m_+
  OrthSymbol xi_minus;  // label at t-1, rank m_- (rank 0 when q is even)

  int m_plus() const { return xi_plus.rank(); }
  int m_minus() const { return xi_minus.rank(); }
  // |Phi| = sum m_f deg(f)/2 + sum m_g deg(g) + m_+ + m_-.
  int weight() const;
};

// tau = eta(+) eta(-) prod_{f in N'} (-1)^{m_f}, the type of the orthogonal
// group carrying this class; the eta signs are read off the defect classes
// of the symbol labels.
int type_sign(const SemisimpleDatum& datum);

// Prime-to-p centralizer order factors.
Integer P_O(const SemisimpleDatum& datum, int q);
Integer P_Sp(const SemisimpleDatum& datum, int q);

enum class SigmaRoute {
  GradedDP,             // sign-graded dynamic program over N*/M* counts
  ExplicitEnumeration,  // product over actual enumerated polynomials
};

// Character degree sums. sigma_O / sigma_SO take the group type +-1;
// sigma_Sp requires odd q (the symplectic class data needs t+1 and t-1
// to be distinct polynomials).
Integer sigma_O(int n, int q, int type, SigmaRoute route = SigmaRoute::GradedDP);
Integer sigma_SO(int n, int q, int type, SigmaRoute route = SigmaRoute::GradedDP);
Integer sigma_Sp(int n, int q, SigmaRoute route = SigmaRoute::GradedDP);

enum class FgsKind { OOddQ, OEvenQ, SO, OMinusSO };

struct TypedSeriesPair {
  TruncatedSeries plus, minus;
};

// The Fulman-Guralnick-Stanton involution generating functions for the
// full orthogonal groups and their special-orthogonal/coset variants,
// split into the +-type and --type branches.
TypedSeriesPair fgs_involution_series(FgsKind kind, int q, int order);

enum class InvolutionSet { O, SO, OMinusSO };

// Integer involution count extracted from the generating functions:
// I = a_n |O| / q^{n^2} for the O forms, I = b_n |SO| / q^{n^2-n} for the
// SO and O-minus-SO forms. Throws if the extraction is not an integer.
Integer fgs_involution_count(InvolutionSet set, int n, int q, int type);

// Identity verification registry.
struct IdentityOutcome {
  std::string name;
  int q = 0;
  int order = 0;
  bool pass = false;
  int first_mismatch = -1;  // coefficient index, -1 when pass
  std::string lhs, rhs;     // full coefficient lists
};

const std::vector<std::string>& identity_registry();

struct IdentityDefaults {
  std::vector<int> q_list;
  int order;
};
IdentityDefaults identity_defaults(const std::string& name);

IdentityOutcome verify_identity(const std::string& name, int q, int order);

// Named series for the expand command: T, G, R, W, fgs-O, fgs-SO,
// fgs-OminusSO, genfunO-rhs, genfunSO-rhs, euler-rhs.
const std::vector<std::string>& named_series_list();
TruncatedSeries named_series(const std::string& name, int q, int order);

}  // namespace orthocount
