#pragma once

// The complex representation ring RU(G) of a cyclic or dicyclic group, in
// the basis of irreducible characters.
//
// Cyclic C_N: irreducibles L^a, 0 <= a < N, with L(g) = z_N.
// Dicyclic Dic_m (x of order 2m, j^2 = x^m): four one-dimensional characters
//   chi0 trivial, chi1 (x -> 1, j -> -1), chi2 (x -> -1, j -> e), chi3 (x -> -1, j -> -e)
// with e = 1 for m even and e = i for m odd, followed by the two-dimensional
// rho_h = Ind_<x>^G (x -> z_{2m}^h) for 1 <= h < m. rho_1 is the tautological
// quaternionic representation.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "esm/burnside.hpp"
#include "esm/cyclotomic.hpp"
#include "esm/groups.hpp"
#include "esm/intmatrix.hpp"
#include "esm/numeric.hpp"

namespace esm {

struct CharacterTable {
  long conductor = 1;
  std::vector<std::vector<int>> classes;  // conjugacy classes of elements
  std::vector<long> class_sizes;
  std::vector<std::string> irrep_names;
  std::vector<std::vector<Cyclotomic>> values;  // values[irrep][class]
  // Index of the class containing each element.
  std::vector<int> class_of_element;
};

class RepresentationRing {
 public:
  explicit RepresentationRing(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const GroupModel& group() const { return lattice_->group(); }
  const GroupDescriptor& descriptor() const { return desc_; }
  bool is_cyclic() const { return desc_.kind == GroupDescriptor::Kind::Cyclic; }
  long order() const { return desc_.order(); }
  long conductor() const { return conductor_; }
  size_t rank() const { return names_.size(); }
  const std::string& irrep_name(size_t i) const { return names_.at(i); }
  std::optional<size_t> find_irrep(const std::string& name) const;
  long irrep_dim(size_t i) const;

  // Character value of irreducible i at an element, straight from the formulas.
  Cyclotomic irrep_value(size_t i, int element) const;

  // out += coeff * (irrep i) * (irrep j)
  void multiply_basis_into(size_t i, size_t j, const Rational& coeff, std::vector<Rational>& out) const;
  // out += coeff * psi^ell(irrep i), ell >= 1
  void adams_basis_into(long ell, size_t i, const Rational& coeff, std::vector<Rational>& out) const;

  // Built on first use; safe for concurrent readers.
  const CharacterTable& character_table() const;

  // Dicyclic only: Ind_<x>^G (x -> z_{2m}^h) for any integer h.
  void add_induced_into(long h, const Rational& coeff, std::vector<Rational>& out) const;

 private:
  size_t one_dim_index(int s, long e) const;

  LatticePtr lattice_;
  GroupDescriptor desc_;
  long conductor_ = 1;
  std::vector<std::string> names_;
  // Dicyclic one-dimensional characters: x -> s, j -> i^e.
  std::vector<std::pair<int, long>> one_dim_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<CharacterTable> table_;
};

using RingPtr = std::shared_ptr<const RepresentationRing>;

// Memoized ring for the group built from a descriptor (lattice_for(d)).
RingPtr representation_ring(const GroupDescriptor& d);
RingPtr representation_ring(const LatticePtr& lattice);

class VirtualRep {
 public:
  VirtualRep() = default;
  explicit VirtualRep(RingPtr ring, long p_local = 0);
  VirtualRep(RingPtr ring, std::vector<Rational> coeffs, long p_local = 0);

  static VirtualRep irreducible(RingPtr ring, size_t i, const Integer& multiplicity = 1);
  static VirtualRep one(RingPtr ring) { return irreducible(std::move(ring), 0); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(size_t i) const { return coeffs_.at(i); }
  long p_local() const { return p_local_; }

  Rational dim() const;
  bool is_zero() const;
  bool is_integral() const;
  // Nonnegative integral coefficients: an actual representation.
  bool is_honest() const;

  Cyclotomic character(int element) const;
  // Values on the conjugacy classes of the character table.
  std::vector<Cyclotomic> class_function() const;

  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep& operator*=(const Rational& k);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(VirtualRep a, const Rational& k) { return a *= k; }
  friend VirtualRep operator*(const Rational& k, VirtualRep a) { return a *= k; }
  VirtualRep operator-() const;
  friend VirtualRep operator*(const VirtualRep& a, const VirtualRep& b);
  friend bool operator==(const VirtualRep& a, const VirtualRep& b);

  // "2 + L + 3*L^2", "4*rho1"; zero renders as "0".
  std::string to_string() const;

 private:
  void check_flag() const;

  RingPtr ring_;
  std::vector<Rational> coeffs_;
  long p_local_ = 0;
};

const CharacterTable& character_table(const RingPtr& ring);

// Exact expansion of a class function (values per class of the character
// table) in irreducibles. Throws InputError if the result is not integral
// (or not p-local when p_local != 0).
VirtualRep decompose(const RingPtr& ring, const std::vector<Cyclotomic>& class_values, long p_local = 0);

enum class StandardRep { W, H, Regular, ReducedRegular, Line, Quaternionic };

// W(m): sum of L^k, 1 <= k <= m, gcd(k, m) = 1, over C_m.
VirtualRep rep_W(const RingPtr& ring, long m);
// H(m): sum of psi^l(rho1), 1 <= l <= m, gcd(l, 2m) = 1, over Dic_m.
VirtualRep rep_H(const RingPtr& ring, long m);
VirtualRep rep_regular(const RingPtr& ring);
VirtualRep rep_reduced_regular(const RingPtr& ring);
VirtualRep rep_line(const RingPtr& ring, long a);  // L^a, cyclic only
VirtualRep rep_quaternionic(const RingPtr& ring);   // rho1, dicyclic only
// Dispatch by kind; param is m for W/H and a for Line, ignored otherwise.
VirtualRep standard_rep(const RingPtr& ring, StandardRep kind, long param = 0);

// psi^ell, ell >= 1: character g -> chi(g^ell).
VirtualRep adams(long ell, const VirtualRep& v);

// Permutation representation C[X].
VirtualRep linearize(const VirtualGSet& x);

// Multiplicity of each eigenvalue z_o^b (index b, o = order of g) of g on V.
std::vector<Rational> eigenvalue_multiplicities(const VirtualRep& v, int g);

// Throws InputError on a virtual (not honest) input.
bool is_fixed_point_free(const VirtualRep& v);
bool has_rational_characters(const VirtualRep& v);

// Gamma-orbit sums gamma_0, ..., gamma_n over C_{p^n}: gamma_i is the sum of
// L^a with gcd(a, p^n) = p^i.
std::vector<VirtualRep> gamma_basis(const RingPtr& ring);

struct GammaFixedResult {
  bool fixed = false;
  std::vector<Rational> coords;  // gamma coordinates when fixed
};
// Cyclic p-groups only.
GammaFixedResult gamma_fixed_check(const VirtualRep& v);

enum class RingSide { Burnside, Representation };

// What "R/X" divides out: the principal ideal X*R (default), or only the
// additive subgroup Z*X.
enum class QuotientKind { Ideal, Span };

struct AnnihilatorQuotient {
  RingSide side = RingSide::Burnside;
  AbelianGroup annihilator;  // Ann(X; R), generators in the ring basis
  AbelianGroup quotient;     // R / X R, generators in the ring basis
  // Representation side only: Gamma-fixed parts.
  std::optional<AbelianGroup> annihilator_fixed;
  std::optional<AbelianGroup> quotient_fixed;
};

// X over a cyclic p-group. The Burnside side multiplies in A(G); the
// representation side multiplies by linearize(X) in RU(G).
AnnihilatorQuotient annihilator_and_quotient(const VirtualGSet& x, RingSide side,
                                             QuotientKind kind = QuotientKind::Ideal);

// Integer matrix of multiplication by v in the irreducible basis (column j = v * irrep j).
IntMatrix multiplication_matrix(const VirtualRep& v);
// Same for the orbit basis of A(G).
IntMatrix multiplication_matrix(const VirtualGSet& x);

}  // namespace esm
