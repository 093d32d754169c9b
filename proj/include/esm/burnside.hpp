#pragma once

// The Burnside ring A(G) in the orbit basis [G/H], one coefficient per
// subgroup class, together with concrete finite G-sets used for restriction
// and as a brute-force cross-check of the mark calculus.

#include <memory>
#include <string>
#include <vector>

#include "esm/groups.hpp"
#include "esm/numeric.hpp"

namespace esm {

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

class VirtualGSet {
 public:
  VirtualGSet() = default;
  // Zero element. p_local = 0 means integral coefficients only.
  explicit VirtualGSet(LatticePtr lattice, long p_local = 0);
  VirtualGSet(LatticePtr lattice, std::vector<Rational> coeffs, long p_local = 0);

  static VirtualGSet orbit(LatticePtr lattice, size_t h, const Integer& multiplicity = 1);
  static VirtualGSet orbit(LatticePtr lattice, const std::string& label, const Integer& multiplicity = 1);
  static VirtualGSet unit(LatticePtr lattice);  // [G/G]
  static VirtualGSet free_orbit(LatticePtr lattice) { return orbit(lattice, 0); }  // [G/e]

  const LatticePtr& lattice() const { return lattice_; }
  const SubgroupLattice& lat() const { return *lattice_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(size_t h) const { return coeffs_.at(h); }
  long p_local() const { return p_local_; }

  bool is_zero() const;
  bool is_integral() const;
  // Every coefficient a nonnegative integer.
  bool is_genuine() const;

  VirtualGSet& operator+=(const VirtualGSet& o);
  VirtualGSet& operator-=(const VirtualGSet& o);
  VirtualGSet& operator*=(const Rational& k);
  friend VirtualGSet operator+(VirtualGSet a, const VirtualGSet& b) { return a += b; }
  friend VirtualGSet operator-(VirtualGSet a, const VirtualGSet& b) { return a -= b; }
  friend VirtualGSet operator*(VirtualGSet a, const Rational& k) { return a *= k; }
  friend VirtualGSet operator*(const Rational& k, VirtualGSet a) { return a *= k; }
  VirtualGSet operator-() const;
  friend VirtualGSet operator*(const VirtualGSet& a, const VirtualGSet& b);
  friend bool operator==(const VirtualGSet& a, const VirtualGSet& b);

  // "2[C4/C2] - [C4/e]" style; zero renders as "0".
  std::string to_string() const;

 private:
  void check_flag() const;

  LatticePtr lattice_;
  std::vector<Rational> coeffs_;
  long p_local_ = 0;
};

struct CardinalityDecomposition {
  long p = 2;
  long t = 0;
  Rational c;  // |X| = p^t c with c a p-local unit
};

// marks(X)[k] = |X^K| for the representative K of class k.
std::vector<Rational> marks(const VirtualGSet& x);
// Inverse of marks by triangular back-substitution. Throws InputError when the
// result has coefficients outside Z (or outside Z_(p) when p_local = p).
VirtualGSet from_marks(LatticePtr lattice, const std::vector<Rational>& mark_values, long p_local = 0);
VirtualGSet bmul(const VirtualGSet& x, const VirtualGSet& y);
// Repeated product; e >= 0.
VirtualGSet bpow(const VirtualGSet& x, unsigned long e);

Rational virtual_cardinality(const VirtualGSet& x);
// Throws InputError when the cardinality is zero.
CardinalityDecomposition cardinality(const VirtualGSet& x, long p);

// X viewed as an H-set for the representative H of class h; the result lives
// in lat().subgroup_lattice(h).
VirtualGSet restrict_to(const VirtualGSet& x, size_t h);
// G x_H Y for Y over lattice.subgroup_lattice(h).
VirtualGSet induce_from(const LatticePtr& lattice, size_t h, const VirtualGSet& y);

/// A finite G-set given by its action table.
class ConcreteGSet {
 public:
  // Left cosets aH of the subgroup (sorted element list), ordered by least element.
  static ConcreteGSet cosets(std::shared_ptr<const GroupModel> group, const std::vector<int>& subgroup);
  // Disjoint union of multiplicity[h] copies of G/H_h; multiplicities must be >= 0.
  static ConcreteGSet from_orbit_counts(const LatticePtr& lattice, const std::vector<long>& multiplicity);
  static ConcreteGSet from_gset(const VirtualGSet& x);  // x genuine

  const GroupModel& group() const { return *group_; }
  int size() const { return size_; }
  int act(int g, int x) const { return action_[static_cast<size_t>(g) * size_ + x]; }

  // Diagonal action on pairs; point (a, b) has index a * size + b.
  ConcreteGSet product(const ConcreteGSet& o) const;
  // Action of a subgroup model whose parent_index() maps into group().
  ConcreteGSet restricted(std::shared_ptr<const GroupModel> sub) const;

  // Orbits as sorted point lists, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> stabilizer(int x) const;
  // Orbit decomposition in the orbit basis of the lattice (which must be built on group()).
  VirtualGSet to_virtual(const LatticePtr& lattice) const;
  long fixed_points(const std::vector<int>& subgroup) const;

 private:
  std::shared_ptr<const GroupModel> group_;
  int size_ = 0;
  std::vector<int> action_;
};

}  // namespace esm
