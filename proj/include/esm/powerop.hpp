#pragma once

// The power operation Sq_1 on integers and on genuine finite G-sets, valued in
// pi_1 of the G-sphere spectrum written as the sum over subgroup classes (H)
// of {+-1} x W_G(H)^ab.

#include <cstdint>
#include <string>
#include <vector>

#include "esm/burnside.hpp"
#include "esm/numeric.hpp"

namespace esm {

struct EtaClass {
  int coeff = 0;  // in Z/2

  std::string to_string() const { return coeff ? "eta" : "0"; }
  friend bool operator==(const EtaClass&, const EtaClass&) = default;
};

EtaClass operator+(EtaClass a, EtaClass b);

struct Pi1Component {
  int sign = 0;               // coefficient of eta in Z/2
  std::vector<long> weyl;     // coordinates in W_G(H)^ab
  friend bool operator==(const Pi1Component&, const Pi1Component&) = default;
};

class Pi1Element {
 public:
  Pi1Element() = default;
  explicit Pi1Element(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<Pi1Component>& components() const { return parts_; }
  const Pi1Component& component(size_t h) const { return parts_.at(h); }
  Pi1Component& component(size_t h) { return parts_.at(h); }

  bool is_zero() const;
  Pi1Element& operator+=(const Pi1Element& o);
  friend Pi1Element operator+(Pi1Element a, const Pi1Element& b) { return a += b; }
  friend bool operator==(const Pi1Element& a, const Pi1Element& b);

  // A normalizer element of G (by name) whose image in W_G(H)^ab is the
  // Weyl coordinate of class h; lexicographically least element index.
  std::string weyl_element_name(size_t h) const;

  // "[C4/e]: (eta, g^2)" per nonzero summand, joined by " + "; "0" if zero.
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  std::vector<Pi1Component> parts_;
};

EtaClass sq1_int(const Integer& n);

// Restriction to the trivial group: eta[G/H] gives |G:H| eta and a Weyl
// element w gives the sign of aH -> awH on G/H.
EtaClass underlying(const Pi1Element& x);

// T genuine (all orbit multiplicities >= 0); throws InputError otherwise.
Pi1Element sq1_gset(const VirtualGSet& t);

// Recomputes sq1_gset under `trials` random relabelings of the points of T,
// random orbit representatives and random conjugating elements; true when
// every trial reproduces the canonical answer.
bool sq1_consistency(const VirtualGSet& t, int trials = 20, std::uint64_t seed = 1);

}  // namespace esm
