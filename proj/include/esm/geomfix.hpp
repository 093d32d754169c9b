#pragma once

// Geometric fixed points in tabular form: marks of virtual G-sets, the
// fixed points of the power maps psi_k, Bott class values and the
// classification of telescopes of beta_W self maps over C_{p^n}.

#include <string>
#include <vector>

#include "esm/burnside.hpp"
#include "esm/numeric.hpp"

namespace esm {

// Phi^H of X for the representative H of class h: the mark of X at H.
Rational phi_gset(const VirtualGSet& x, size_t h);

struct PowerMapFixedPoints {
  enum class Kind { Degree, Zero, Identity };
  Kind kind = Kind::Identity;
  long degree = 1;      // Degree only
  int source_dim = 0;   // real dimension of (S^L)^{C_d}
  int target_dim = 0;   // real dimension of (S^{L^k})^{C_d}

  // "5: S^2 -> S^2", "0: S^0 -> S^2", "1: S^0 -> S^0"
  std::string to_string() const;
  friend bool operator==(const PowerMapFixedPoints&, const PowerMapFixedPoints&) = default;
};

// Phi^{C_d} of the k-th power map S^L -> S^{L^k}; d, k >= 1.
PowerMapFixedPoints psi_power_fixed(long d, long k);

// p^(p^tower): the value of a geometric fixed point of a power of the Bott class.
struct BottFixedPower {
  long tower = 0;
  Integer exponent(long p) const;  // p^tower
  Integer value(long p) const;     // p^(p^tower)
  std::string to_string(long p) const;
};

// Phi^{C_{p^j}} of beta_{W_{p^n}}^{p^d}: tower n - j + d. Needs 1 <= j <= n, d >= 0.
BottFixedPower phi_bott_valuation(long n, long j, long d);

struct TelescopeFixedPoints {
  enum class Kind { V1Telescope, Zero, RationalPair };
  Kind kind = Kind::Zero;
  Integer modulus = 0;  // V1Telescope: C(modulus)[v1^-1]

  std::string to_string() const;
};

struct KuCofiberFixedPoints {
  enum class Kind { MooreKU, Zero, CyclotomicPair };
  Kind kind = Kind::Zero;
  Integer modulus = 0;  // MooreKU: KU/(modulus)
  long root_order = 1;  // CyclotomicPair: KU_Q(zeta_root_order)

  std::string to_string() const;
};

// Phi^{C_{p^j}} of the telescope of a beta_W self map on C(p^s [C_{p^n}/C_{p^i}]).
TelescopeFixedPoints telescope_fixed_points(long p, long n, long s, long i, long j);
// Phi^{C_{p^j}} of KU tensored with the same cofiber.
KuCofiberFixedPoints ku_cofiber_fixed_points(long p, long n, long s, long i, long j);

struct TelescopeRow {
  long j = 0;
  Rational mark;  // |(p^s [C_{p^n}/C_{p^i}])^{C_{p^j}}|
  std::string cofiber;  // Phi^{C_{p^j}} C(X) before inverting v
  TelescopeFixedPoints telescope;
  KuCofiberFixedPoints ku;
};

// Rows j = 0..n.
std::vector<TelescopeRow> telescope_table(long p, long n, long s, long i);

}  // namespace esm
