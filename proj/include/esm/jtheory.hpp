#pragma once

// Orders in the p-primary image of J, the Bott cannibalistic class theta^l,
// and the two representation-ring identities behind the Adams-operation
// argument: theta^l(V) - 1 is a multiple of the regular representation, and
// it is fixed modulo X.

#include <optional>

#include "esm/burnside.hpp"
#include "esm/numeric.hpp"
#include "esm/repring.hpp"

namespace esm {

struct ImJOrder {
  long degree = 3;  // 4s - 1
  long p = 2;
  long valuation = 0;  // v_p of the order
  std::optional<Integer> full_order;  // filled in by imj_order when the oracle runs
};

// Closed-form p-adic valuation of the image of J in degree 4s - 1.
ImJOrder imj_valuation(long s, long p);

// Denominator of B_{2s} / 4s, straight from the Bernoulli numbers.
Integer imj_order_oracle(long s, long bound = 50);

// imj_valuation with full_order set from the oracle (s within the bound).
ImJOrder imj_order(long s, long p, long bound = 50);

// Default Adams operation: the least primitive root mod p^2 for odd p, 3 for p = 2.
long default_ell(long p);

// theta^l(V) for honest V, l >= 1. Cyclic groups multiply in the group ring
// Z[C_N]; dicyclic groups go through eigenvalues of class representatives.
VirtualRep theta(long ell, const VirtualRep& v);
// Always the eigenvalue route, for any supported group.
VirtualRep theta_by_characters(long ell, const VirtualRep& v);

struct DimensionParameters {
  long p = 2;
  long n = 1;
  long k = 0;
  Integer c = 1;  // p does not divide c
};

// dim V = p^k c (p - 1) for odd p, 2^(k-1) c for p = 2, with p not dividing c;
// p^n is the group order. Throws InputError when the dimension has the wrong shape.
DimensionParameters dimension_parameters(const VirtualRep& v);

struct AdamsBottReport {
  std::string group;
  VirtualRep v;
  long ell = 3;
  DimensionParameters params;
  VirtualRep theta;
  Rational lambda;             // theta - 1 = lambda * regular
  bool identity_holds = false;
  long valuation = 0;          // v_p(lambda)
  long expected_valuation = 0; // k + 1 - n
  Rational d;                  // lambda * p^(n - k - 1)
  bool matches = false;
};

// V fixed point free with rational characters over a p-group, gcd(l, p) = 1.
// When k is given it must agree with the dimension of V.
AdamsBottReport verify_adams_bott(const VirtualRep& v, long ell, std::optional<long> k = std::nullopt);

// theta^l(V) - 1 lies in linearize(X) RU(G) after localizing at p, and kills
// Ann(linearize(X); RU(G)).
bool verify_bott_fixed_mod_X(const VirtualRep& v, const VirtualGSet& x, long ell);

}  // namespace esm
