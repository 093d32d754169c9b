#pragma once

#include <string>
#include <vector>

#include "esm/numeric.hpp"

namespace esm {

// Dense integer polynomial, coefficient of x^i at index i, no trailing zeros
// (the zero polynomial is empty).
using IntPoly = std::vector<Integer>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
void poly_trim(IntPoly& a);
// Exact division by a monic polynomial; throws InternalError on a nonzero remainder.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& monic_den);
std::string poly_to_string(const IntPoly& a);

// The N-th cyclotomic polynomial. Memoized; safe for concurrent callers.
const IntPoly& cyclotomic_poly(long N);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, reduced
/// modulo Phi_N. Binary operations on different conductors promote both
/// operands to the lcm conductor.
class Cyclotomic {
 public:
  // Zero of Q(zeta_1) = Q.
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(long conductor);
  Cyclotomic(long conductor, const Rational& value);

  static Cyclotomic root_of_unity(long conductor, long exponent);
  // Reduces sum_i coeffs[i] z^i (any length) modulo Phi_N.
  static Cyclotomic from_poly(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws InputError when not rational

  // Same element viewed in Q(zeta_M); requires conductor() | M.
  Cyclotomic promote(long M) const;

  // Field automorphism z -> z^e; e must be coprime to the conductor.
  Cyclotomic galois(long e) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  Cyclotomic operator-() const;
  Cyclotomic pow(unsigned long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  static void reduce_in_place(long conductor, std::vector<Rational>& coeffs);
  void align_with(Cyclotomic& other);

  long conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace esm
