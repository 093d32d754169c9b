#pragma once

// Arbitrary precision integers and rationals (GMP backed) plus the small
// number-theoretic helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace esm {

using Integer = mpz_class;
// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_integral(const Rational& x);
Integer to_integer(const Rational& x);  // throws InternalError when not integral

// Denominator coprime to p.
bool is_p_local(const Rational& x, long p);

// v_p(x); x must be nonzero.
long valuation(const Integer& x, long p);
long valuation(const Rational& x, long p);

// x with every factor of p removed (sign kept).
Integer unit_part(const Integer& x, long p);
Rational unit_part(const Rational& x, long p);

Integer ipow(const Integer& base, unsigned long e);

bool is_prime(long n);
long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_floor(long a, long n);

// n = p^e with p prime and e >= 1; returns {p, e}, or {0, 0} otherwise.
std::pair<long, long> prime_power_decomposition(long n);

std::vector<long> divisors(long n);
std::vector<std::pair<long, long>> factorize(long n);

// Least primitive root modulo m (m = p^k or 2p^k); 0 when none exists.
long least_primitive_root(long m);

}  // namespace esm
