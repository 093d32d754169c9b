#include "esm/numeric.hpp"

#include <cstdlib>

#include "esm/error.hpp"

namespace esm {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail_input("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integral(x)) fail_internal("expected an integer, got " + x.get_str());
  return x.get_num();
}

bool is_p_local(const Rational& x, long p) {
  Integer den = x.get_den();
  return mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

long valuation(const Integer& x, long p) {
  if (x == 0) fail_input("valuation of zero");
  Integer y = abs(x);
  long v = 0;
  const auto up = static_cast<unsigned long>(p);
  while (mpz_divisible_ui_p(y.get_mpz_t(), up)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), up);
    ++v;
  }
  return v;
}

long valuation(const Rational& x, long p) {
  if (x == 0) fail_input("valuation of zero");
  Integer num = x.get_num();
  Integer den = x.get_den();
  return valuation(num, p) - valuation(den, p);
}

Integer unit_part(const Integer& x, long p) {
  if (x == 0) return 0;
  Integer y = x;
  const auto up = static_cast<unsigned long>(p);
  while (mpz_divisible_ui_p(y.get_mpz_t(), up)) mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), up);
  return y;
}

Rational unit_part(const Rational& x, long p) {
  Integer num = x.get_num();
  Integer den = x.get_den();
  return make_rational(unit_part(num, p), unit_part(den, p));
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
  std::vector<std::pair<long, long>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  if (n < 1) fail_input("euler_phi of a non-positive integer");
  long r = n;
  for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
  return r;
}

long gcd_long(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::labs(a / gcd_long(a, b) * b);
}

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::pair<long, long> prime_power_decomposition(long n) {
  if (n < 2) return {0, 0};
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long least_primitive_root(long m) {
  if (m == 2) return 1;
  if (m == 4) return 3;
  const long order = euler_phi(m);
  const auto f = factorize(order);
  for (long g = 2; g < m; ++g) {
    if (gcd_long(g, m) != 1) continue;
    bool ok = true;
    for (auto [q, e] : f) {
      // g^(order/q) mod m
      long r = 1, b = g % m, k = order / q;
      while (k > 0) {
        if (k & 1) r = r * b % m;
        b = b * b % m;
        k >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 0;
}

}  // namespace esm
