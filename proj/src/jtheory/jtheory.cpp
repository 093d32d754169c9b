#include "esm/jtheory.hpp"

#include <map>

#include "esm/bernoulli.hpp"
#include "esm/error.hpp"
#include "esm/intmatrix.hpp"

namespace esm {

ImJOrder imj_valuation(long s, long p) {
  if (s < 1) fail_input("image of J: s must be positive");
  if (!is_prime(p)) fail_input("image of J: p must be prime");
  ImJOrder out;
  out.degree = 4 * s - 1;
  out.p = p;
  if (p == 2)
    out.valuation = valuation(Integer(4 * s), 2) + 1;
  else
    out.valuation = (2 * s) % (p - 1) == 0 ? 1 + valuation(Integer(2 * s), p) : 0;
  return out;
}

Integer imj_order_oracle(long s, long bound) {
  if (s < 1) fail_input("image of J: s must be positive");
  if (s > bound) fail_input("image of J oracle: s = " + std::to_string(s) + " exceeds the bound " + std::to_string(bound));
  const Rational q = bernoulli(2 * s) / Rational(4 * s);
  return q.get_den();
}

ImJOrder imj_order(long s, long p, long bound) {
  ImJOrder out = imj_valuation(s, p);
  out.full_order = imj_order_oracle(s, bound);
  return out;
}

long default_ell(long p) {
  if (!is_prime(p)) fail_input("default Adams operation: p must be prime");
  return p == 2 ? 3 : least_primitive_root(p * p);
}

namespace {

using GroupRing = std::vector<Integer>;  // coefficient of g^a at index a

GroupRing mul_dense(const GroupRing& a, const GroupRing& b) {
  const size_t N = a.size();
  GroupRing out(N);
  for (size_t i = 0; i < N; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < N; ++j) {
      if (b[j] == 0) continue;
      const size_t k = i + j < N ? i + j : i + j - N;
      mpz_addmul(out[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// a * (1 + g^e + ... + g^{e(l-1)})
GroupRing mul_geometric(const GroupRing& a, long e, long ell) {
  const long N = static_cast<long>(a.size());
  GroupRing out(a.size());
  for (long i = 0; i < ell; ++i) {
    const long shift = mod_floor(e * i, N);
    for (long x = 0; x < N; ++x)
      if (a[x] != 0) out[(x + shift) % N] += a[x];
  }
  return out;
}

GroupRing pow_dense(GroupRing base, Integer e) {
  GroupRing result(base.size());
  result[0] = 1;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul_dense(result, base);
    e >>= 1;
    if (e > 0) base = mul_dense(base, base);
  }
  return result;
}

void require_honest(const VirtualRep& v) {
  if (!v.is_honest()) fail_input("theta needs an honest representation, got " + v.to_string());
}

VirtualRep theta_cyclic(long ell, const VirtualRep& v) {
  const long N = v.ring()->order();
  // Group the factors theta(L^a) by multiplicity so each power is taken once.
  std::map<Integer, std::vector<long>> by_mult;
  for (long a = 0; a < N; ++a) {
    const Rational& c = v.coeff(static_cast<size_t>(a));
    if (c != 0) by_mult[c.get_num()].push_back(a);
  }
  GroupRing result(static_cast<size_t>(N));
  result[0] = 1;
  for (const auto& [mult, exps] : by_mult) {
    GroupRing base(static_cast<size_t>(N));
    base[0] = 1;
    for (long a : exps) base = mul_geometric(base, a, ell);
    result = mul_dense(result, pow_dense(base, mult));
  }
  std::vector<Rational> coeffs(result.begin(), result.end());
  return VirtualRep(v.ring(), std::move(coeffs));
}

}  // namespace

VirtualRep theta_by_characters(long ell, const VirtualRep& v) {
  if (ell < 1) fail_input("theta: l must be at least 1");
  require_honest(v);
  const auto& ring = v.ring();
  const auto& t = ring->character_table();
  const GroupModel& g = ring->group();
  std::vector<Cyclotomic> values;
  for (const auto& cls : t.classes) {
    const int x = cls.front();
    const long o = g.element_order(x);
    const auto mult = eigenvalue_multiplicities(v, x);
    Cyclotomic value(o, Rational(1));
    for (long b = 0; b < o; ++b) {
      if (mult[b] == 0) continue;
      // 1 + z^b + ... + z^{b(l-1)} with z = zeta_o
      std::vector<Rational> geo(static_cast<size_t>(o));
      for (long i = 0; i < ell; ++i) geo[mod_floor(b * i, o)] += 1;
      value *= Cyclotomic::from_poly(o, std::move(geo)).pow(to_integer(mult[b]).get_ui());
    }
    values.push_back(value.promote(ring->conductor()));
  }
  return decompose(ring, values);
}

VirtualRep theta(long ell, const VirtualRep& v) {
  if (ell < 1) fail_input("theta: l must be at least 1");
  require_honest(v);
  if (v.ring()->is_cyclic()) return theta_cyclic(ell, v);
  return theta_by_characters(ell, v);
}

DimensionParameters dimension_parameters(const VirtualRep& v) {
  const auto pp = v.ring()->descriptor().prime_power();
  if (!pp) fail_input("dimension parameters need a p-group, not " + v.ring()->group().label());
  DimensionParameters out;
  out.p = pp->first;
  out.n = pp->second;
  const Rational dim = v.dim();
  if (!is_integral(dim) || dim <= 0) fail_input("dimension must be a positive integer");
  Integer m = to_integer(dim);
  if (out.p == 2) {
    out.k = valuation(m, 2) + 1;
  } else {
    if (m % (out.p - 1) != 0)
      fail_input("dimension " + m.get_str() + " is not a multiple of p - 1 = " + std::to_string(out.p - 1));
    m /= out.p - 1;
    out.k = valuation(m, out.p);
  }
  out.c = unit_part(m, out.p);
  return out;
}

AdamsBottReport verify_adams_bott(const VirtualRep& v, long ell, std::optional<long> k) {
  AdamsBottReport r;
  r.group = v.ring()->group().label();
  r.v = v;
  r.ell = ell;
  r.params = dimension_parameters(v);
  const long p = r.params.p;
  const long n = r.params.n;
  if (ell < 2) fail_input("Adams operation index must be at least 2");
  if (ell % p == 0) fail_input("l = " + std::to_string(ell) + " is divisible by p = " + std::to_string(p));
  if (!is_fixed_point_free(v)) fail_input(v.to_string() + " is not fixed point free");
  if (!has_rational_characters(v)) fail_input(v.to_string() + " does not have rational characters");
  if (k && *k != r.params.k)
    fail_input("dimension of V gives k = " + std::to_string(r.params.k) + ", not " + std::to_string(*k));
  const long kk = r.params.k;

  r.theta = theta(ell, v);
  const Integer dim = to_integer(v.dim());
  r.lambda = Rational(ipow(Integer(ell), dim.get_ui()) - 1) / Rational(v.ring()->order());
  const auto reg = rep_regular(v.ring());
  std::vector<Rational> expected(reg.coeffs());
  for (auto& c : expected) c *= r.lambda;
  expected[0] += 1;
  r.identity_holds = (r.theta.coeffs() == expected);
  r.valuation = valuation(r.lambda, p);
  r.expected_valuation = kk + 1 - n;
  const long shift = n - kk - 1;
  const Rational scale(ipow(Integer(p), static_cast<unsigned long>(shift >= 0 ? shift : -shift)));
  r.d = shift >= 0 ? Rational(r.lambda * scale) : Rational(r.lambda / scale);
  r.matches = r.identity_holds && r.valuation == r.expected_valuation;
  return r;
}

bool verify_bott_fixed_mod_X(const VirtualRep& v, const VirtualGSet& x, long ell) {
  const VirtualRep lx = linearize(x);
  if (lx.ring() != v.ring()) fail_input("V and X live over different groups");
  const VirtualRep diff = theta(ell, v) - VirtualRep::one(v.ring());
  const auto pp = v.ring()->descriptor().prime_power();
  const long p = pp ? pp->first : 0;
  const IntMatrix M = multiplication_matrix(lx);
  std::vector<Integer> target;
  for (const auto& c : diff.coeffs()) target.push_back(c.get_num());
  if (!solvable(M, target, p)) return false;
  for (const auto& gen : kernel(M).generators) {
    std::vector<Rational> c(gen.begin(), gen.end());
    if (!(diff * VirtualRep(v.ring(), std::move(c))).is_zero()) return false;
  }
  return true;
}

}  // namespace esm
