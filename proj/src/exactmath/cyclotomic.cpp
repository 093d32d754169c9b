#include "esm/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "esm/error.hpp"

namespace esm {

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& monic_den) {
  if (monic_den.empty() || monic_den.back() != 1) fail_internal("poly_div_exact: divisor not monic");
  IntPoly rem = num;
  poly_trim(rem);
  if (rem.size() < monic_den.size()) {
    if (!rem.empty()) fail_internal("poly_div_exact: nonzero remainder");
    return {};
  }
  const size_t dd = monic_den.size() - 1;
  IntPoly quot(rem.size() - dd);
  for (size_t k = rem.size(); k-- > dd;) {
    Integer c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * monic_den[j];
  }
  poly_trim(rem);
  if (!rem.empty()) fail_internal("poly_div_exact: nonzero remainder");
  poly_trim(quot);
  return quot;
}

std::string poly_to_string(const IntPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    const Integer& c = a[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

const IntPoly& cyclotomic_poly(long N) {
  if (N < 1) fail_input("cyclotomic_poly: conductor must be positive");
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  // x^N - 1 divided by Phi_d for every proper divisor d.
  IntPoly p(static_cast<size_t>(N) + 1);
  p[0] = -1;
  p[N] = 1;
  for (long d : divisors(N)) {
    if (d == N) continue;
    p = poly_div_exact(p, cyclotomic_poly(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(p)).first->second;
}

namespace {

struct SparseTerm {
  size_t power;
  Integer coeff;
};

// Nonzero lower terms of Phi_N (the leading 1 excluded). Memoized.
const std::vector<SparseTerm>& phi_tail(long N) {
  static std::mutex mu;
  static std::map<long, std::vector<SparseTerm>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  const IntPoly& phi = cyclotomic_poly(N);
  std::vector<SparseTerm> tail;
  for (size_t i = 0; i + 1 < phi.size(); ++i)
    if (phi[i] != 0) tail.push_back({i, phi[i]});
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(tail)).first->second;
}

size_t degree_of(long N) { return static_cast<size_t>(euler_phi(N)); }

}  // namespace

Cyclotomic::Cyclotomic(long conductor) : conductor_(conductor) {
  if (conductor < 1) fail_input("cyclotomic conductor must be positive");
  coeffs_.assign(degree_of(conductor), Rational(0));
}

Cyclotomic::Cyclotomic(long conductor, const Rational& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
}

void Cyclotomic::reduce_in_place(long N, std::vector<Rational>& c) {
  const size_t deg = degree_of(N);
  const auto& tail = phi_tail(N);
  // z^k = -sum_j tail_j z^{k - deg + j} for k >= deg.
  for (size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const Rational lead = c[k];
    for (const auto& t : tail) c[k - deg + t.power] -= lead * t.coeff;
    c[k] = 0;
  }
  c.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::from_poly(long conductor, std::vector<Rational> coeffs) {
  Cyclotomic out(conductor);
  reduce_in_place(conductor, coeffs);
  out.coeffs_ = std::move(coeffs);
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long exponent) {
  const long e = mod_floor(exponent, conductor);
  std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
  c[e] = 1;
  return from_poly(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail_input("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promote(long M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0) fail_input("promote: target conductor is not a multiple");
  const long step = M / conductor_;
  std::vector<Rational> c(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_poly(M, std::move(c));
}

Cyclotomic Cyclotomic::galois(long e) const {
  const long N = conductor_;
  if (gcd_long(e, N) != 1) fail_input("galois: exponent " + std::to_string(e) + " not coprime to conductor " + std::to_string(N));
  const long em = mod_floor(e, N);
  std::vector<Rational> c(static_cast<size_t>(N), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    c[mod_floor(static_cast<long>(i) * em, N)] += coeffs_[i];
  }
  return from_poly(N, std::move(c));
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (conductor_ == other.conductor_) return;
  const long M = lcm_long(conductor_, other.conductor_);
  *this = promote(M);
  other = other.promote(M);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    align_with(b);
    return *this += b;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    align_with(b);
    return *this -= b;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    align_with(b);
    return *this *= b;
  }
  const size_t n = coeffs_.size();
  std::vector<size_t> support;
  for (size_t j = 0; j < n; ++j)
    if (o.coeffs_[j] != 0) support.push_back(j);
  std::vector<Rational> prod(2 * n - 1);
  Rational term;
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j : support) {
      mpq_mul(term.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
      prod[i + j] += term;
    }
  }
  reduce_in_place(conductor_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
  Cyclotomic result(conductor_, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const long M = lcm_long(a.conductor_, b.conductor_);
  return a.promote(M).coeffs_ == b.promote(M).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor_;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace esm
