#include "esm/repring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "esm/error.hpp"

namespace esm {

namespace {

long merge_flags(long a, long b) {
  if (a != 0 && b != 0 && a != b) fail_input("cannot combine values localized at different primes");
  return a != 0 ? a : b;
}

bool coefficient_ok(const Rational& c, long p) { return p == 0 ? is_integral(c) : is_p_local(c, p); }

void same_ring(const VirtualRep& a, const VirtualRep& b) {
  if (a.ring() != b.ring()) fail_input("representations of different groups");
}

}  // namespace

// ------------------------------------------------------------------- ring

RepresentationRing::RepresentationRing(LatticePtr lattice) : lattice_(std::move(lattice)) {
  const GroupModel& g = lattice_->group();
  if (!g.descriptor()) fail_input("representation ring: group is neither cyclic nor dicyclic");
  desc_ = *g.descriptor();
  // The character formulas below are written for the element encoding of
  // GroupModel::build; insist on it.
  const GroupModel standard = GroupModel::build(desc_);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != standard.mul(a, b))
        fail_input("representation ring: group " + g.label() + " is not in standard presentation");

  if (is_cyclic()) {
    const long N = desc_.param;
    conductor_ = N;
    for (long a = 0; a < N; ++a) names_.push_back(a == 0 ? "1" : a == 1 ? "L" : "L^" + std::to_string(a));
  } else {
    const long m = desc_.param;
    conductor_ = lcm_long(2 * m, 4);
    const long e = (m % 2 == 0) ? 0 : 1;
    one_dim_ = {{1, 0}, {1, 2}, {-1, e}, {-1, e + 2}};
    names_ = {"chi0", "chi1", "chi2", "chi3"};
    for (long h = 1; h < m; ++h) names_.push_back("rho" + std::to_string(h));
  }
}

std::optional<size_t> RepresentationRing::find_irrep(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

long RepresentationRing::irrep_dim(size_t i) const {
  if (is_cyclic()) return 1;
  return i < 4 ? 1 : 2;
}

size_t RepresentationRing::one_dim_index(int s, long e) const {
  e = mod_floor(e, 4);
  for (size_t i = 0; i < one_dim_.size(); ++i)
    if (one_dim_[i].first == s && one_dim_[i].second == e) return i;
  fail_internal("one-dimensional character (" + std::to_string(s) + ", i^" + std::to_string(e) + ") not found");
}

Cyclotomic RepresentationRing::irrep_value(size_t i, int element) const {
  if (i >= rank()) fail_input("irreducible index out of range");
  if (is_cyclic()) {
    const long N = conductor_;
    return Cyclotomic::root_of_unity(N, mod_floor(static_cast<long>(i) * element, N));
  }
  const long m = desc_.param, C = conductor_;
  const long b = element % (2 * m), eps = element / (2 * m);
  if (i < 4) {
    const auto [s, e] = one_dim_[i];
    long exponent = (s == -1 ? b * (C / 2) : 0) + e * eps * (C / 4);
    return Cyclotomic::root_of_unity(C, exponent);
  }
  if (eps == 1) return Cyclotomic(C);
  const long h = static_cast<long>(i) - 3;
  const long step = C / (2 * m);
  return Cyclotomic::root_of_unity(C, h * b * step) + Cyclotomic::root_of_unity(C, -h * b * step);
}

void RepresentationRing::add_induced_into(long h, const Rational& coeff, std::vector<Rational>& out) const {
  if (is_cyclic()) fail_internal("add_induced_into on a cyclic group");
  const long m = desc_.param;
  h = mod_floor(h, 2 * m);
  if (h > m) h = 2 * m - h;
  if (h == 0) {
    out[0] += coeff;
    out[1] += coeff;
  } else if (h == m) {
    out[2] += coeff;
    out[3] += coeff;
  } else {
    out[static_cast<size_t>(h + 3)] += coeff;
  }
}

void RepresentationRing::multiply_basis_into(size_t i, size_t j, const Rational& coeff,
                                             std::vector<Rational>& out) const {
  if (is_cyclic()) {
    out[(i + j) % static_cast<size_t>(conductor_)] += coeff;
    return;
  }
  const long m = desc_.param;
  if (i > j) std::swap(i, j);
  if (j < 4) {
    const auto [s1, e1] = one_dim_[i];
    const auto [s2, e2] = one_dim_[j];
    out[one_dim_index(s1 * s2, e1 + e2)] += coeff;
  } else if (i < 4) {
    const long h = static_cast<long>(j) - 3;
    add_induced_into(one_dim_[i].first == 1 ? h : h + m, coeff, out);
  } else {
    const long h = static_cast<long>(i) - 3, k = static_cast<long>(j) - 3;
    add_induced_into(h + k, coeff, out);
    add_induced_into(h - k, coeff, out);
  }
}

void RepresentationRing::adams_basis_into(long ell, size_t i, const Rational& coeff, std::vector<Rational>& out) const {
  if (ell < 1) fail_input("Adams operations are taken with ell >= 1");
  if (is_cyclic()) {
    out[static_cast<size_t>(mod_floor(static_cast<long>(i) * ell, conductor_))] += coeff;
    return;
  }
  if (i < 4) {
    const auto [s, e] = one_dim_[i];
    out[one_dim_index(ell % 2 == 0 ? 1 : s, e * ell)] += coeff;
    return;
  }
  const long h = static_cast<long>(i) - 3;
  add_induced_into(h * ell, coeff, out);
  if (ell % 2 == 0) {
    // (x^b j)^ell = x^{m ell / 2} is central: correction supported off <x>.
    const Rational signed_coeff = ((h * ell / 2) % 2 == 0) ? coeff : Rational(-coeff);
    out[0] += signed_coeff;
    out[1] -= signed_coeff;
  }
}

const CharacterTable& RepresentationRing::character_table() const {
  std::call_once(table_once_, [this] {
    auto t = std::make_unique<CharacterTable>();
    t->conductor = conductor_;
    t->classes = group().conjugacy_classes();
    t->class_of_element.assign(group().order(), -1);
    for (size_t c = 0; c < t->classes.size(); ++c) {
      t->class_sizes.push_back(static_cast<long>(t->classes[c].size()));
      for (int x : t->classes[c]) t->class_of_element[x] = static_cast<int>(c);
    }
    t->irrep_names = names_;
    t->values.resize(rank());
    for (size_t i = 0; i < rank(); ++i)
      for (const auto& cls : t->classes) t->values[i].push_back(irrep_value(i, cls.front()));
    table_ = std::move(t);
  });
  return *table_;
}

RingPtr representation_ring(const LatticePtr& lattice) {
  static std::mutex mu;
  static std::map<const SubgroupLattice*, RingPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lattice.get());
    if (it != cache.end()) return it->second;
  }
  auto ring = std::make_shared<const RepresentationRing>(lattice);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(lattice.get(), ring).first->second;
}

RingPtr representation_ring(const GroupDescriptor& d) { return representation_ring(lattice_for(d)); }

const CharacterTable& character_table(const RingPtr& ring) { return ring->character_table(); }

// ------------------------------------------------------------- VirtualRep

VirtualRep::VirtualRep(RingPtr ring, long p_local)
    : ring_(std::move(ring)), coeffs_(ring_->rank()), p_local_(p_local) {}

VirtualRep::VirtualRep(RingPtr ring, std::vector<Rational> coeffs, long p_local)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), p_local_(p_local) {
  if (coeffs_.size() != ring_->rank()) fail_input("coefficient vector has the wrong length");
  check_flag();
}

void VirtualRep::check_flag() const {
  if (p_local_ != 0 && !is_prime(p_local_)) fail_input("p-local flag must be a prime");
  for (const auto& c : coeffs_)
    if (!coefficient_ok(c, p_local_))
      fail_input(p_local_ == 0 ? "non-integral coefficient in a virtual representation"
                               : "coefficient is not " + std::to_string(p_local_) + "-local");
}

VirtualRep VirtualRep::irreducible(RingPtr ring, size_t i, const Integer& multiplicity) {
  if (i >= ring->rank()) fail_input("irreducible index out of range");
  VirtualRep v(std::move(ring));
  v.coeffs_[i] = Rational(multiplicity);
  return v;
}

Rational VirtualRep::dim() const {
  Rational d = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) d += coeffs_[i] * ring_->irrep_dim(i);
  return d;
}

bool VirtualRep::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool VirtualRep::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return esm::is_integral(c); });
}

bool VirtualRep::is_honest() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return esm::is_integral(c) && c >= 0; });
}

Cyclotomic VirtualRep::character(int element) const {
  Cyclotomic v(ring_->conductor());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v += ring_->irrep_value(i, element) * coeffs_[i];
  return v;
}

std::vector<Cyclotomic> VirtualRep::class_function() const {
  const auto& t = ring_->character_table();
  std::vector<Cyclotomic> f(t.classes.size(), Cyclotomic(ring_->conductor()));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t c = 0; c < f.size(); ++c) f[c] += t.values[i][c] * coeffs_[i];
  }
  return f;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  same_ring(*this, o);
  p_local_ = merge_flags(p_local_, o.p_local_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  same_ring(*this, o);
  p_local_ = merge_flags(p_local_, o.p_local_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

VirtualRep& VirtualRep::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  check_flag();
  return *this;
}

VirtualRep VirtualRep::operator-() const {
  VirtualRep r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VirtualRep operator*(const VirtualRep& a, const VirtualRep& b) {
  same_ring(a, b);
  const auto& ring = *a.ring_;
  std::vector<Rational> out(ring.rank());
  std::vector<size_t> nb;
  for (size_t j = 0; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) nb.push_back(j);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j : nb) ring.multiply_basis_into(i, j, a.coeffs_[i] * b.coeffs_[j], out);
  }
  return VirtualRep(a.ring_, std::move(out), merge_flags(a.p_local_, b.p_local_));
}

bool operator==(const VirtualRep& a, const VirtualRep& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

std::string VirtualRep::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += esm::to_string(mag);
      continue;
    }
    if (mag != 1) out += esm::to_string(mag) + "*";
    out += ring_->irrep_name(i);
  }
  return out.empty() ? "0" : out;
}

// --------------------------------------------------------------- functions

VirtualRep decompose(const RingPtr& ring, const std::vector<Cyclotomic>& class_values, long p_local) {
  const auto& t = ring->character_table();
  if (class_values.size() != t.classes.size()) fail_input("class function has the wrong number of classes");
  std::vector<Rational> coeffs(ring->rank());
  const Rational inv_order = make_rational(1, ring->order());
  for (size_t i = 0; i < ring->rank(); ++i) {
    Cyclotomic s(ring->conductor());
    for (size_t c = 0; c < t.classes.size(); ++c) {
      if (class_values[c].is_zero()) continue;
      s += class_values[c] * t.values[i][c].conj() * Rational(t.class_sizes[c]);
    }
    s *= inv_order;
    if (!s.is_rational()) fail_input("class function is not a virtual character (irrational inner product)");
    coeffs[i] = s.rational_value();
  }
  return VirtualRep(ring, std::move(coeffs), p_local);
}

VirtualRep rep_W(const RingPtr& ring, long m) {
  if (!ring->is_cyclic() || ring->order() != m)
    fail_input("W(" + std::to_string(m) + ") is a representation of C" + std::to_string(m) + ", not of " +
               ring->group().label());
  VirtualRep v(ring);
  std::vector<Rational> c(ring->rank());
  for (long k = 1; k <= m; ++k)
    if (gcd_long(k, m) == 1) c[static_cast<size_t>(k % m)] += 1;
  return VirtualRep(ring, std::move(c));
}

VirtualRep rep_H(const RingPtr& ring, long m) {
  if (ring->is_cyclic() || ring->descriptor().param != m)
    fail_input("H(" + std::to_string(m) + ") is a representation of Dic" + std::to_string(m) + ", not of " +
               ring->group().label());
  VirtualRep h = rep_quaternionic(ring);
  VirtualRep v(ring);
  for (long l = 1; l <= m; ++l)
    if (gcd_long(l, 2 * m) == 1) v += adams(l, h);
  return v;
}

VirtualRep rep_regular(const RingPtr& ring) {
  std::vector<Rational> c(ring->rank());
  for (size_t i = 0; i < c.size(); ++i) c[i] = ring->irrep_dim(i);
  return VirtualRep(ring, std::move(c));
}

VirtualRep rep_reduced_regular(const RingPtr& ring) { return rep_regular(ring) - VirtualRep::one(ring); }

VirtualRep rep_line(const RingPtr& ring, long a) {
  if (!ring->is_cyclic()) fail_input("L^a is only defined for cyclic groups");
  return VirtualRep::irreducible(ring, static_cast<size_t>(mod_floor(a, ring->order())));
}

VirtualRep rep_quaternionic(const RingPtr& ring) {
  if (ring->is_cyclic()) fail_input("the quaternionic representation needs a dicyclic group");
  return VirtualRep::irreducible(ring, 4);
}

VirtualRep standard_rep(const RingPtr& ring, StandardRep kind, long param) {
  switch (kind) {
    case StandardRep::W: return rep_W(ring, param);
    case StandardRep::H: return rep_H(ring, param);
    case StandardRep::Regular: return rep_regular(ring);
    case StandardRep::ReducedRegular: return rep_reduced_regular(ring);
    case StandardRep::Line: return rep_line(ring, param);
    case StandardRep::Quaternionic: return rep_quaternionic(ring);
  }
  fail_input("unknown standard representation");
}

VirtualRep adams(long ell, const VirtualRep& v) {
  if (ell < 1) fail_input("Adams operations are taken with ell >= 1");
  const auto& ring = *v.ring();
  std::vector<Rational> out(ring.rank());
  for (size_t i = 0; i < ring.rank(); ++i)
    if (v.coeff(i) != 0) ring.adams_basis_into(ell, i, v.coeff(i), out);
  return VirtualRep(v.ring(), std::move(out), v.p_local());
}

VirtualRep linearize(const VirtualGSet& x) {
  RingPtr ring = representation_ring(x.lattice());
  const auto& lat = x.lat();
  if (ring->is_cyclic()) {
    const long N = ring->order();
    std::vector<Rational> c(ring->rank());
    for (size_t h = 0; h < lat.size(); ++h) {
      if (x.coeff(h) == 0) continue;
      // L^a is trivial on the subgroup of order d iff d | a.
      const long d = lat.at(h).order;
      for (long a = 0; a < N; a += d) c[static_cast<size_t>(a)] += x.coeff(h);
    }
    return VirtualRep(ring, std::move(c), x.p_local());
  }
  const auto m = marks(x);
  const auto& t = ring->character_table();
  const GroupModel& g = ring->group();
  std::vector<Cyclotomic> f;
  for (const auto& cls : t.classes) {
    const int cyc = lat.class_of(g.generated_subgroup({cls.front()}));
    f.emplace_back(ring->conductor(), m[static_cast<size_t>(cyc)]);
  }
  return decompose(ring, f, x.p_local());
}

std::vector<Rational> eigenvalue_multiplicities(const VirtualRep& v, int g) {
  const auto& ring = *v.ring();
  const GroupModel& grp = ring.group();
  const long o = grp.element_order(g);
  std::vector<Rational> mult(static_cast<size_t>(o));
  if (ring.is_cyclic()) {
    const long N = ring.order();
    for (size_t a = 0; a < v.coeffs().size(); ++a) {
      if (v.coeff(a) == 0) continue;
      const long e = mod_floor(static_cast<long>(a) * g, N);
      mult[static_cast<size_t>(e / (N / o))] += v.coeff(a);
    }
    return mult;
  }
  std::vector<Cyclotomic> values;
  int power = GroupModel::identity();
  for (long j = 0; j < o; ++j) {
    values.push_back(v.character(power));
    power = grp.mul(power, g);
  }
  const long C = ring.conductor();
  for (long b = 0; b < o; ++b) {
    Cyclotomic s(C);
    for (long j = 0; j < o; ++j) s += values[j] * Cyclotomic::root_of_unity(C, -b * j * (C / o));
    s *= make_rational(1, o);
    mult[static_cast<size_t>(b)] = s.rational_value();
  }
  return mult;
}

bool is_fixed_point_free(const VirtualRep& v) {
  if (!v.is_honest()) fail_input("fixed point freeness is defined for honest representations only");
  const GroupModel& g = v.ring()->group();
  // An element with a fixed vector has a power of prime order with one too.
  std::set<std::vector<int>> seen;
  for (int a = 1; a < g.order(); ++a) {
    if (!is_prime(g.element_order(a))) continue;
    if (!seen.insert(g.generated_subgroup({a})).second) continue;
    if (eigenvalue_multiplicities(v, a)[0] != 0) return false;
  }
  return true;
}

bool has_rational_characters(const VirtualRep& v) {
  // On character values the Galois automorphism z -> z^u acts as psi^u.
  const long n = v.ring()->order();
  for (long u = 2; u < n; ++u)
    if (gcd_long(u, n) == 1 && !(adams(u, v) == v)) return false;
  return true;
}

namespace {

std::pair<long, long> cyclic_p_group(const RepresentationRing& ring, const char* what) {
  auto pp = ring.descriptor().prime_power();
  if (!ring.is_cyclic() || !pp) fail_input(std::string(what) + " needs a cyclic p-group, not " + ring.group().label());
  return *pp;
}

}  // namespace

std::vector<VirtualRep> gamma_basis(const RingPtr& ring) {
  const auto [p, n] = cyclic_p_group(*ring, "gamma basis");
  const long N = ring->order();
  std::vector<VirtualRep> out;
  for (long i = 0; i <= n; ++i) {
    const long pi = ipow(p, i).get_si();
    std::vector<Rational> c(ring->rank());
    for (long a = 0; a < N; ++a)
      if (gcd_long(a, N) == pi) c[static_cast<size_t>(a)] = 1;
    out.emplace_back(ring, std::move(c));
  }
  return out;
}

GammaFixedResult gamma_fixed_check(const VirtualRep& v) {
  const auto [p, n] = cyclic_p_group(*v.ring(), "gamma_fixed_check");
  const long N = v.ring()->order();
  GammaFixedResult r;
  for (long a = 0; a < N; ++a) {
    const long rep = gcd_long(a, N) % N;
    if (v.coeff(static_cast<size_t>(a)) != v.coeff(static_cast<size_t>(rep))) return r;
  }
  r.fixed = true;
  for (long i = 0; i <= n; ++i) r.coords.push_back(v.coeff(static_cast<size_t>(ipow(p, i).get_si() % N)));
  return r;
}

IntMatrix multiplication_matrix(const VirtualRep& v) {
  if (!v.is_integral()) fail_input("multiplication matrix needs integral coefficients");
  const auto& ring = v.ring();
  const size_t r = ring->rank();
  IntMatrix M(r, r);
  for (size_t j = 0; j < r; ++j) {
    const VirtualRep col = v * VirtualRep::irreducible(ring, j);
    for (size_t i = 0; i < r; ++i) M(i, j) = col.coeff(i).get_num();
  }
  return M;
}

IntMatrix multiplication_matrix(const VirtualGSet& x) {
  if (!x.is_integral()) fail_input("multiplication matrix needs integral coefficients");
  const size_t r = x.lat().size();
  IntMatrix M(r, r);
  for (size_t j = 0; j < r; ++j) {
    const VirtualGSet col = bmul(x, VirtualGSet::orbit(x.lattice(), j));
    for (size_t i = 0; i < r; ++i) M(i, j) = col.coeff(i).get_num();
  }
  return M;
}

namespace {

IntMatrix as_column(const std::vector<Rational>& v) {
  IntMatrix c(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i].get_num();
  return c;
}

// Generators of Aut(C_{p^n}) = (Z/p^n)^x.
std::vector<long> unit_group_generators(long p, long n, long N) {
  if (p != 2) return {least_primitive_root(N)};
  if (n == 1) return {};
  if (n == 2) return {3};
  return {N - 1, 5};
}

}  // namespace

AnnihilatorQuotient annihilator_and_quotient(const VirtualGSet& x, RingSide side, QuotientKind kind) {
  if (!x.is_integral()) fail_input("annihilator_and_quotient needs an integral virtual G-set");
  AnnihilatorQuotient out;
  out.side = side;
  if (side == RingSide::Burnside) {
    auto pp = x.lat().group().descriptor() ? x.lat().group().descriptor()->prime_power() : std::nullopt;
    if (!pp || !x.lat().group().is_cyclic()) fail_input("annihilator_and_quotient needs a cyclic p-group");
    const IntMatrix M = multiplication_matrix(x);
    out.annihilator = kernel(M);
    out.quotient = cokernel(kind == QuotientKind::Ideal ? M : as_column(x.coeffs()));
    return out;
  }
  const RingPtr ring = representation_ring(x.lattice());
  const auto [p, n] = cyclic_p_group(*ring, "annihilator_and_quotient");
  const long N = ring->order();
  const VirtualRep y = linearize(x);
  const IntMatrix mult = multiplication_matrix(y);
  const IntMatrix M = kind == QuotientKind::Ideal ? mult : as_column(y.coeffs());
  out.annihilator = kernel(mult);
  out.quotient = cokernel(M);

  // Ann^Gamma: kernel of M restricted to the gamma lattice.
  const auto gammas = gamma_basis(ring);
  IntMatrix B(static_cast<size_t>(N), gammas.size());
  for (size_t i = 0; i < gammas.size(); ++i)
    for (long a = 0; a < N; ++a) B(static_cast<size_t>(a), i) = gammas[i].coeff(static_cast<size_t>(a)).get_num();
  AbelianGroup fixed_ann = kernel(mult * B);
  for (auto& gen : fixed_ann.generators) {
    std::vector<Integer> full(static_cast<size_t>(N));
    for (long a = 0; a < N; ++a)
      for (size_t i = 0; i < gen.size(); ++i) full[static_cast<size_t>(a)] += B(static_cast<size_t>(a), i) * gen[i];
    gen = std::move(full);
  }
  out.annihilator_fixed = fixed_ann;

  // (RU/X)^Gamma = P / XR with P = {v : (sigma - 1) v in XR for all sigma}.
  const auto gens = unit_group_generators(p, n, N);
  const size_t sz = static_cast<size_t>(N);
  IntMatrix P;
  if (gens.empty()) {
    P = IntMatrix::identity(sz);
  } else {
    IntMatrix K(gens.size() * sz, sz + gens.size() * M.cols());
    for (size_t s = 0; s < gens.size(); ++s) {
      for (size_t a = 0; a < sz; ++a) {
        // ((sigma - 1) v)_b: sigma sends L^a to L^{a u}.
        const size_t b = static_cast<size_t>(mod_floor(static_cast<long>(a) * gens[s], N));
        K(s * sz + b, a) += 1;
        K(s * sz + a, a) -= 1;
      }
      for (size_t i = 0; i < sz; ++i)
        for (size_t c = 0; c < M.cols(); ++c) K(s * sz + i, sz + s * M.cols() + c) = -M(i, c);
    }
    const AbelianGroup ker = kernel(K);
    P = IntMatrix(sz, ker.generators.size());
    for (size_t c = 0; c < ker.generators.size(); ++c)
      for (size_t i = 0; i < sz; ++i) P(i, c) = ker.generators[c][i];
  }
  out.quotient_fixed = lattice_quotient(P, M);
  return out;
}

}  // namespace esm
