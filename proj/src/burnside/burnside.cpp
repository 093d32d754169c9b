#include "esm/burnside.hpp"

#include <algorithm>

#include "esm/error.hpp"

namespace esm {

namespace {

long merge_flags(long a, long b) {
  if (a != 0 && b != 0 && a != b) fail_input("cannot combine values localized at different primes");
  return a != 0 ? a : b;
}

void same_lattice(const VirtualGSet& a, const VirtualGSet& b) {
  if (a.lattice() != b.lattice()) fail_input("virtual G-sets over different groups");
}

bool coefficient_ok(const Rational& c, long p) { return p == 0 ? is_integral(c) : is_p_local(c, p); }

}  // namespace

VirtualGSet::VirtualGSet(LatticePtr lattice, long p_local)
    : lattice_(std::move(lattice)), coeffs_(lattice_->size()), p_local_(p_local) {}

VirtualGSet::VirtualGSet(LatticePtr lattice, std::vector<Rational> coeffs, long p_local)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)), p_local_(p_local) {
  if (coeffs_.size() != lattice_->size()) fail_input("coefficient vector has the wrong length");
  check_flag();
}

void VirtualGSet::check_flag() const {
  if (p_local_ != 0 && !is_prime(p_local_)) fail_input("p-local flag must be a prime");
  for (const auto& c : coeffs_)
    if (!coefficient_ok(c, p_local_))
      fail_input(p_local_ == 0 ? "non-integral coefficient in an integral virtual G-set"
                               : "coefficient is not " + std::to_string(p_local_) + "-local");
}

VirtualGSet VirtualGSet::orbit(LatticePtr lattice, size_t h, const Integer& multiplicity) {
  if (h >= lattice->size()) fail_input("subgroup class index out of range");
  VirtualGSet x(std::move(lattice));
  x.coeffs_[h] = Rational(multiplicity);
  return x;
}

VirtualGSet VirtualGSet::orbit(LatticePtr lattice, const std::string& label, const Integer& multiplicity) {
  auto h = lattice->find_class(label);
  if (!h) fail_input("unknown subgroup '" + label + "' of " + lattice->group().label());
  return orbit(std::move(lattice), *h, multiplicity);
}

VirtualGSet VirtualGSet::unit(LatticePtr lattice) {
  const size_t top = lattice->size() - 1;
  return orbit(std::move(lattice), top);
}

bool VirtualGSet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool VirtualGSet::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return esm::is_integral(c); });
}

bool VirtualGSet::is_genuine() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return esm::is_integral(c) && c >= 0; });
}

VirtualGSet& VirtualGSet::operator+=(const VirtualGSet& o) {
  same_lattice(*this, o);
  p_local_ = merge_flags(p_local_, o.p_local_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

VirtualGSet& VirtualGSet::operator-=(const VirtualGSet& o) {
  same_lattice(*this, o);
  p_local_ = merge_flags(p_local_, o.p_local_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

VirtualGSet& VirtualGSet::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  check_flag();
  return *this;
}

VirtualGSet VirtualGSet::operator-() const {
  VirtualGSet r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VirtualGSet operator*(const VirtualGSet& a, const VirtualGSet& b) { return bmul(a, b); }

bool operator==(const VirtualGSet& a, const VirtualGSet& b) {
  return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
}

std::string VirtualGSet::to_string() const {
  std::string out;
  const std::string g = lattice_->group().label();
  for (size_t h = 0; h < coeffs_.size(); ++h) {
    const Rational& c = coeffs_[h];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += esm::to_string(mag);
    out += "[" + g + "/" + lattice_->at(h).label + "]";
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------- marks

std::vector<Rational> marks(const VirtualGSet& x) {
  const auto& lat = x.lat();
  std::vector<Rational> m(lat.size());
  for (size_t h = 0; h < lat.size(); ++h) {
    if (x.coeff(h) == 0) continue;
    for (size_t k = 0; k <= h; ++k) m[k] += x.coeff(h) * lat.mark(h, k);
  }
  return m;
}

VirtualGSet from_marks(LatticePtr lattice, const std::vector<Rational>& mark_values, long p_local) {
  const size_t r = lattice->size();
  if (mark_values.size() != r) fail_input("mark vector has the wrong length");
  std::vector<Rational> c(r);
  // m_K = sum_{H >= K} c_H marks(H, K), solved from the largest K down.
  for (size_t k = r; k-- > 0;) {
    Rational acc = mark_values[k];
    for (size_t h = k + 1; h < r; ++h)
      if (c[h] != 0) acc -= c[h] * lattice->mark(h, k);
    c[k] = acc / lattice->mark(k, k);
    if (!coefficient_ok(c[k], p_local))
      fail_input("mark vector does not come from " + std::string(p_local ? "a p-local" : "an integral") +
                 " virtual G-set (coefficient " + esm::to_string(c[k]) + " at " + lattice->at(k).label + ")");
  }
  return VirtualGSet(std::move(lattice), std::move(c), p_local);
}

VirtualGSet bmul(const VirtualGSet& x, const VirtualGSet& y) {
  same_lattice(x, y);
  const long flag = merge_flags(x.p_local(), y.p_local());
  auto mx = marks(x), my = marks(y);
  for (size_t i = 0; i < mx.size(); ++i) mx[i] *= my[i];
  try {
    return from_marks(x.lattice(), mx, flag);
  } catch (const InputError& e) {
    fail_internal(std::string("product left the Burnside ring: ") + e.what());
  }
}

VirtualGSet bpow(const VirtualGSet& x, unsigned long e) {
  VirtualGSet r = VirtualGSet::unit(x.lattice());
  for (unsigned long i = 0; i < e; ++i) r = bmul(r, x);
  return r;
}

Rational virtual_cardinality(const VirtualGSet& x) {
  Rational n = 0;
  for (size_t h = 0; h < x.lat().size(); ++h) n += x.coeff(h) * x.lat().at(h).index;
  return n;
}

CardinalityDecomposition cardinality(const VirtualGSet& x, long p) {
  if (!is_prime(p)) fail_input("cardinality: " + std::to_string(p) + " is not prime");
  const Rational n = virtual_cardinality(x);
  if (n == 0) fail_input("virtual cardinality is zero; no p-adic valuation");
  CardinalityDecomposition d;
  d.p = p;
  d.t = valuation(n, p);
  d.c = unit_part(n, p);
  if (d.t < 0) fail_input("virtual cardinality has negative " + std::to_string(p) + "-adic valuation");
  return d;
}

VirtualGSet restrict_to(const VirtualGSet& x, size_t h) {
  auto sub = x.lat().subgroup_lattice(h);
  std::vector<Rational> c(sub->size());
  const auto& G = x.lat().group_ptr();
  for (size_t k = 0; k < x.lat().size(); ++k) {
    if (x.coeff(k) == 0) continue;
    auto orbit = ConcreteGSet::cosets(G, x.lat().at(k).representative).restricted(sub->group_ptr());
    const VirtualGSet part = orbit.to_virtual(sub);
    for (size_t i = 0; i < c.size(); ++i) c[i] += part.coeff(i) * x.coeff(k);
  }
  return VirtualGSet(sub, std::move(c), x.p_local());
}

VirtualGSet induce_from(const LatticePtr& lattice, size_t h, const VirtualGSet& y) {
  auto sub = lattice->subgroup_lattice(h);
  if (y.lattice() != sub) fail_input("induce: argument does not live over the chosen subgroup");
  std::vector<Rational> c(lattice->size());
  const auto& up = sub->group().parent_index();
  for (size_t k = 0; k < sub->size(); ++k) {
    if (y.coeff(k) == 0) continue;
    std::vector<int> image;
    for (int a : sub->at(k).representative) image.push_back(up[a]);
    c[lattice->class_of(image)] += y.coeff(k);
  }
  return VirtualGSet(lattice, std::move(c), y.p_local());
}

// ---------------------------------------------------------- concrete G-sets

ConcreteGSet ConcreteGSet::cosets(std::shared_ptr<const GroupModel> group, const std::vector<int>& subgroup) {
  const GroupModel& g = *group;
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : subgroup) coset_of[g.mul(a, x)] = id;
  }
  ConcreteGSet s;
  s.group_ = std::move(group);
  s.size_ = static_cast<int>(reps.size());
  s.action_.resize(static_cast<size_t>(g.order()) * s.size_);
  for (int x = 0; x < g.order(); ++x)
    for (int c = 0; c < s.size_; ++c) s.action_[static_cast<size_t>(x) * s.size_ + c] = coset_of[g.mul(x, reps[c])];
  return s;
}

ConcreteGSet ConcreteGSet::from_orbit_counts(const LatticePtr& lattice, const std::vector<long>& multiplicity) {
  if (multiplicity.size() != lattice->size()) fail_input("orbit count vector has the wrong length");
  const auto& group = lattice->group_ptr();
  ConcreteGSet s;
  s.group_ = group;
  std::vector<ConcreteGSet> pieces;
  for (size_t h = 0; h < lattice->size(); ++h) {
    if (multiplicity[h] < 0) fail_input("a concrete G-set needs nonnegative orbit counts");
    for (long i = 0; i < multiplicity[h]; ++i) {
      pieces.push_back(cosets(group, lattice->at(h).representative));
      s.size_ += pieces.back().size_;
    }
  }
  s.action_.resize(static_cast<size_t>(group->order()) * s.size_);
  int offset = 0;
  for (const auto& piece : pieces) {
    for (int g = 0; g < group->order(); ++g)
      for (int x = 0; x < piece.size_; ++x)
        s.action_[static_cast<size_t>(g) * s.size_ + offset + x] = offset + piece.act(g, x);
    offset += piece.size_;
  }
  return s;
}

ConcreteGSet ConcreteGSet::from_gset(const VirtualGSet& x) {
  if (!x.is_genuine()) fail_input("a concrete G-set needs a genuine (nonnegative integral) input");
  std::vector<long> counts;
  for (const auto& c : x.coeffs()) {
    if (c.get_num() > 100000) fail_input("G-set too large to realize concretely");
    counts.push_back(c.get_num().get_si());
  }
  return from_orbit_counts(x.lattice(), counts);
}

ConcreteGSet ConcreteGSet::product(const ConcreteGSet& o) const {
  if (group_ != o.group_) fail_input("product of sets over different groups");
  ConcreteGSet s;
  s.group_ = group_;
  s.size_ = size_ * o.size_;
  s.action_.resize(static_cast<size_t>(group_->order()) * s.size_);
  for (int g = 0; g < group_->order(); ++g)
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < o.size_; ++b)
        s.action_[static_cast<size_t>(g) * s.size_ + a * o.size_ + b] = act(g, a) * o.size_ + o.act(g, b);
  return s;
}

ConcreteGSet ConcreteGSet::restricted(std::shared_ptr<const GroupModel> sub) const {
  ConcreteGSet s;
  s.size_ = size_;
  s.action_.resize(static_cast<size_t>(sub->order()) * size_);
  for (int h = 0; h < sub->order(); ++h) {
    const int g = sub->parent_index()[h];
    for (int x = 0; x < size_; ++x) s.action_[static_cast<size_t>(h) * size_ + x] = act(g, x);
  }
  s.group_ = std::move(sub);
  return s;
}

std::vector<std::vector<int>> ConcreteGSet::orbits() const {
  std::vector<char> seen(size_, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size_; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (int g = 0; g < group_->order(); ++g) {
      const int y = act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> ConcreteGSet::stabilizer(int x) const {
  std::vector<int> s;
  for (int g = 0; g < group_->order(); ++g)
    if (act(g, x) == x) s.push_back(g);
  return s;
}

VirtualGSet ConcreteGSet::to_virtual(const LatticePtr& lattice) const {
  if (lattice->group().order() != group_->order()) fail_input("lattice does not match the acting group");
  std::vector<Rational> c(lattice->size());
  for (const auto& orb : orbits()) c[lattice->class_of(stabilizer(orb.front()))] += 1;
  return VirtualGSet(lattice, std::move(c));
}

long ConcreteGSet::fixed_points(const std::vector<int>& subgroup) const {
  long n = 0;
  for (int x = 0; x < size_; ++x) {
    bool fixed = true;
    for (int g : subgroup)
      if (act(g, x) != x) {
        fixed = false;
        break;
      }
    n += fixed;
  }
  return n;
}

}  // namespace esm
