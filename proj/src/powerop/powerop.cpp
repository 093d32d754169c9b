#include "esm/powerop.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "esm/error.hpp"

namespace esm {

EtaClass operator+(EtaClass a, EtaClass b) { return EtaClass{(a.coeff + b.coeff) % 2}; }

EtaClass sq1_int(const Integer& n) {
  const long r = mpz_fdiv_ui(n.get_mpz_t(), 4);
  return EtaClass{r >= 2 ? 1 : 0};
}

Pi1Element::Pi1Element(LatticePtr lattice) : lattice_(std::move(lattice)) {
  for (const auto& c : lattice_->classes()) parts_.push_back({0, c.weyl.ab.zero()});
}

bool Pi1Element::is_zero() const {
  for (const auto& p : parts_) {
    if (p.sign != 0) return false;
    for (long x : p.weyl)
      if (x != 0) return false;
  }
  return true;
}

Pi1Element& Pi1Element::operator+=(const Pi1Element& o) {
  if (lattice_ != o.lattice_) fail_input("pi_1 elements over different groups");
  for (size_t h = 0; h < parts_.size(); ++h) {
    parts_[h].sign = (parts_[h].sign + o.parts_[h].sign) % 2;
    parts_[h].weyl = lattice_->at(h).weyl.ab.add(parts_[h].weyl, o.parts_[h].weyl);
  }
  return *this;
}

bool operator==(const Pi1Element& a, const Pi1Element& b) {
  return a.lattice_ == b.lattice_ && a.parts_ == b.parts_;
}

std::string Pi1Element::weyl_element_name(size_t h) const {
  const auto& c = lattice_->at(h);
  for (int g : c.normalizer)
    if (c.weyl.coords_of_element[g] == parts_.at(h).weyl) return lattice_->group().name(g);
  fail_internal("Weyl coordinate not hit by any normalizer element");
}

std::string Pi1Element::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t h = 0; h < parts_.size(); ++h) {
    const auto& p = parts_[h];
    const bool weyl_zero = std::all_of(p.weyl.begin(), p.weyl.end(), [](long x) { return x == 0; });
    if (p.sign == 0 && weyl_zero) continue;
    const std::string orbit = "[" + lattice_->group().label() + "/" + lattice_->at(h).label + "]";
    os << (first ? "" : " + ") << orbit << ": (" << (p.sign ? "eta" : "0") << ", " << weyl_element_name(h) << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

// A finite G-set as a raw action table act[g * n + x].
struct Action {
  int n = 0;
  std::vector<int> act;
  int operator()(int g, int x) const { return act[static_cast<size_t>(g) * n + x]; }
};

struct Choices {
  std::mt19937_64* rng = nullptr;  // null: canonical choices
  size_t pick(size_t count) {
    if (!rng) return 0;
    return std::uniform_int_distribution<size_t>(0, count - 1)(*rng);
  }
};

Action action_of(const VirtualGSet& t) {
  if (!t.is_genuine()) fail_input("Sq1 is only defined here on genuine G-sets, got " + t.to_string());
  const auto c = ConcreteGSet::from_gset(t);
  Action a;
  a.n = c.size();
  const int order = c.group().order();
  a.act.resize(static_cast<size_t>(order) * a.n);
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < a.n; ++x) a.act[static_cast<size_t>(g) * a.n + x] = c.act(g, x);
  return a;
}

// Same G-set with its points renamed by perm (old point x becomes perm[x]).
Action relabeled(const Action& a, int order, const std::vector<int>& perm) {
  Action b;
  b.n = a.n;
  b.act.resize(a.act.size());
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < a.n; ++x) b.act[static_cast<size_t>(g) * a.n + perm[x]] = perm[a(g, x)];
  return b;
}

int sign_of(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int parity = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) % 2);
  }
  return parity;
}

Pi1Element compute(const LatticePtr& lattice, const Action& t, Choices choice) {
  const GroupModel& G = lattice->group();
  const int order = G.order();
  const int n = t.n * t.n;
  auto act = [&](int g, int pt) { return t(g, pt / t.n) * t.n + t(g, pt % t.n); };
  auto swap = [&](int pt) { return (pt % t.n) * t.n + pt / t.n; };

  // Orbits of T x T.
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    std::vector<int> pts;
    for (int g = 0; g < order; ++g) {
      const int y = act(g, x);
      if (orbit_of[y] < 0) {
        orbit_of[y] = static_cast<int>(orbits.size());
        pts.push_back(y);
      }
    }
    std::sort(pts.begin(), pts.end());
    orbits.push_back(std::move(pts));
  }
  const size_t m = orbits.size();
  if (choice.rng) {
    // Random enumeration order of the orbits.
    std::vector<size_t> order_perm(m);
    std::iota(order_perm.begin(), order_perm.end(), 0);
    std::shuffle(order_perm.begin(), order_perm.end(), *choice.rng);
    std::vector<std::vector<int>> shuffled(m);
    for (size_t i = 0; i < m; ++i) shuffled[order_perm[i]] = std::move(orbits[i]);
    orbits = std::move(shuffled);
    for (size_t i = 0; i < m; ++i)
      for (int y : orbits[i]) orbit_of[y] = static_cast<int>(i);
  }

  // Representative r_O, its class K and c_O with Stab(r_O) = c_O K c_O^{-1}.
  std::vector<int> rep(m), cls(m), conj(m);
  for (size_t i = 0; i < m; ++i) {
    rep[i] = orbits[i][choice.pick(orbits[i].size())];
    std::vector<int> stab;
    for (int g = 0; g < order; ++g)
      if (act(g, rep[i]) == rep[i]) stab.push_back(g);
    cls[i] = lattice->class_of(stab);
    const auto& K = lattice->at(cls[i]).representative;
    std::vector<int> cands;
    for (int g = 0; g < order; ++g)
      if (G.conjugate_subset(g, K) == stab) cands.push_back(g);
    if (cands.empty()) fail_internal("stabilizer not conjugate to its class representative");
    conj[i] = cands[choice.pick(cands.size())];
  }

  Pi1Element out(lattice);
  // Per class, the permutation sigma induced by the swap on the orbits of that class.
  std::vector<std::vector<size_t>> members(lattice->size());
  std::vector<size_t> slot(m);
  for (size_t i = 0; i < m; ++i) {
    slot[i] = members[cls[i]].size();
    members[cls[i]].push_back(i);
  }
  std::vector<std::vector<int>> sigma(lattice->size());
  for (size_t h = 0; h < lattice->size(); ++h) sigma[h].resize(members[h].size());

  for (size_t i = 0; i < m; ++i) {
    const int image = swap(rep[i]);
    const size_t j = static_cast<size_t>(orbit_of[image]);
    if (cls[j] != cls[i]) fail_internal("swap moved an orbit to a different orbit type");
    sigma[cls[i]][slot[i]] = static_cast<int>(slot[j]);
    int y = -1;
    for (int g = 0; g < order && y < 0; ++g)
      if (act(g, rep[j]) == image) y = g;
    if (y < 0) fail_internal("swap image not in the expected orbit");
    // The G-map G/K -> G/K, aK -> a w K, with w = c_i^{-1} y c_j.
    const int w = G.mul(G.mul(G.inv(conj[i]), y), conj[j]);
    const auto& c = lattice->at(cls[i]);
    if (!std::binary_search(c.normalizer.begin(), c.normalizer.end(), w))
      fail_internal("swap component does not normalize the stabilizer");
    auto& part = out.component(cls[i]);
    part.weyl = c.weyl.ab.add(part.weyl, c.weyl.coords_of_element[w]);
  }
  for (size_t h = 0; h < lattice->size(); ++h) out.component(h).sign = sign_of(sigma[h]);
  return out;
}

}  // namespace

EtaClass underlying(const Pi1Element& x) {
  const auto& lat = *x.lattice();
  const GroupModel& G = lat.group();
  int parity = 0;
  for (size_t h = 0; h < lat.size(); ++h) {
    const auto& c = lat.at(h);
    const auto& part = x.component(h);
    parity += part.sign * (c.index % 2);
    int w = -1;
    for (int g : c.normalizer)
      if (c.weyl.coords_of_element[g] == part.weyl) {
        w = g;
        break;
      }
    if (w < 0) fail_internal("Weyl coordinate not hit by any normalizer element");
    std::vector<int> coset_of(G.order(), -1);
    int count = 0;
    for (int a = 0; a < G.order(); ++a) {
      if (coset_of[a] >= 0) continue;
      for (int y : c.representative) coset_of[G.mul(a, y)] = count;
      ++count;
    }
    std::vector<int> perm(count);
    for (int a = 0; a < G.order(); ++a) perm[coset_of[a]] = coset_of[G.mul(a, w)];
    parity += sign_of(perm);
  }
  return EtaClass{parity % 2};
}

Pi1Element sq1_gset(const VirtualGSet& t) { return compute(t.lattice(), action_of(t), Choices{}); }

bool sq1_consistency(const VirtualGSet& t, int trials, std::uint64_t seed) {
  const Action base = action_of(t);
  const Pi1Element expected = compute(t.lattice(), base, Choices{});
  std::mt19937_64 rng(seed);
  const int order = t.lat().group().order();
  for (int k = 0; k < trials; ++k) {
    std::vector<int> perm(base.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!(compute(t.lattice(), relabeled(base, order, perm), Choices{&rng}) == expected)) return false;
  }
  return true;
}

}  // namespace esm
