#include "esm/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>

#include "esm/error.hpp"
#include "esm/intmatrix.hpp"
#include "esm/numeric.hpp"

namespace esm {

// ---------------------------------------------------------------- descriptor

GroupDescriptor GroupDescriptor::cyclic(long p, long n) {
  if (!is_prime(p)) fail_input("cyclic group: " + std::to_string(p) + " is not prime");
  if (n < 1) fail_input("cyclic group: exponent must be at least 1");
  long N = 1;
  for (long i = 0; i < n; ++i) {
    if (N > GroupModel::kDefaultOrderBound * 64) fail_input("cyclic group: order too large");
    N *= p;
  }
  return {Kind::Cyclic, N};
}

GroupDescriptor GroupDescriptor::cyclic_of_order(long N) {
  if (N < 1) fail_input("cyclic group: order must be positive");
  return {Kind::Cyclic, N};
}

GroupDescriptor GroupDescriptor::dicyclic(long m) {
  if (m < 2) fail_input("dicyclic group: m must be at least 2");
  return {Kind::Dicyclic, m};
}

GroupDescriptor GroupDescriptor::quaternion(long n) {
  if (n < 3) fail_input("generalized quaternion group: n must be at least 3");
  if (n > 20) fail_input("generalized quaternion group: n too large");
  return dicyclic(1L << (n - 2));
}

GroupDescriptor GroupDescriptor::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto number_after = [&](size_t pos) -> long {
    if (pos >= text.size()) fail_input("group label '" + raw + "' is missing its order");
    for (size_t i = pos; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail_input("group label '" + raw + "' is malformed");
    if (text.size() - pos > 9) fail_input("group label '" + raw + "': order too large");
    return std::stol(text.substr(pos));
  };
  if (text.rfind("Dic", 0) == 0) return dicyclic(number_after(3));
  if (!text.empty() && text[0] == 'C') return cyclic_of_order(number_after(1));
  if (!text.empty() && text[0] == 'Q') {
    long order = number_after(1);
    auto pp = prime_power_decomposition(order);
    if (pp.first != 2 || pp.second < 3) fail_input("Q" + std::to_string(order) + ": generalized quaternion order must be 2^n with n >= 3");
    return quaternion(pp.second);
  }
  fail_input("unknown group label '" + raw + "' (expected C<N>, Q<2^n> or Dic<m>)");
}

std::optional<std::pair<long, long>> GroupDescriptor::prime_power() const {
  auto pp = prime_power_decomposition(order());
  if (pp.first == 0) return std::nullopt;
  return pp;
}

std::string GroupDescriptor::label() const {
  if (kind == Kind::Cyclic) return "C" + std::to_string(param);
  auto pp = prime_power_decomposition(order());
  if (pp.first == 2) return "Q" + std::to_string(order());
  return "Dic" + std::to_string(param);
}

// --------------------------------------------------------------------- model

namespace {

std::string power_name(const std::string& base, long e) {
  if (e == 0) return "e";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

GroupModel GroupModel::build(const GroupDescriptor& d) {
  if (d.order() > kDefaultOrderBound * 64) fail_input("group order exceeds the supported bound");
  GroupModel g;
  g.descriptor_ = d;
  g.label_ = d.label();
  const int n = static_cast<int>(d.order());
  g.table_.resize(static_cast<size_t>(n) * n);
  g.inverse_.resize(n);
  g.names_.resize(n);
  if (d.kind == GroupDescriptor::Kind::Cyclic) {
    for (int a = 0; a < n; ++a) {
      g.names_[a] = power_name("g", a);
      g.inverse_[a] = (n - a) % n;
      for (int b = 0; b < n; ++b) g.table_[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  } else {
    // (a, eps) <-> x^a j^eps at index a + 2m*eps; x^{2m} = 1, j^2 = x^m, j x j^{-1} = x^{-1}.
    const int m = static_cast<int>(d.param);
    const int tm = 2 * m;
    auto idx = [tm](int a, int eps) { return ((a % tm) + tm) % tm + tm * eps; };
    for (int u = 0; u < n; ++u) {
      const int a = u % tm, ea = u / tm;
      for (int v = 0; v < n; ++v) {
        const int b = v % tm, eb = v / tm;
        int r;
        if (ea == 0)
          r = idx(a + b, eb);
        else if (eb == 0)
          r = idx(a - b, 1);
        else
          r = idx(a - b + m, 0);
        g.table_[static_cast<size_t>(u) * n + v] = r;
      }
    }
    const bool q8 = (m == 2);
    static const char* q8_names[8] = {"e", "i", "-1", "-i", "j", "k", "-j", "-k"};
    for (int u = 0; u < n; ++u) {
      const int a = u % tm, eps = u / tm;
      if (q8) {
        g.names_[u] = q8_names[u];
      } else if (eps == 0) {
        g.names_[u] = power_name("x", a);
      } else {
        g.names_[u] = (a == 0 ? std::string() : power_name("x", a)) + "j";
      }
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.table_[static_cast<size_t>(u) * n + v] == 0) {
          g.inverse_[u] = v;
          break;
        }
  }
  g.parent_index_.resize(n);
  for (int a = 0; a < n; ++a) g.parent_index_[a] = a;
  return g;
}

int GroupModel::power(int a, long e) const {
  const long ord = element_order(a);
  e = mod_floor(e, ord);
  int r = identity();
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int GroupModel::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long GroupModel::exponent() const {
  long e = 1;
  for (int a = 0; a < order(); ++a) e = lcm_long(e, element_order(a));
  return e;
}

std::vector<int> GroupModel::conjugate_subset(int g, const std::vector<int>& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int h : s) out.push_back(conjugate(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> GroupModel::find(const std::string& element_name) const {
  for (int a = 0; a < order(); ++a)
    if (names_[a] == element_name) return a;
  return std::nullopt;
}

bool GroupModel::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GroupModel::is_cyclic() const {
  for (int a = 0; a < order(); ++a)
    if (element_order(a) == order()) return true;
  return false;
}

std::vector<int> GroupModel::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> members{identity()};
  in[identity()] = 1;
  for (size_t q = 0; q < members.size(); ++q) {
    for (int s : gens) {
      int y = mul(members[q], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<int>> GroupModel::conjugacy_classes() const {
  std::vector<char> seen(order(), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int g = 0; g < order(); ++g) cls.insert(conjugate(g, a));
    for (int c : cls) seen[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

GroupModel GroupModel::subgroup_model(const std::vector<int>& elements, const std::string& label) const {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  if (elems.empty() || elems.front() != identity()) fail_input("subgroup_model: not a subgroup");
  std::vector<int> local(order(), -1);
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  GroupModel h;
  const int n = static_cast<int>(elems.size());
  h.table_.resize(static_cast<size_t>(n) * n);
  h.inverse_.resize(n);
  h.names_.resize(n);
  h.parent_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    h.names_[i] = names_[elems[i]];
    h.parent_index_[i] = elems[i];
    const int inv_local = local[inv(elems[i])];
    if (inv_local < 0) fail_input("subgroup_model: not closed under inverses");
    h.inverse_[i] = inv_local;
    for (int j = 0; j < n; ++j) {
      const int prod = local[mul(elems[i], elems[j])];
      if (prod < 0) fail_input("subgroup_model: not closed under multiplication");
      h.table_[static_cast<size_t>(i) * n + j] = prod;
    }
  }
  h.descriptor_ = identify(h);
  h.label_ = label;
  if (label.empty()) h.label_ = h.descriptor_ ? h.descriptor_->label() : "H";
  return h;
}

std::optional<GroupDescriptor> GroupModel::identify(const GroupModel& g) {
  const long n = g.order();
  if (g.is_cyclic()) return GroupDescriptor::cyclic_of_order(n);
  if (n % 4 == 0 && n >= 8 && !g.is_abelian()) {
    for (int a = 0; a < g.order(); ++a)
      if (g.element_order(a) == n / 2) return GroupDescriptor::dicyclic(n / 4);
  }
  return std::nullopt;
}

bool GroupModel::verify_axioms() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    if (mul(identity(), a) != a || mul(a, identity()) != a) return false;
    if (mul(a, inv(a)) != identity() || mul(inv(a), a) != identity()) return false;
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      if (ab < 0 || ab >= n) return false;
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ abelianization

std::vector<long> Abelianization::add(const std::vector<long>& a, const std::vector<long>& b) const {
  std::vector<long> out(invariants.size());
  for (size_t i = 0; i < invariants.size(); ++i) out[i] = mod_floor(a[i] + b[i], invariants[i]);
  return out;
}

namespace {

// Quotient of a table group by a normal subgroup; returns the coset index of
// each element and fills the quotient table.
std::vector<int> quotient_by(int order, const std::vector<int>& table, const std::vector<char>& normal_sub,
                             int& q_order, std::vector<int>& q_table) {
  std::vector<int> coset(order, -1);
  std::vector<int> reps;
  for (int a = 0; a < order; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h = 0; h < order; ++h)
      if (normal_sub[h]) coset[table[static_cast<size_t>(a) * order + h]] = id;
  }
  q_order = static_cast<int>(reps.size());
  q_table.assign(static_cast<size_t>(q_order) * q_order, 0);
  for (int i = 0; i < q_order; ++i)
    for (int j = 0; j < q_order; ++j)
      q_table[static_cast<size_t>(i) * q_order + j] = coset[table[static_cast<size_t>(reps[i]) * order + reps[j]]];
  return coset;
}

std::vector<char> closure(int order, const std::vector<int>& table, const std::vector<int>& gens) {
  std::vector<char> in(order, 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (size_t q = 0; q < members.size(); ++q)
    for (int s : gens) {
      const int y = table[static_cast<size_t>(members[q]) * order + s];
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return in;
}

int table_order_of(int order, const std::vector<int>& table, int a) {
  int k = 1, x = a;
  while (x != 0) {
    x = table[static_cast<size_t>(x) * order + a];
    ++k;
  }
  return k;
}

}  // namespace

Abelianization abelianize(int order, const std::vector<int>& table) {
  auto mul = [&](int a, int b) { return table[static_cast<size_t>(a) * order + b]; };
  std::vector<int> inv(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == 0) {
        inv[a] = b;
        break;
      }
  std::set<int> comms;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) comms.insert(mul(mul(a, b), mul(inv[a], inv[b])));
  const std::vector<char> derived = closure(order, table, std::vector<int>(comms.begin(), comms.end()));

  int q = 0;
  std::vector<int> qt;
  const std::vector<int> coset = quotient_by(order, table, derived, q, qt);

  Abelianization ab;
  if (q == 1) {
    ab.coords.assign(order, {});
    return ab;
  }

  // Greedy generating set, largest element order first.
  std::vector<int> by_order(q);
  for (int a = 0; a < q; ++a) by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return table_order_of(q, qt, a) > table_order_of(q, qt, b);
  });
  std::vector<int> gens;
  std::vector<char> span = closure(q, qt, gens);
  for (int a : by_order) {
    if (span[a]) continue;
    gens.push_back(a);
    span = closure(q, qt, gens);
  }
  const size_t r = gens.size();

  // Spanning-tree words, then Schreier relations word(a) + e_i - word(a g_i).
  std::vector<std::vector<Integer>> word(q);
  std::vector<char> reached(q, 0);
  word[0].assign(r, Integer(0));
  reached[0] = 1;
  std::deque<int> bfs{0};
  while (!bfs.empty()) {
    const int a = bfs.front();
    bfs.pop_front();
    for (size_t i = 0; i < r; ++i) {
      const int b = qt[static_cast<size_t>(a) * q + gens[i]];
      if (reached[b]) continue;
      reached[b] = 1;
      word[b] = word[a];
      word[b][i] += 1;
      bfs.push_back(b);
    }
  }
  std::set<std::vector<Integer>> rel_set;
  for (int a = 0; a < q; ++a)
    for (size_t i = 0; i < r; ++i) {
      const int b = qt[static_cast<size_t>(a) * q + gens[i]];
      std::vector<Integer> rel(r);
      bool nonzero = false;
      for (size_t k = 0; k < r; ++k) {
        rel[k] = word[a][k] - word[b][k] + (k == i ? 1 : 0);
        if (rel[k] != 0) nonzero = true;
      }
      if (nonzero) rel_set.insert(rel);
    }
  IntMatrix rels = IntMatrix::from_rows(std::vector<std::vector<Integer>>(rel_set.begin(), rel_set.end()));
  SmithForm f = smith_normal_form(rels);
  if (f.rank != r) fail_internal("abelianize: relation lattice is not of full rank");

  std::vector<size_t> kept;
  for (size_t i = 0; i < r; ++i)
    if (f.D(i, i) > 1) {
      kept.push_back(i);
      ab.invariants.push_back(f.D(i, i).get_si());
    }
  std::vector<std::vector<long>> qcoords(q);
  for (int a = 0; a < q; ++a) {
    std::vector<long> c;
    for (size_t idx = 0; idx < kept.size(); ++idx) {
      const size_t col = kept[idx];
      Integer s = 0;
      for (size_t k = 0; k < r; ++k) s += word[a][k] * f.V(k, col);
      Integer m;
      mpz_fdiv_r_ui(m.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(ab.invariants[idx]));
      c.push_back(m.get_si());
    }
    qcoords[a] = std::move(c);
  }
  ab.coords.resize(order);
  for (int a = 0; a < order; ++a) ab.coords[a] = qcoords[coset[a]];
  return ab;
}

// --------------------------------------------------------- subgroup classes

namespace {

WeylGroup weyl_group(const GroupModel& g, const std::vector<int>& h, const std::vector<int>& normalizer) {
  const int nn = static_cast<int>(normalizer.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < nn; ++i) local[normalizer[i]] = i;
  std::vector<int> ntable(static_cast<size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) ntable[static_cast<size_t>(i) * nn + j] = local[g.mul(normalizer[i], normalizer[j])];
  std::vector<char> hmask(nn, 0);
  for (int x : h) hmask[local[x]] = 1;

  int q = 0;
  std::vector<int> qt;
  const std::vector<int> coset = quotient_by(nn, ntable, hmask, q, qt);
  WeylGroup w;
  w.order = q;
  w.cyclic = false;
  for (int a = 0; a < q; ++a)
    if (table_order_of(q, qt, a) == q) w.cyclic = true;
  w.ab = abelianize(q, qt);
  // Re-express abelianization coordinates per normalizer element.
  Abelianization per_coset = w.ab;
  w.coords_of_element.assign(g.order(), {});
  for (int i = 0; i < nn; ++i) w.coords_of_element[normalizer[i]] = per_coset.coords[coset[i]];
  return w;
}

std::string generator_label(const GroupModel& g, const std::vector<int>& rep) {
  // Smallest generating set drawn from the representative, lexicographic by index.
  std::vector<int> nontrivial(rep.begin() + 1, rep.end());
  for (int a : nontrivial)
    if (g.generated_subgroup({a}) == rep) return "<" + g.name(a) + ">";
  for (size_t i = 0; i < nontrivial.size(); ++i)
    for (size_t j = i + 1; j < nontrivial.size(); ++j)
      if (g.generated_subgroup({nontrivial[i], nontrivial[j]}) == rep)
        return "<" + g.name(nontrivial[i]) + "," + g.name(nontrivial[j]) + ">";
  std::string s = "<";
  for (size_t i = 0; i < nontrivial.size(); ++i) s += (i ? "," : "") + g.name(nontrivial[i]);
  return s + ">";
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const GroupModel& g, long order_bound) {
  if (g.order() > order_bound)
    fail_input("subgroup enumeration: group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(order_bound));
  std::set<std::vector<int>> cyclic_subs;
  std::map<std::vector<int>, int> cyclic_gen;
  for (int a = 0; a < g.order(); ++a) {
    auto s = g.generated_subgroup({a});
    if (cyclic_subs.insert(s).second) cyclic_gen[s] = a;
  }
  // Close under joins with cyclic subgroups; every subgroup is such a join.
  std::map<std::vector<int>, std::vector<int>> gens_of;
  for (const auto& [s, a] : cyclic_gen) gens_of[s] = {a};
  std::vector<std::vector<int>> work;
  for (const auto& [s, _] : gens_of) work.push_back(s);
  for (size_t w = 0; w < work.size(); ++w) {
    const std::vector<int> base = work[w];
    const std::vector<int> base_gens = gens_of[base];
    std::vector<char> in(g.order(), 0);
    for (int x : base) in[x] = 1;
    for (const auto& [c, a] : cyclic_gen) {
      if (in[a]) continue;
      std::vector<int> gens = base_gens;
      gens.push_back(a);
      auto j = g.generated_subgroup(gens);
      if (gens_of.emplace(j, gens).second) work.push_back(j);
    }
  }

  std::vector<SubgroupClass> classes;
  std::set<std::vector<int>> assigned;
  for (const auto& [s, _] : gens_of) {
    if (assigned.count(s)) continue;
    std::set<std::vector<int>> conj;
    for (int x = 0; x < g.order(); ++x) conj.insert(g.conjugate_subset(x, s));
    SubgroupClass c;
    c.conjugates.assign(conj.begin(), conj.end());
    c.representative = c.conjugates.front();
    c.order = static_cast<int>(s.size());
    c.index = g.order() / c.order;
    for (const auto& t : conj) assigned.insert(t);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });

  for (size_t i = 0; i < classes.size(); ++i) {
    SubgroupClass& c = classes[i];
    c.id = static_cast<int>(i);
    c.cyclic = false;
    for (int a : c.representative)
      if (g.element_order(a) == c.order) c.cyclic = true;
    for (int x = 0; x < g.order(); ++x)
      if (g.conjugate_subset(x, c.representative) == c.representative) c.normalizer.push_back(x);
    c.weyl = weyl_group(g, c.representative, c.normalizer);
  }

  // Labels: "e", the group label, order-unique names, then generator labels.
  for (auto& c : classes) {
    int same_order = 0, same_kind = 0;
    for (const auto& o : classes) {
      if (o.order != c.order) continue;
      ++same_order;
      if (o.cyclic == c.cyclic) ++same_kind;
    }
    std::string kind_name;
    if (c.cyclic) {
      kind_name = "C" + std::to_string(c.order);
    } else {
      auto pp = prime_power_decomposition(c.order);
      kind_name = (pp.first == 2 ? "Q" + std::to_string(c.order) : "Dic" + std::to_string(c.order / 4));
    }
    const std::string gen = generator_label(g, c.representative);
    if (c.order == 1) {
      c.label = "e";
      c.aliases = {"e", "1", "C1"};
    } else if (c.order == g.order()) {
      c.label = g.label();
      c.aliases = {g.label(), "G"};
      if (kind_name != g.label()) c.aliases.push_back(kind_name);
    } else if (same_order == 1) {
      c.label = kind_name;
      c.aliases = {kind_name};
    } else {
      c.label = gen;
      c.aliases = {gen};
      if (same_kind == 1) c.aliases.push_back(kind_name);
    }
    if (std::find(c.aliases.begin(), c.aliases.end(), gen) == c.aliases.end() && c.order > 1) c.aliases.push_back(gen);
  }
  return classes;
}

std::vector<std::vector<long>> table_of_marks(const GroupModel& g, const std::vector<SubgroupClass>& classes) {
  const size_t r = classes.size();
  std::vector<std::vector<long>> marks(r, std::vector<long>(r, 0));
  for (size_t h = 0; h < r; ++h) {
    const auto& H = classes[h].representative;
    std::vector<char> in_h(g.order(), 0);
    for (int x : H) in_h[x] = 1;
    // One representative per left coset aH.
    std::vector<char> covered(g.order(), 0);
    std::vector<int> coset_reps;
    for (int a = 0; a < g.order(); ++a) {
      if (covered[a]) continue;
      coset_reps.push_back(a);
      for (int x : H) covered[g.mul(a, x)] = 1;
    }
    for (size_t k = 0; k < r; ++k) {
      const auto& K = classes[k].representative;
      long count = 0;
      // aH is K-fixed iff a^{-1} K a <= H.
      for (int a : coset_reps) {
        bool fixed = true;
        for (int y : K)
          if (!in_h[g.conjugate(g.inv(a), y)]) {
            fixed = false;
            break;
          }
        if (fixed) ++count;
      }
      marks[h][k] = count;
    }
  }
  return marks;
}

SubgroupLattice::SubgroupLattice(std::shared_ptr<const GroupModel> group, long order_bound)
    : group_(std::move(group)), classes_(subgroup_classes(*group_, order_bound)) {
  for (const auto& c : classes_)
    for (const auto& s : c.conjugates) subgroup_class_[s] = c.id;
  marks_ = esm::table_of_marks(*group_, classes_);
}

int SubgroupLattice::class_of(const std::vector<int>& s) const {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  auto it = subgroup_class_.find(sorted);
  if (it == subgroup_class_.end()) fail_input("class_of: not a subgroup of " + group_->label());
  return it->second;
}

std::optional<int> SubgroupLattice::find_class(const std::string& label) const {
  for (const auto& c : classes_)
    for (const auto& a : c.aliases)
      if (a == label) return c.id;
  return std::nullopt;
}

std::shared_ptr<const SubgroupLattice> SubgroupLattice::subgroup_lattice(size_t h) const {
  std::lock_guard<std::mutex> lock(sub_mu_);
  auto it = sub_cache_.find(h);
  if (it != sub_cache_.end()) return it->second;
  auto model = std::make_shared<const GroupModel>(group_->subgroup_model(at(h).representative));
  auto lat = std::make_shared<const SubgroupLattice>(model);
  sub_cache_[h] = lat;
  return lat;
}

std::shared_ptr<const SubgroupLattice> lattice_for(const GroupDescriptor& d) {
  static std::mutex mu;
  static std::map<GroupDescriptor, std::shared_ptr<const SubgroupLattice>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  auto model = std::make_shared<const GroupModel>(GroupModel::build(d));
  auto lat = std::make_shared<const SubgroupLattice>(model);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, lat).first->second;
}

}  // namespace esm
