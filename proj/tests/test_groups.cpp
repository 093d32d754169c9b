#include <doctest.h>

#include <set>

#include "esm/error.hpp"
#include "esm/groups.hpp"

using namespace esm;

namespace {

GroupModel build(const std::string& label) { return GroupModel::build(GroupDescriptor::parse(label)); }

// Every subgroup, by checking closure of every subset containing the identity.
std::set<std::vector<int>> all_subgroups_by_subsets(const GroupModel& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (unsigned long mask = 1; mask < (1UL << n); mask += 2) {
    std::vector<int> s;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    std::vector<char> in(n, 0);
    for (int a : s) in[a] = 1;
    bool closed = true;
    for (int a : s) {
      for (int b : s)
        if (!in[g.mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("descriptors") {
  CHECK(GroupDescriptor::parse("C4") == GroupDescriptor::cyclic(2, 2));
  CHECK(GroupDescriptor::parse("Q8") == GroupDescriptor::dicyclic(2));
  CHECK(GroupDescriptor::parse("Q16") == GroupDescriptor::quaternion(4));
  CHECK(GroupDescriptor::parse("Dic3").order() == 12);
  CHECK(GroupDescriptor::dicyclic(3).label() == "Dic3");
  CHECK(GroupDescriptor::quaternion(5).label() == "Q32");
  CHECK(*GroupDescriptor::parse("C27").prime_power() == std::pair<long, long>{3, 3});
  CHECK_THROWS_AS(GroupDescriptor::parse("Q12"), InputError);
  CHECK_THROWS_AS(GroupDescriptor::parse("S3"), InputError);
  CHECK_THROWS_AS(GroupDescriptor::cyclic(4, 1), InputError);
  CHECK_THROWS_AS(GroupDescriptor::dicyclic(1), InputError);
}

TEST_CASE("small groups") {
  CHECK(build("C4").order() == 4);
  auto q8 = build("Q8");
  CHECK(q8.order() == 8);
  int center = 0;
  for (int a = 0; a < 8; ++a) {
    bool central = true;
    for (int b = 0; b < 8; ++b) central = central && q8.mul(a, b) == q8.mul(b, a);
    center += central;
  }
  CHECK(center == 2);
  const int j = *q8.find("j"), x = *q8.find("i");
  CHECK(q8.power(j, 4) == 0);
  CHECK(q8.power(j, 2) == q8.power(x, 2));
  CHECK(q8.conjugate(j, x) == q8.inv(x));
  CHECK(q8.mul(x, j) == *q8.find("k"));
  CHECK_FALSE(q8.is_abelian());
  CHECK(q8.exponent() == 4);
}

TEST_CASE("group axioms hold for all built groups of order <= 64") {
  for (long N = 1; N <= 64; ++N) CHECK_MESSAGE(GroupModel::build(GroupDescriptor::cyclic_of_order(N)).verify_axioms(), N);
  for (long m = 2; m <= 16; ++m) CHECK_MESSAGE(GroupModel::build(GroupDescriptor::dicyclic(m)).verify_axioms(), m);
}

TEST_CASE("subgroup classes of C4 and Q8") {
  auto c4 = lattice_for(GroupDescriptor::parse("C4"));
  REQUIRE(c4->size() == 3);
  CHECK(c4->at(0).label == "e");
  CHECK(c4->at(1).label == "C2");
  CHECK(c4->at(2).label == "C4");

  auto q8 = lattice_for(GroupDescriptor::parse("Q8"));
  REQUIRE(q8->size() == 6);
  std::vector<std::string> labels;
  for (const auto& c : q8->classes()) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"e", "C2", "<i>", "<j>", "<k>", "Q8"});
  CHECK(q8->at(0).weyl.ab.invariants == std::vector<long>{2, 2});
  CHECK(q8->at(2).weyl.order == 2);
  CHECK(q8->at(1).weyl.ab.invariants == std::vector<long>{2, 2});
  CHECK(q8->find_class("Z") == std::nullopt);
  CHECK(q8->find_class("<j>") == 3);
}

TEST_CASE("subgroup classes partition all subgroups for |G| <= 16") {
  std::vector<GroupDescriptor> groups;
  for (long N = 1; N <= 16; ++N) groups.push_back(GroupDescriptor::cyclic_of_order(N));
  for (long m = 2; m <= 4; ++m) groups.push_back(GroupDescriptor::dicyclic(m));
  for (const auto& d : groups) {
    auto lat = lattice_for(d);
    auto subs = all_subgroups_by_subsets(lat->group());
    size_t total = 0;
    std::set<std::vector<int>> seen;
    for (const auto& c : lat->classes()) {
      for (const auto& s : c.conjugates) {
        CHECK(subs.count(s) == 1);
        CHECK(seen.insert(s).second);
        ++total;
      }
    }
    CHECK_MESSAGE(total == subs.size(), d.label());
  }
}

TEST_CASE("tables of marks") {
  auto c2 = lattice_for(GroupDescriptor::parse("C2"));
  CHECK(c2->table_of_marks() == std::vector<std::vector<long>>{{2, 0}, {1, 1}});
  auto c4 = lattice_for(GroupDescriptor::parse("C4"));
  CHECK(c4->table_of_marks() == std::vector<std::vector<long>>{{4, 0, 0}, {2, 2, 0}, {1, 1, 1}});
  for (const char* label : {"C8", "C9", "C12", "Q8", "Q16", "Dic3", "Q32"}) {
    auto lat = lattice_for(GroupDescriptor::parse(label));
    for (size_t h = 0; h < lat->size(); ++h) {
      CHECK(lat->mark(h, 0) == lat->at(h).index);
      CHECK(lat->mark(h, h) > 0);
      for (size_t k = h + 1; k < lat->size(); ++k) CHECK(lat->mark(h, k) == 0);
    }
  }
}

TEST_CASE("cyclic p-groups: n+1 classes with cyclic Weyl groups") {
  for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {2, 5}, {3, 3}}) {
    auto lat = lattice_for(GroupDescriptor::cyclic(p, n));
    REQUIRE(lat->size() == static_cast<size_t>(n + 1));
    long order = 1;
    for (const auto& c : lat->classes()) {
      CHECK(c.order == order);
      CHECK(c.weyl.cyclic);
      CHECK(c.weyl.order == lat->group().order() / order);
      if (c.weyl.order > 1) CHECK(c.weyl.ab.invariants == std::vector<long>{c.weyl.order});
      order *= p;
    }
  }
}

TEST_CASE("abelianization coordinates are homomorphic") {
  for (const char* label : {"Q8", "Q16", "Dic3", "C12"}) {
    auto lat = lattice_for(GroupDescriptor::parse(label));
    const auto& g = lat->group();
    for (const auto& c : lat->classes()) {
      const auto& w = c.weyl;
      long size = 1;
      for (long d : w.ab.invariants) size *= d;
      std::set<std::vector<long>> image;
      for (int a : c.normalizer) {
        image.insert(w.coords_of_element[a]);
        for (int b : c.normalizer)
          REQUIRE(w.ab.add(w.coords_of_element[a], w.coords_of_element[b]) == w.coords_of_element[g.mul(a, b)]);
      }
      CHECK(static_cast<long>(image.size()) == size);
    }
  }
}

TEST_CASE("subgroup models identify themselves") {
  auto lat = lattice_for(GroupDescriptor::parse("Q16"));
  for (const auto& c : lat->classes()) {
    auto h = lat->group().subgroup_model(c.representative, c.label);
    REQUIRE(h.descriptor().has_value());
    CHECK(h.descriptor()->order() == c.order);
    CHECK(h.verify_axioms());
  }
  CHECK_THROWS_AS(lattice_for(GroupDescriptor::parse("Q8"))->group().subgroup_model({0, 1}, "bad"), InputError);
}

TEST_CASE("subgroup enumeration bound") {
  auto g = GroupModel::build(GroupDescriptor::cyclic_of_order(600));
  CHECK_THROWS_AS(subgroup_classes(g), InputError);
}
