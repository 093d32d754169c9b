#include <doctest.h>

#include "esm/burnside.hpp"
#include "esm/error.hpp"
#include "test_support.hpp"

using namespace esm;
using esm::testing::lattice;
using esm::testing::random_gset;
using esm::testing::uniform;

namespace {

std::vector<Rational> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

VirtualGSet orb(const LatticePtr& lat, const std::string& label, long mult = 1) {
  return VirtualGSet::orbit(lat, label, mult);
}

}  // namespace

TEST_CASE("marks") {
  auto c4 = lattice("C4");
  auto c2 = lattice("C2");
  CHECK(marks(orb(c4, "C2")) == R({2, 2, 0}));
  CHECK(marks(orb(c2, "e")) == R({2, 0}));
  CHECK(marks(orb(c4, "e", 2) + orb(c4, "C4")) == R({9, 1, 1}));
}

TEST_CASE("products") {
  auto c2 = lattice("C2");
  auto h = orb(c2, "e");
  CHECK(bmul(h, h) == orb(c2, "e", 2));
  CHECK(bpow(h, 3) == orb(c2, "e", 4));
  auto c4 = lattice("C4");
  auto x = orb(c4, "C2");
  CHECK(bmul(x, x) == orb(c4, "C2", 2));
  for (int i = 0; i < 50; ++i) {
    auto y = random_gset(c4);
    CHECK(bmul(VirtualGSet::unit(c4), y) == y);
  }
  CHECK_THROWS_AS(bmul(h, x), InputError);
}

TEST_CASE("from_marks") {
  auto c2 = lattice("C2");
  CHECK(from_marks(c2, R({2, 0})) == orb(c2, "e"));
  CHECK(from_marks(c2, R({1, 1})) == orb(c2, "C2"));
  CHECK_THROWS_AS(from_marks(c2, R({1, 0})), InputError);
  auto local = from_marks(c2, R({1, 0}), 3);
  CHECK(local.coeff(0) == make_rational(1, 2));
  CHECK_THROWS_AS(from_marks(c2, R({1, 0}), 2), InputError);
}

TEST_CASE("cardinality") {
  auto c2 = lattice("C2");
  auto d = cardinality(orb(c2, "e"), 2);
  CHECK(d.t == 1);
  CHECK(d.c == 1);
  d = cardinality(orb(c2, "e", 12), 2);
  CHECK(d.t == 3);
  CHECK(d.c == 3);
  CHECK_THROWS_AS(cardinality(orb(c2, "e") - orb(c2, "C2", 2), 2), InputError);
  for (long p : {2, 3, 5})
    for (long n = 1; n <= 3; ++n) {
      auto lat = lattice_for(GroupDescriptor::cyclic(p, n));
      for (long i = 0; i <= n; ++i)
        for (long s = 0; s <= 2; ++s) {
          auto x = VirtualGSet::orbit(lat, i, ipow(p, s));
          auto cd = cardinality(x, p);
          CHECK(cd.t == s + n - i);
          CHECK(cd.c == 1);
        }
    }
}

TEST_CASE("restriction and induction") {
  auto c4 = lattice("C4");
  auto c2_in_c4 = c4->subgroup_lattice(1);
  CHECK(restrict_to(orb(c4, "e"), 1) == orb(c2_in_c4, "e", 2));
  CHECK(restrict_to(orb(c4, "C2"), 1) == orb(c2_in_c4, "C2", 2));
  auto triv = c4->subgroup_lattice(0);
  for (int i = 0; i < 20; ++i) {
    auto x = random_gset(c4);
    CHECK(restrict_to(x, 0) == VirtualGSet::unit(triv) * virtual_cardinality(x));
  }
  auto c2 = lattice("C2");
  CHECK(induce_from(c2, 0, VirtualGSet::unit(c2->subgroup_lattice(0))) == orb(c2, "e"));
  CHECK(induce_from(c4, 0, VirtualGSet::unit(triv)) == orb(c4, "e"));
  CHECK(induce_from(c4, 1, VirtualGSet::unit(c2_in_c4)) == orb(c4, "C2"));
  CHECK_THROWS_AS(induce_from(c4, 1, VirtualGSet::unit(triv)), InputError);
}

TEST_CASE("marks are a ring homomorphism and invert") {
  for (const char* label : {"C2", "C4", "C8", "C9", "Q8", "Q16", "Dic3"}) {
    auto lat = lattice(label);
    for (int trial = 0; trial < 1000; ++trial) {
      auto x = random_gset(lat), y = random_gset(lat);
      auto mx = marks(x), my = marks(y), mxy = marks(bmul(x, y)), ms = marks(x + y);
      for (size_t k = 0; k < lat->size(); ++k) {
        REQUIRE(mxy[k] == mx[k] * my[k]);
        REQUIRE(ms[k] == mx[k] + my[k]);
      }
      REQUIRE(from_marks(lat, mx) == x);
    }
  }
}

TEST_CASE("Frobenius reciprocity") {
  for (const char* label : {"C4", "C8", "Q8", "Q16"}) {
    auto lat = lattice(label);
    for (int trial = 0; trial < 100; ++trial) {
      const size_t h = static_cast<size_t>(uniform(0, static_cast<long>(lat->size()) - 1));
      auto sub = lat->subgroup_lattice(h);
      auto x = random_gset(lat);
      auto y = random_gset(sub);
      REQUIRE(induce_from(lat, h, bmul(restrict_to(x, h), y)) == bmul(x, induce_from(lat, h, y)));
    }
  }
}

TEST_CASE("cardinality of products") {
  auto lat = lattice("C8");
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_gset(lat), y = random_gset(lat);
    const Rational nx = virtual_cardinality(x), ny = virtual_cardinality(y);
    if (nx == 0 || ny == 0) continue;
    REQUIRE(cardinality(bmul(x, y), 2).t == valuation(nx * ny, 2));
  }
}

TEST_CASE("concrete orbit products agree with the mark calculus") {
  for (const char* label : {"C2", "C4", "C8", "Q8", "Q16"}) {
    auto lat = lattice(label);
    for (size_t a = 0; a < lat->size(); ++a)
      for (size_t b = 0; b < lat->size(); ++b) {
        auto s = ConcreteGSet::cosets(lat->group_ptr(), lat->at(a).representative)
                     .product(ConcreteGSet::cosets(lat->group_ptr(), lat->at(b).representative));
        REQUIRE(s.to_virtual(lat) == bmul(VirtualGSet::orbit(lat, a), VirtualGSet::orbit(lat, b)));
        for (size_t k = 0; k < lat->size(); ++k)
          REQUIRE(s.fixed_points(lat->at(k).representative) == lat->mark(a, k) * lat->mark(b, k));
      }
  }
}

TEST_CASE("rendering") {
  auto c4 = lattice("C4");
  CHECK((orb(c4, "C2", 2) - orb(c4, "C4")).to_string() == "2[C4/C2] - [C4/C4]");
  CHECK(VirtualGSet(c4).to_string() == "0");
}
