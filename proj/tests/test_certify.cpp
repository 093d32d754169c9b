#include <doctest.h>

#include "esm/certify.hpp"
#include "esm/error.hpp"
#include "test_support.hpp"

using namespace esm;
using namespace esm::testing;

namespace {

VirtualRep L(const RingPtr& r, long a, long mult = 1) { return rep_line(r, a) * Rational(mult); }

VirtualGSet orbit(const RingPtr& r, const std::string& label, long mult = 1) {
  return VirtualGSet::orbit(r->lattice(), label, mult);
}

VirtualGSet free_orbit(const RingPtr& r, long mult = 1) { return VirtualGSet::free_orbit(r->lattice()) * Rational(mult); }

bool certified(const Certificate& c) { return c.verdict == Certificate::Verdict::Certified; }

}  // namespace

TEST_CASE("standard forms") {
  auto c4 = ring("C4");
  auto s = standardize_rep(L(c4, 1) + L(c4, 3));
  CHECK(s.multiplicity == 1);
  CHECK(s.label == "1*W4");
  CHECK(s.standard == rep_W(c4, 4));
  CHECK(standardize_rep(L(c4, 1, 2)).label == "1*W4");
  CHECK(standardize_rep(L(c4, 1, 4)).label == "2*W4");
  CHECK_THROWS_AS(standardize_rep(L(c4, 1) + L(c4, 2)), InputError);
  CHECK_THROWS_AS(standardize_rep(L(c4, 1)), InputError);
  CHECK_THROWS_AS(standardize_rep(L(c4, 1, 2) - L(c4, 3)), InputError);
  auto q8 = ring("Q8");
  CHECK(standardize_rep(rep_quaternionic(q8) * Rational(4)).label == "4*H2");
  auto q16 = ring("Q16");
  CHECK(standardize_rep(rep_quaternionic(q16) * Rational(2)).label == "1*H4");
}

TEST_CASE("the smallest example over C2") {
  auto c2 = ring("C2");
  const auto h = free_orbit(c2);
  const auto cert = certify_self_map(h, L(c2, 1, 4));
  REQUIRE(cert.params);
  CHECK(cert.params->p == 2);
  CHECK(cert.params->n == 1);
  CHECK(cert.params->t == 1);
  CHECK(cert.params->c_x == 1);
  CHECK(cert.params->k == 3);
  CHECK(cert.params->ell == 3);
  CHECK(cert.hypothesis.pass);
  CHECK(cert.step1->pass);
  CHECK(cert.step1->transfer_exponent == 2);
  CHECK(cert.step1->imj_s == 2);
  CHECK(cert.step1->imj_valuation == 4);
  CHECK(cert.step1->order_exponent == 1);
  CHECK(cert.step2->pass);
  CHECK(cert.step2->report.lambda == 40);
  CHECK(cert.step3->contribution == "2^2 tr_e^G(eta*j)");
  CHECK(cert.step3->killed);
  CHECK(cert.step3->sq1_x == std::string("[C2/e]: (0, g)"));
  CHECK(certified(cert));
  CHECK(to_string(cert.verdict) == "certified");

  // h^4 = 8h has t = 4, beyond what 4L supports.
  const auto h4 = bpow(h, 4);
  CHECK(h4 == free_orbit(c2, 8));
  const auto bad = certify_self_map(h4, L(c2, 1, 4));
  CHECK(bad.verdict == Certificate::Verdict::HypothesisFailed);
  CHECK_FALSE(bad.step1->pass);
  CHECK(certified(certify_self_map(h4, L(c2, 1, 16))));

  // 2L has k = 2 < 3.
  CHECK(certify_self_map(h, L(c2, 1, 2)).verdict == Certificate::Verdict::HypothesisFailed);
}

TEST_CASE("free orbits of cyclic groups") {
  struct Case {
    long p, n, s;
  };
  for (const Case& k : {Case{3, 1, 1}, Case{3, 2, 1}, Case{2, 2, 1}, Case{2, 1, 2}, Case{5, 1, 1}, Case{2, 3, 1}}) {
    CAPTURE(k.p);
    CAPTURE(k.n);
    const long order = static_cast<long>(ipow(Integer(k.p), static_cast<unsigned long>(k.n)).get_si());
    auto r = ring("C" + std::to_string(order));
    const auto v = rep_W(r, order) * Rational(order * k.s);
    const auto cert = certify_self_map(free_orbit(r), v);
    CHECK(cert.params->t == k.n);
    CHECK(certified(cert));
  }
  // s odd is excluded at (p, n) = (2, 1).
  auto c2 = ring("C2");
  CHECK_FALSE(certified(certify_self_map(free_orbit(c2), L(c2, 1, 2))));
}

TEST_CASE("quaternion examples") {
  auto q8 = ring("Q8");
  const auto H = rep_quaternionic(q8);
  for (long d = 0; d <= 3; ++d) {
    CAPTURE(d);
    const long a = 1L << d;
    CHECK(certified(certify_self_map(free_orbit(q8, a), H * Rational(8 * a))));
    CHECK_FALSE(certified(certify_self_map(free_orbit(q8, a), H * Rational(4 * a))));
    CHECK(certified(certify_self_map(orbit(q8, "C2", a), H * Rational(4 * a))));
    CHECK_FALSE(certified(certify_self_map(orbit(q8, "C2", a), H * Rational(2 * a))));
    CHECK(certified(certify_self_map(orbit(q8, "<i>", 2 * a), H * Rational(4 * a))));
  }
  CHECK(certified(certify_self_map(orbit(q8, "<i>"), H * Rational(4))));
  const auto two = certify_self_map(orbit(q8, "<i>"), H * Rational(2));
  CHECK(two.verdict == Certificate::Verdict::HypothesisFailed);

  const auto rows = enumerate_quaternion(3, 5);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].multiplicity == 4);
  CHECK(rows[3].multiplicity == 8);
  for (const auto& row : rows) CHECK(row.thm1.pass);
  CHECK(rows[0].minimal_exponent == 1);
  CHECK(rows[1].minimal_exponent == 2);
  CHECK(rows[4].minimal_exponent == 4);
  CHECK(enumerate_quaternion(5, 1)[0].minimal_exponent == 0);
  CHECK_THROWS_AS(enumerate_quaternion(2), InputError);
}

TEST_CASE("generalized quaternion certificates match the table") {
  for (long n : {3L, 4L}) {
    auto r = ring("Q" + std::to_string(1L << n));
    const long m = 1L << (n - 2);
    const auto H = rep_H(r, m);
    for (const auto& row : enumerate_quaternion(n, 3)) {
      // X = 2^t [G/G] has |X| = 2^t.
      const auto x = VirtualGSet::unit(r->lattice()) * Rational(1L << row.t);
      CAPTURE(n);
      CAPTURE(row.t);
      CHECK(certified(certify_self_map(x, H * Rational(row.multiplicity))));
      const auto smaller = H * Rational(ipow(Integer(2), static_cast<unsigned long>(row.minimal_exponent)));
      CHECK(certified(certify_self_map(x, smaller)));
      if (row.minimal_exponent > 0) {
        const auto below = H * Rational(ipow(Integer(2), static_cast<unsigned long>(row.minimal_exponent - 1)));
        CHECK_FALSE(certified(certify_self_map(x, below)));
      }
    }
  }
}

TEST_CASE("negatives are verdicts, not errors") {
  auto c4 = ring("C4");
  auto x = free_orbit(c4);
  CHECK(certify_self_map(x, L(c4, 1) + L(c4, 2)).verdict == Certificate::Verdict::HypothesisFailed);
  CHECK(certify_self_map(x, L(c4, 1) - L(c4, 3)).verdict == Certificate::Verdict::HypothesisFailed);
  CHECK(certify_self_map(VirtualGSet(c4->lattice()), rep_W(c4, 4) * Rational(8)).verdict ==
        Certificate::Verdict::HypothesisFailed);
  auto dic3 = ring("Dic3");
  CHECK(certify_self_map(VirtualGSet::unit(dic3->lattice()), rep_quaternionic(dic3)).verdict ==
        Certificate::Verdict::HypothesisFailed);
  CHECK_THROWS_AS(certify_self_map(x, rep_W(c4, 4) * Rational(8), 2), InputError);
  CHECK_THROWS_AS(certify_self_map(x, rep_W(c4, 4) * Rational(8), 1), InputError);
  CHECK_THROWS_AS(certify_self_map(free_orbit(ring("C2")), rep_W(c4, 4)), InputError);
}

TEST_CASE("Adams index that overshoots the valuation fails step two") {
  auto c3 = ring("C3");
  const auto v = rep_W(c3, 3) * Rational(3);
  const auto x = VirtualGSet::unit(c3->lattice());
  CHECK(certified(certify_self_map(x, v)));
  const auto bad = certify_self_map(x, v, 10);
  CHECK(bad.hypothesis.pass);
  CHECK_FALSE(bad.step2->pass);
  CHECK(bad.verdict == Certificate::Verdict::StepFailed);
  CHECK_FALSE(bad.warnings.empty());
}

TEST_CASE("cyclic enumeration in both modes") {
  const auto rows = enumerate_5_1(2, 3, EnumerationMode::Thm511);
  CHECK(rows.size() == 3 * 4 * 5);
  for (const auto& row : rows) CHECK(row.verdict == row.thm511);

  // h^j over C2: least d is max(2, j - 1).
  for (long j = 1; j <= 6; ++j) {
    CAPTURE(j);
    CHECK(minimal_d(2, 1, j - 1, 0, EnumerationMode::Thm1) == std::max(2L, j - 1));
    CHECK(minimal_d(2, 1, j - 1, 0, EnumerationMode::Thm511) == std::max(2L, j - 1));
  }

  // Over C8: p^d [C8/C_{2^i}].
  CHECK(minimal_d(2, 3, 0, 0, EnumerationMode::Thm511) == 2);
  CHECK(minimal_d(2, 3, 0, 3, EnumerationMode::Thm511) == 1);
  CHECK(minimal_d(2, 3, 1, 1, EnumerationMode::Thm511) == 2);

  // Odd p: the two criteria differ exactly when k + 1 = n + t - 1.
  for (long p : {3L, 5L})
    for (long n = 1; n <= 3; ++n)
      for (const auto& row : enumerate_5_1(p, n, EnumerationMode::Thm1, {3, 6})) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(row.s);
        CAPTURE(row.i);
        CAPTURE(row.d);
        CHECK(row.consistent == (row.k + 1 != n + row.t - 1));
        if (!row.consistent) CHECK(row.thm511);
      }

  // p = 2: differences only at t = 0 with k in {n - 1, n}.
  for (long n = 1; n <= 4; ++n)
    for (const auto& row : enumerate_5_1(2, n, EnumerationMode::Thm1, {3, 6}))
      if (!row.consistent) {
        CHECK(row.t == 0);
        CHECK((row.k == n - 1 || row.k == n));
      }
  CHECK_THROWS_AS(enumerate_5_1(4, 1, EnumerationMode::Thm1), InputError);
}

TEST_CASE("full certificates agree with the hypothesis check over cyclic groups") {
  for (long p : {2L, 3L})
    for (long n = 1; n <= 2; ++n) {
      const long order = p == 2 ? (1L << n) : (n == 1 ? 3 : 9);
      auto r = ring("C" + std::to_string(order));
      for (const auto& row : enumerate_5_1(p, n, EnumerationMode::Thm1, {2, 3})) {
        const long ps = static_cast<long>(ipow(Integer(p), static_cast<unsigned long>(row.s)).get_si());
        const auto x = VirtualGSet::orbit(r->lattice(), static_cast<size_t>(row.i), ps);
        const auto v = rep_W(r, order) * Rational(ipow(Integer(p), static_cast<unsigned long>(row.d)));
        const auto cert = certify_self_map(x, v);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(row.s);
        CAPTURE(row.i);
        CAPTURE(row.d);
        CHECK(cert.params->k == row.k);
        CHECK(cert.params->t == row.t);
        CHECK(certified(cert) == row.thm1);
        if (row.thm1) CHECK(cert.step1->pass);
      }
    }
}

TEST_CASE("hypothesis is monotone in k and depends on X only through |X|") {
  for (int trial = 0; trial < 1000; ++trial) {
    SelfMapParameters q;
    q.p = uniform(0, 1) ? 2 : (uniform(0, 1) ? 3 : 5);
    q.n = uniform(1, 5);
    q.t = uniform(0, 8);
    q.k = uniform(0, 12);
    const bool now = check_hypotheses(q).pass;
    ++q.k;
    if (now) CHECK(check_hypotheses(q).pass);
  }
  // Orbit mixes of equal cardinality get equal verdicts.
  auto c8 = ring("C8");
  const auto lat = c8->lattice();
  const auto v = rep_W(c8, 8) * Rational(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_genuine_gset(lat, 3);
    if (virtual_cardinality(x) == 0) continue;
    const Integer card = to_integer(virtual_cardinality(x));
    const auto y = VirtualGSet::unit(lat) * Rational(card);
    const auto a = derive_parameters(x, v);
    const auto b = derive_parameters(y, v);
    CHECK(a.t == b.t);
    CHECK(check_hypotheses(a).pass == check_hypotheses(b).pass);
  }
}

TEST_CASE("cyclic examples with W_4 and W_8") {
  auto c4 = ring("C4");
  const auto w4 = rep_W(c4, 4) * Rational(2);
  CHECK(certified(certify_self_map(orbit(c4, "C2"), w4)));
  CHECK(certified(certify_self_map(orbit(c4, "C2", 2), w4)));
  CHECK(certified(certify_self_map(free_orbit(c4), w4)));

  auto c8 = ring("C8");
  const auto w8 = rep_W(c8, 8);
  CHECK(certified(certify_self_map(orbit(c8, "C4"), w8 * Rational(2))));
  CHECK(certified(certify_self_map(orbit(c8, "C2"), w8 * Rational(2))));
  CHECK(certified(certify_self_map(free_orbit(c8), w8 * Rational(4))));
  CHECK_FALSE(certified(certify_self_map(free_orbit(c8), w8 * Rational(2))));
  for (const auto& [i, d] : {std::pair{2L, 1L}, std::pair{1L, 1L}, std::pair{0L, 2L}}) {
    const auto rows = enumerate_5_1(2, 3, EnumerationMode::Thm511, {0, 4});
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const EnumerationRow& r) { return r.i == i && r.d == d; });
    REQUIRE(it != rows.end());
    CHECK(it->verdict);
    CHECK(it->thm1);
    CHECK(minimal_d(2, 3, 0, i, EnumerationMode::Thm511) == d);
  }
}

TEST_CASE("odd p: p^k W_p on p^k [C_p] passes only the weaker bound") {
  for (long p : {3L, 5L})
    for (long k = 0; k <= 3; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const auto rows = enumerate_5_1(p, 1, EnumerationMode::Thm511, {k, k});
      const auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const EnumerationRow& r) { return r.s == k && r.i == 0 && r.d == k; });
      REQUIRE(it != rows.end());
      CHECK(it->thm511);
      CHECK_FALSE(it->thm1);
      CHECK_FALSE(it->consistent);
      auto r = ring("C" + std::to_string(p));
      const long pk = static_cast<long>(ipow(Integer(p), static_cast<unsigned long>(k)).get_si());
      const auto cert = certify_self_map(free_orbit(r, pk), rep_W(r, p) * Rational(pk));
      CHECK(cert.verdict == Certificate::Verdict::HypothesisFailed);
      CHECK(cert.step1->transfer_exponent == -1);
    }
}

TEST_CASE("h^j needs 2^max(3,j) sigma") {
  auto c2 = ring("C2");
  for (long j = 1; j <= 6; ++j) {
    CAPTURE(j);
    const long sigma_exp = minimal_d(2, 1, j - 1, 0, EnumerationMode::Thm1) + 1;
    CHECK(sigma_exp == std::max(3L, j));
    const auto hj = bpow(free_orbit(c2), static_cast<unsigned long>(j));
    const auto twoj = VirtualGSet::unit(c2->lattice()) * Rational(1L << j);
    // 2^e sigma is the complex 2^(e-1) L.
    const auto v = L(c2, 1, 1L << (sigma_exp - 1));
    CHECK(certified(certify_self_map(hj, v)));
    CHECK(certified(certify_self_map(twoj, v)));
    const auto smaller = L(c2, 1, 1L << (sigma_exp - 2));
    CHECK_FALSE(certified(certify_self_map(hj, smaller)));
  }
}

TEST_CASE("warning region at p = 2, t = 0, c = 3 mod 4, k+1 = n") {
  // Over Q16, H has dimension 4, so k = 3 and k+1 = n = 4.
  auto q16 = ring("Q16");
  const auto H = rep_H(q16, 4);
  const auto three = VirtualGSet::unit(q16->lattice()) * Rational(3);
  const auto cert = certify_self_map(three, H);
  CHECK(cert.hypothesis.pass);
  CHECK(cert.params->k + 1 == cert.params->n);
  CHECK(cert.step3->sq1_cardinality == EtaClass{1});
  CHECK(cert.warnings.size() == 1);
  CHECK(certify_self_map(VirtualGSet::unit(q16->lattice()) * Rational(5), H).warnings.empty());
  CHECK(certify_self_map(three, H * Rational(2)).warnings.empty());
}
