#include "esm/geomfix.hpp"

#include "esm/error.hpp"

namespace esm {

Rational phi_gset(const VirtualGSet& x, size_t h) {
  if (h >= x.lat().size()) fail_input("subgroup class index out of range");
  return marks(x)[h];
}

std::string PowerMapFixedPoints::to_string() const {
  const std::string spheres = ": S^" + std::to_string(source_dim) + " -> S^" + std::to_string(target_dim);
  switch (kind) {
    case Kind::Degree: return std::to_string(degree) + spheres;
    case Kind::Zero: return "0" + spheres;
    case Kind::Identity: return "1" + spheres;
  }
  return "";
}

PowerMapFixedPoints psi_power_fixed(long d, long k) {
  if (d < 1 || k < 1) fail_input("power map fixed points need d, k >= 1");
  // L^k restricted to C_d is trivial exactly when d | k.
  PowerMapFixedPoints out;
  out.source_dim = d == 1 ? 2 : 0;
  out.target_dim = k % d == 0 ? 2 : 0;
  if (d == 1) {
    out.kind = PowerMapFixedPoints::Kind::Degree;
    out.degree = k;
  } else if (k % d == 0) {
    out.kind = PowerMapFixedPoints::Kind::Zero;
    out.degree = 0;
  }
  return out;
}

Integer BottFixedPower::exponent(long p) const { return ipow(Integer(p), static_cast<unsigned long>(tower)); }

Integer BottFixedPower::value(long p) const {
  const Integer e = exponent(p);
  if (!e.fits_ulong_p() || e > 1000000) fail_input("p^(p^" + std::to_string(tower) + ") is too large to expand");
  return ipow(Integer(p), e.get_ui());
}

std::string BottFixedPower::to_string(long p) const {
  return std::to_string(p) + "^" + exponent(p).get_str();
}

BottFixedPower phi_bott_valuation(long n, long j, long d) {
  if (n < 1) fail_input("n must be at least 1");
  if (j < 1 || j > n) fail_input("j must satisfy 1 <= j <= n");
  if (d < 0) fail_input("d must be nonnegative");
  return {n - j + d};
}

namespace {

void check_range(long p, long n, long s, long i, long j) {
  if (!is_prime(p)) fail_input("p must be prime");
  if (n < 1) fail_input("n must be at least 1");
  if (s < 0) fail_input("s must be nonnegative");
  if (i < 0 || i > n) fail_input("i must satisfy 0 <= i <= n");
  if (j < 0 || j > n) fail_input("j must satisfy 0 <= j <= n");
}

}  // namespace

std::string TelescopeFixedPoints::to_string() const {
  switch (kind) {
    case Kind::V1Telescope: return "C(" + modulus.get_str() + ")[v1^-1]";
    case Kind::Zero: return "0";
    case Kind::RationalPair: return "HQ + Sigma HQ";
  }
  return "";
}

std::string KuCofiberFixedPoints::to_string() const {
  switch (kind) {
    case Kind::MooreKU: return "KU/(" + modulus.get_str() + ")";
    case Kind::Zero: return "0";
    case Kind::CyclotomicPair: {
      const std::string f = "KU_Q(zeta_" + std::to_string(root_order) + ")";
      return f + " + Sigma " + f;
    }
  }
  return "";
}

TelescopeFixedPoints telescope_fixed_points(long p, long n, long s, long i, long j) {
  check_range(p, n, s, i, j);
  if (j == 0) return {TelescopeFixedPoints::Kind::V1Telescope, ipow(Integer(p), static_cast<unsigned long>(s + n - i))};
  if (j <= i) return {TelescopeFixedPoints::Kind::Zero, 0};
  return {TelescopeFixedPoints::Kind::RationalPair, 0};
}

KuCofiberFixedPoints ku_cofiber_fixed_points(long p, long n, long s, long i, long j) {
  check_range(p, n, s, i, j);
  if (j == 0) return {KuCofiberFixedPoints::Kind::MooreKU, ipow(Integer(p), static_cast<unsigned long>(s + n - i)), 1};
  if (j <= i) return {KuCofiberFixedPoints::Kind::Zero, 0, 1};
  return {KuCofiberFixedPoints::Kind::CyclotomicPair, 0, ipow(Integer(p), static_cast<unsigned long>(j)).get_si()};
}

std::vector<TelescopeRow> telescope_table(long p, long n, long s, long i) {
  check_range(p, n, s, i, 0);
  auto lat = lattice_for(GroupDescriptor::cyclic(p, n));
  // Subgroup classes of C_{p^n} are ordered by order: class j is C_{p^j}.
  const auto x = VirtualGSet::orbit(lat, static_cast<size_t>(i), ipow(Integer(p), static_cast<unsigned long>(s)));
  const auto m = marks(x);
  std::vector<TelescopeRow> rows;
  for (long j = 0; j <= n; ++j) {
    TelescopeRow r;
    r.j = j;
    r.mark = m[static_cast<size_t>(j)];
    r.cofiber = r.mark != 0 ? "C(" + r.mark.get_str() + ")" : "S^0 + S^1";
    r.telescope = telescope_fixed_points(p, n, s, i, j);
    r.ku = ku_cofiber_fixed_points(p, n, s, i, j);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace esm
