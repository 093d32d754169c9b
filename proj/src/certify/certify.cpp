#include "esm/certify.hpp"

#include <algorithm>

#include "esm/error.hpp"

namespace esm {

StandardForm standardize_rep(const VirtualRep& v) {
  const auto& ring = v.ring();
  if (!v.is_honest()) fail_input("V = " + v.to_string() + " is not an honest representation");
  if (v.is_zero()) fail_input("V is zero");
  if (!is_fixed_point_free(v)) fail_input("V = " + v.to_string() + " is not fixed point free");
  const auto& d = ring->descriptor();
  const bool cyclic = ring->is_cyclic();
  const long phi = cyclic ? euler_phi(d.order()) : euler_phi(2 * d.param);
  const Integer dim = to_integer(v.dim());
  if (dim % phi != 0)
    fail_input("dim V = " + dim.get_str() + " is not a multiple of " + std::to_string(phi));
  StandardForm out;
  out.multiplicity = dim / phi;
  const VirtualRep base = cyclic ? rep_W(ring, d.order()) : rep_H(ring, d.param);
  out.standard = base * Rational(out.multiplicity);
  out.label = out.multiplicity.get_str() + "*" + (cyclic ? "W" + std::to_string(d.order()) : "H" + std::to_string(d.param));
  return out;
}

namespace {

long group_prime(const VirtualRep& v) {
  const auto pp = v.ring()->descriptor().prime_power();
  if (!pp) fail_input(v.ring()->group().label() + " is not a p-group");
  return pp->first;
}

}  // namespace

SelfMapParameters derive_parameters(const VirtualGSet& x, const VirtualRep& v, std::optional<long> ell) {
  if (x.lattice() != v.ring()->lattice()) fail_input("X and V live over different groups");
  const long p = group_prime(v);
  SelfMapParameters out;
  const auto dims = dimension_parameters(v);
  out.p = p;
  out.n = dims.n;
  out.k = dims.k;
  out.c_v = dims.c;
  const auto card = cardinality(x, p);
  if (!is_integral(card.c)) fail_input("cardinality of X is not an integer");
  out.t = card.t;
  out.c_x = to_integer(card.c);
  out.ell = ell ? *ell : default_ell(p);
  if (out.ell <= 1) fail_input("Adams index must be at least 2");
  if (out.ell % p == 0) fail_input("Adams index " + std::to_string(out.ell) + " is divisible by p = " + std::to_string(p));
  return out;
}

HypothesisVerdict check_hypotheses(const SelfMapParameters& q) {
  if (q.p == 2 && q.k < 3) return {false, "p = 2 needs k >= 3 (k = " + std::to_string(q.k) + ")"};
  const std::string kn = "k = " + std::to_string(q.k) + ", n = " + std::to_string(q.n) + ", t = " + std::to_string(q.t);
  if (q.p == 2 && q.t == 1) {
    if (q.k > q.n) return {true, "k > n with (p,t) = (2,1) (" + kn + ")"};
    return {false, "(p,t) = (2,1) needs k > n (" + kn + ")"};
  }
  if (q.k + 1 >= q.n + q.t) return {true, "k+1 >= n+t (" + kn + ")"};
  return {false, "k+1 < n+t (" + kn + ")"};
}

std::string to_string(Certificate::Verdict v) {
  switch (v) {
    case Certificate::Verdict::Certified: return "certified";
    case Certificate::Verdict::HypothesisFailed: return "hypothesis-failed";
    case Certificate::Verdict::StepFailed: return "step-failed";
  }
  return "";
}

namespace {

StepOne step_one(const SelfMapParameters& q, const Integer& dim) {
  StepOne s;
  s.transfer_exponent = q.k + 1 - q.n - q.t;
  if (dim % 2 != 0) return s;  // |V| - 1 = 4s - 1 needs even complex dimension
  s.imj_s = Integer(dim / 2).get_si();
  s.imj_valuation = imj_valuation(s.imj_s, q.p).valuation;
  const long shift = q.k + 1 - q.t;
  s.order_exponent = shift >= 0 ? std::max(0L, s.imj_valuation - shift) : -1;
  s.pass = s.transfer_exponent >= 0 && shift >= 0 && s.imj_valuation == q.k + 1 && s.order_exponent == q.t;
  return s;
}

StepTwo step_two(const SelfMapParameters& q, const StandardForm& std_form, const VirtualGSet& x) {
  StepTwo s;
  s.report = verify_adams_bott(std_form.standard, q.ell);
  s.fixed_mod_x = verify_bott_fixed_mod_X(std_form.standard, x, q.ell);
  s.pass = s.report.matches && s.fixed_mod_x;
  const std::string e = std::to_string(q.k + 1 - q.n);
  const std::string p = std::to_string(q.p);
  if (s.report.matches)
    s.conclusion = "v_" + p + "(lambda) = " + e + " with d a " + p + "-local unit, so " + p + "^" + e +
                   " tr_e^G(j) = 0 and X*alpha = 0";
  else
    s.conclusion = "v_" + p + "(lambda) = " + std::to_string(s.report.valuation) + " but k+1-n = " + e;
  if (!s.fixed_mod_x) s.conclusion += "; theta - 1 is not fixed modulo X";
  return s;
}

StepThree step_three(const SelfMapParameters& q, const VirtualGSet& x, std::vector<std::string>& warnings) {
  StepThree s;
  const Integer card = to_integer(virtual_cardinality(x));
  s.sq1_cardinality = sq1_int(card);
  if (q.p == 2 && q.t == 1) {
    s.contribution = "2^" + std::to_string(q.k - q.n) + " tr_e^G(eta*j)";
    s.killed = q.k > q.n;
  } else {
    s.contribution = "0";
    s.killed = true;
  }
  s.pass = s.killed;
  if (q.p == 2 && q.t == 0 && mpz_fdiv_ui(q.c_x.get_mpz_t(), 4) == 3 && q.k + 1 == q.n)
    warnings.push_back("p = 2, t = 0, c = 3 mod 4, k+1 = n: Sq1(c) = eta and p^(k+1-n-t) = 1, so tr_e^G(eta*j) is not visibly zero");
  if (x.is_genuine() && card <= 32) {
    const Pi1Element sq = sq1_gset(x);
    if (!(underlying(sq) == s.sq1_cardinality)) fail_internal("underlying sign of Sq1(X) disagrees with Sq1(|X|)");
    s.sq1_x = sq.to_string();
  }
  return s;
}

}  // namespace

Certificate certify_self_map(const VirtualGSet& x, const VirtualRep& v, std::optional<long> ell) {
  if (x.lattice() != v.ring()->lattice()) fail_input("X and V live over different groups");
  Certificate c;
  c.group = v.ring()->group().label();
  c.x = x.to_string();
  c.v = v.to_string();
  const auto pp = v.ring()->descriptor().prime_power();
  if (!pp) {
    c.hypothesis = {false, c.group + " is not a p-group"};
    return c;
  }
  if (ell && (*ell <= 1 || *ell % pp->first == 0))
    fail_input("Adams index " + std::to_string(*ell) + " must be at least 2 and prime to p = " + std::to_string(pp->first));
  try {
    c.standard = standardize_rep(v);
    c.params = derive_parameters(x, v, ell);
  } catch (const InputError& e) {
    c.hypothesis = {false, e.what()};
    c.verdict = Certificate::Verdict::HypothesisFailed;
    return c;
  }
  const auto& q = *c.params;
  if (!(c.standard->standard == v))
    c.warnings.push_back("V replaced by its p-local standard form " + c.standard->label);
  c.hypothesis = check_hypotheses(q);
  c.step1 = step_one(q, to_integer(v.dim()));
  c.step2 = step_two(q, *c.standard, x);
  c.step3 = step_three(q, x, c.warnings);
  if (!c.step2->report.matches && c.step2->report.identity_holds && c.step2->report.valuation > c.step2->report.expected_valuation)
    c.warnings.push_back("l = " + std::to_string(q.ell) + " overshoots: v_p(lambda) = " + std::to_string(c.step2->report.valuation) +
                         " > k+1-n = " + std::to_string(c.step2->report.expected_valuation));
  if (!c.hypothesis.pass)
    c.verdict = Certificate::Verdict::HypothesisFailed;
  else if (c.step1->pass && c.step2->pass && c.step3->pass)
    c.verdict = Certificate::Verdict::Certified;
  else
    c.verdict = Certificate::Verdict::StepFailed;
  return c;
}

namespace {

bool thm511(long p, long n, long s, long i, long d) {
  if (p > 2) return d >= s + n - i - 1;
  return d >= std::max({1L, 3 - n, s + n - i - 1});
}

SelfMapParameters cyclic_parameters(long p, long n, long s, long i, long d) {
  SelfMapParameters q;
  q.p = p;
  q.n = n;
  q.t = s + n - i;
  q.k = p == 2 ? d + n : d + n - 1;
  q.ell = default_ell(p);
  return q;
}

void check_cyclic_range(long p, long n) {
  if (!is_prime(p)) fail_input("p must be prime");
  if (n < 1) fail_input("n must be at least 1");
}

}  // namespace

std::vector<EnumerationRow> enumerate_5_1(long p, long n, EnumerationMode mode, EnumerationBounds bounds) {
  check_cyclic_range(p, n);
  if (bounds.s_max < 0 || bounds.d_max < 0) fail_input("enumeration bounds must be nonnegative");
  std::vector<EnumerationRow> rows;
  for (long s = 0; s <= bounds.s_max; ++s)
    for (long i = 0; i <= n; ++i)
      for (long d = 0; d <= bounds.d_max; ++d) {
        EnumerationRow r;
        r.s = s;
        r.i = i;
        r.d = d;
        const auto q = cyclic_parameters(p, n, s, i, d);
        r.k = q.k;
        r.t = q.t;
        const auto h = check_hypotheses(q);
        r.thm1 = h.pass;
        r.clause = h.clause;
        r.thm511 = thm511(p, n, s, i, d);
        r.consistent = r.thm1 == r.thm511;
        r.verdict = mode == EnumerationMode::Thm1 ? r.thm1 : r.thm511;
        rows.push_back(std::move(r));
      }
  return rows;
}

long minimal_d(long p, long n, long s, long i, EnumerationMode mode, long d_max) {
  check_cyclic_range(p, n);
  for (long d = 0; d <= d_max; ++d) {
    const bool ok = mode == EnumerationMode::Thm1 ? check_hypotheses(cyclic_parameters(p, n, s, i, d)).pass
                                                  : thm511(p, n, s, i, d);
    if (ok) return d;
  }
  return -1;
}

std::vector<QuaternionRow> enumerate_quaternion(long n, long t_max) {
  if (n < 3) fail_input("generalized quaternion groups need n >= 3");
  if (t_max < 0) fail_input("t bound must be nonnegative");
  std::vector<QuaternionRow> rows;
  for (long t = 0; t <= t_max; ++t) {
    QuaternionRow r;
    r.t = t;
    const long e = std::max(2L, t);
    r.multiplicity = ipow(Integer(2), static_cast<unsigned long>(e));
    // dim(2^e H) = 2^(e + n - 2) = 2^(k-1)
    SelfMapParameters q;
    q.p = 2;
    q.n = n;
    q.t = t;
    q.k = e + n - 1;
    r.k = q.k;
    r.thm1 = check_hypotheses(q);
    r.minimal_exponent = -1;
    for (long f = 0; f <= e; ++f) {
      q.k = f + n - 1;
      if (check_hypotheses(q).pass) {
        r.minimal_exponent = f;
        break;
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace esm
