#pragma once

// Certificates for K-theory self maps Sigma^V C(X) -> C(X) over cyclic
// p-groups and generalized quaternion groups: parameters, hypothesis check,
// the three steps of the Adams-style construction, and the example tables.

#include <optional>
#include <string>
#include <vector>

#include "esm/burnside.hpp"
#include "esm/jtheory.hpp"
#include "esm/numeric.hpp"
#include "esm/powerop.hpp"
#include "esm/repring.hpp"

namespace esm {

struct StandardForm {
  Integer multiplicity = 0;  // V ~ multiplicity * W_N or multiplicity * H_m
  VirtualRep standard;
  std::string label;  // "2*W8", "4*H2"
};

// V honest and fixed point free, dimension a multiple of phi(N) (C_N) or
// phi(2m) (Dic_m). Throws InputError otherwise.
StandardForm standardize_rep(const VirtualRep& v);

struct SelfMapParameters {
  long p = 2;
  long n = 1;
  long t = 0;
  Integer c_x = 1;
  long k = 0;
  Integer c_v = 1;
  long ell = 3;
};

// Throws InputError when G is not a p-group, |X| = 0 or dim V has the wrong shape.
SelfMapParameters derive_parameters(const VirtualGSet& x, const VirtualRep& v, std::optional<long> ell = std::nullopt);

struct HypothesisVerdict {
  bool pass = false;
  std::string clause;  // which inequality decided
};

HypothesisVerdict check_hypotheses(const SelfMapParameters& params);

struct StepOne {
  bool pass = false;
  long transfer_exponent = 0;  // k + 1 - n - t, alpha = tr(p^e j)
  long imj_s = 0;              // degree |V| - 1 = 4s - 1
  long imj_valuation = 0;      // order of j is p^imj_valuation
  long order_exponent = 0;     // res(alpha) = p^(k+1-t) j has order p^order_exponent
};

struct StepTwo {
  bool pass = false;
  AdamsBottReport report;
  bool fixed_mod_x = false;
  std::string conclusion;
};

struct StepThree {
  bool pass = false;
  EtaClass sq1_cardinality;   // Sq1(|X|)
  std::string contribution;   // "0" or "2^(k-n) tr(eta j)"
  bool killed = true;
  std::optional<std::string> sq1_x;  // Sq1(X) for small genuine X
};

struct Certificate {
  enum class Verdict { Certified, HypothesisFailed, StepFailed };

  std::string group;
  std::string x;
  std::string v;
  std::optional<SelfMapParameters> params;
  std::optional<StandardForm> standard;
  HypothesisVerdict hypothesis;
  std::optional<StepOne> step1;
  std::optional<StepTwo> step2;
  std::optional<StepThree> step3;
  Verdict verdict = Verdict::HypothesisFailed;
  std::vector<std::string> warnings;
};

std::string to_string(Certificate::Verdict v);  // "certified", "hypothesis-failed", "step-failed"

// Never throws on mathematical negatives; an invalid Adams index is an InputError.
Certificate certify_self_map(const VirtualGSet& x, const VirtualRep& v, std::optional<long> ell = std::nullopt);

enum class EnumerationMode { Thm1, Thm511 };

struct EnumerationRow {
  long s = 0;
  long i = 0;
  long d = 0;
  long k = 0;
  long t = 0;
  bool thm1 = false;
  bool thm511 = false;
  bool consistent = true;
  bool verdict = false;  // the one selected by the mode
  std::string clause;
};

struct EnumerationBounds {
  long s_max = 2;
  long d_max = 4;
};

// Self maps Sigma^{p^d W} C(p^s [C_{p^n}/C_{p^i}]) -> C(...), 0 <= i <= n.
std::vector<EnumerationRow> enumerate_5_1(long p, long n, EnumerationMode mode, EnumerationBounds bounds = {});

// Least d passing in the given mode, or -1 if none up to d_max.
long minimal_d(long p, long n, long s, long i, EnumerationMode mode, long d_max = 16);

struct QuaternionRow {
  long t = 0;
  Integer multiplicity;  // 2^max(2, t) copies of H
  long k = 0;
  HypothesisVerdict thm1;
  long minimal_exponent = 0;  // least e with 2^e H passing the hypothesis
};

// Q_{2^n}, n >= 3, cardinalities 2^t c for 0 <= t <= t_max.
std::vector<QuaternionRow> enumerate_quaternion(long n, long t_max = 5);

}  // namespace esm
