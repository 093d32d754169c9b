#include "esm/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "esm/error.hpp"

namespace esm {

namespace {

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rational bernoulli_number(long m) {
  if (m < 0) fail_input("bernoulli index must be nonnegative");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k=0}^{j} C(j+1, k) B_k = 0
  for (long j = static_cast<long>(table.size()); j <= m; ++j) {
    Rational acc = 0;
    for (long k = 0; k < j; ++k) acc += Rational(binomial(j + 1, k)) * table[k];
    table.push_back(-acc / Rational(j + 1));
  }
  return table[m];
}

Rational bernoulli(long two_s) {
  if (two_s <= 0 || two_s % 2 != 0) fail_input("bernoulli: argument must be a positive even integer");
  return bernoulli_number(two_s);
}

}  // namespace esm
