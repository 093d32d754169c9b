#pragma once

#include "esm/numeric.hpp"

namespace esm {

// Exact B_m with B_1 = -1/2, B_2 = 1/6. The table is memoized behind a
// mutex, so concurrent callers are fine.
Rational bernoulli_number(long m);

// B_{2s} for a positive even argument; throws InputError otherwise.
Rational bernoulli(long two_s);

}  // namespace esm
