#ifndef FFRT_BINOMIALS_HPP
#define FFRT_BINOMIALS_HPP

#include "ffrt/fp_linear.hpp"

namespace ffrt {

// Exact binomial coefficient (memoized Pascal rows, values fit int64 for the
// degree ranges used here).
long long binom_exact(int n, int k);

// Binomial coefficient mod p via Lucas' theorem.
fp_t binom_mod(int n, int k, fp_t p);

}  // namespace ffrt

#endif
