#ifndef FFRT_B1_COHOMOLOGY_HPP
#define FFRT_B1_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "ffrt/fp_linear.hpp"
#include "ffrt/sl2_characters.hpp"

namespace ffrt {

// Finite dimensional B-representation: weights plus the action of the
// distribution algebra generator F (weight -2, F^p = 0).
struct BRep {
    std::vector<int> weights;
    DenseFp f;
};

// Bounded complex of B-representations with weight-0 differentials.
// terms[i] sits in cohomological degree first_position + i.
struct BComplex {
    fp_t p = 0;
    int first_position = 0;
    std::vector<BRep> terms;
    std::vector<DenseFp> diffs;  // diffs[i]: terms[i] -> terms[i+1]
};

enum class B1Variant { Ordinary, Tate };

// H^l(B_1, C) as a character over the Frobenius twist: total cohomology of
// the double complex built from the 2-periodic complete resolution of k
// over k[F]/(F^p), restricted to weights divisible by p, then divided by p.
// The ordinary variant truncates the resolution direction at degree zero.
WeightCharacter b1_cohomology_oracle(const BComplex& cx, int l, fp_t p,
                                     B1Variant variant = B1Variant::Ordinary);

// Building blocks.
BComplex character_complex(long long a, fp_t p);                 // (a w) in degree 0
BComplex simple_times_character(int i, long long a, fp_t p);     // L(i) (x) (a w)
// The truncated shifted Koszul-factor complex C_{jk}^{(t)}, concentrated in
// degrees [0, k].
BComplex build_cjkt(int n, fp_t p, int j, int k, const std::vector<int>& t);

}  // namespace ffrt

#endif
