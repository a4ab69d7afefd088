#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrt/equivariant_resolution.hpp"
#include "ffrt/koszul_catalog.hpp"

using namespace ffrt;

TEST_CASE("resolution of M_1 for n = 4 reproduces the syzygy characters") {
    EquivariantResolution res(4, 1, 6, 3);
    CHECK(res.composites_vanish());
    CHECK(res.exact_away_from_zero());
    CHECK(res.kernel_char(1, 3).dim() == 4);
    CHECK(res.kernel_char(1, 4).dim() == 30);
    for (int d = 0; d <= 6; ++d) CHECK(res.kernel_char(1, d) == char_Kjk(4, 1, 1, d));
}

TEST_CASE("resolution of M_2 for n = 5 reproduces both syzygy characters") {
    EquivariantResolution res(5, 2, 6, 3);
    CHECK(res.composites_vanish());
    CHECK(res.exact_away_from_zero());
    for (int d = 0; d <= 6; ++d) {
        CHECK(res.kernel_char(1, d) == char_Kjk(5, 2, 1, d));
        CHECK(res.kernel_char(2, d) == char_Kjk(5, 2, 2, d));
    }
}

TEST_CASE("solved differentials stay one-dimensional at n = 6") {
    EquivariantResolution res(6, 2, 5, 5);
    CHECK(res.composites_vanish());
    CHECK(res.exact_away_from_zero());
    for (int k = 1; k <= 3; ++k)
        for (int d = 0; d <= 5; ++d) CHECK(res.kernel_char(k, d) == char_Kjk(6, 2, k, d));
}

TEST_CASE("invariants of the syzygy module under the first kernel") {
    EquivariantResolution res(4, 1, 6, 3);
    // bottom of K_{11} is the G-trivial wedge piece in degree 3
    WeightCharacter inv3 = res.kjk_gr_invariants(1, 1, 3);
    CHECK(inv3.dim() == 4);
    CHECK(inv3.at(0) == 4);
    // degree 4 part chi(1)^{+15,-15} has no invariant vectors of weight 0 mod 3
    CHECK(res.kjk_gr_invariants(1, 1, 4).empty());
}
