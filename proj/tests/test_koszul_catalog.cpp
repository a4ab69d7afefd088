#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ffrt/koszul_catalog.hpp"

using namespace ffrt;

TEST_CASE("resolution term layout") {
    auto spec = resolution_spec(4, 1);
    REQUIRE(spec.size() == 4);
    CHECK(spec[0].position == 0);
    CHECK(spec[0].tilt_weight == 1);
    CHECK(spec[0].wedge == 0);
    CHECK(spec[0].twist == 0);
    CHECK(spec[1].position == -1);
    CHECK(spec[1].wedge == 1);
    CHECK(spec[1].twist == -1);
    CHECK(spec[2].position == -2);
    CHECK(spec[2].wedge == 3);
    CHECK(spec[2].twist == -3);
    CHECK(spec[3].position == -3);
    CHECK(spec[3].tilt_weight == 1);
    CHECK(spec[3].wedge == 4);
    CHECK(spec[3].twist == -4);

    auto spec52 = resolution_spec(5, 2);
    CHECK(spec52.size() == 5);
    CHECK(spec52[2].wedge == 2);   // Lambda^2 at position -2
    CHECK(spec52[3].wedge == 4);   // jump to Lambda^4 at position -3
    CHECK(spec52[3].twist == -4);

    for (int n = 4; n <= 8; ++n)
        for (int j = 1; j <= n - 3; ++j) CHECK(resolution_spec(n, j).size() == static_cast<size_t>(n));
    CHECK_THROWS(resolution_spec(4, 2));
}

TEST_CASE("syzygy characters at small degree") {
    WeightCharacter c3 = char_Kjk(4, 1, 1, 3);
    CHECK(c3.dim() == 4);
    CHECK(c3.at(0) == 4);

    WeightCharacter c4 = char_Kjk(4, 1, 1, 4);
    CHECK(c4.dim() == 30);
    CHECK(c4.at(1) == 15);
    CHECK(c4.at(-1) == 15);

    for (int d = 0; d < 3; ++d) CHECK(char_Kjk(4, 1, 1, d).empty());
    for (int d = 0; d < kjk_bottom_degree(2, 1); ++d) CHECK(char_Kjk(5, 2, 1, d).empty());
}

TEST_CASE("syzygy characters are nonnegative and symmetric") {
    for (int n = 4; n <= 6; ++n)
        for (int j = 1; j <= n - 3; ++j)
            for (int k = 1; k <= n - 3; ++k)
                for (int d = 0; d <= n + 4; ++d) CHECK(char_Kjk(n, j, k, d).symmetric());
}

TEST_CASE("structural checks for the syzygy modules") {
    PropKjkReport rep = check_propKjk(4, 1, 1, 10);
    CHECK(rep.pdim == 1);
    CHECK(rep.pdim_ok);
    CHECK(rep.bottom_degree == 3);  // k >= j: bottom at k + 2
    CHECK(rep.bottom_ok);
    CHECK(rep.duality_ok);

    PropKjkReport r612 = check_propKjk(6, 1, 2, 10);
    CHECK(r612.dual_j == 3);
    CHECK(r612.dual_k == 2);
    CHECK(r612.ok());
}

TEST_CASE("bottom pieces") {
    // k >= j: Lambda^{k+2} F (x) S^{k-j} V
    CHECK(kjk_bottom_character(4, 1, 1).dim() == 4);
    CHECK(kjk_bottom_character(4, 1, 1).at(0) == 4);
    // k < j: Lambda^{k+1} F (x) S^{j-k-1} V
    CHECK(kjk_bottom_degree(2, 1) == 2);
    CHECK(kjk_bottom_character(5, 2, 1) == binomial(5, 2) * char_weyl(0));
}

TEST_CASE("q values") {
    QValue q = q_values(1, 8, 3);
    CHECK(q.defined);
    CHECK(q.ell == 0);
    CHECK(q.value == 3);

    q = q_values(1, 3, 3);
    CHECK(q.defined);
    CHECK(q.ell == 1);
    CHECK(q.value == 1);

    CHECK_FALSE(q_values(1, 1, 3).defined);
}

TEST_CASE("q value ranges over all admissible d_t") {
    for (int n : {4, 5, 6})
        for (std::int64_t p : {3, 5, 7}) {
            if (p < std::max(n - 2, 3)) continue;
            for (int j = 1; j <= n - 3; ++j) {
                std::set<long long> q0s, q1s;
                for (long long dt = 0; dt <= static_cast<long long>(n) * (p - 1); ++dt) {
                    QValue q = q_values(j, dt, p);
                    if (!q.defined) continue;
                    (q.ell == 0 ? q0s : q1s).insert(q.value);
                }
                long long hi0 = (j == 1 && p == n - 2) ? n - 2 : n - 1;
                long long lo1 = (j == n - 3 && p == n - 2) ? 1 : 0;
                CHECK(*q0s.begin() == 1);
                CHECK(*q0s.rbegin() == hi0);
                CHECK(static_cast<long long>(q0s.size()) == hi0);  // every value attained
                CHECK(*q1s.begin() == lo1);
                CHECK(*q1s.rbegin() == n - 2);
                CHECK(static_cast<long long>(q1s.size()) == n - 2 - lo1 + 1);
            }
        }
}

TEST_CASE("Tate character of a simple times a character") {
    CHECK(tate_char_B1(0, 0, 2, 3) == 6);
    CHECK_FALSE(tate_char_B1(0, 0, 1, 3).has_value());
    CHECK(tate_char_B1(1, 1, 0, 5) == 0);
    CHECK_THROWS(tate_char_B1(4, 0, 0, 5));
}

TEST_CASE("cohomology predictor") {
    CohomologyPrediction pred = predict_cohomology(4, 3, 1, 1, {2, 2, 2, 2}, 1);
    CHECK(pred.r1_weight == 1);
    CHECK_FALSE(pred.r2_weight.has_value());

    // d_t = 3 gives q^1 = 1; l = 2 > k = 1 with matching parity
    pred = predict_cohomology(4, 3, 1, 1, {2, 1, 0, 0}, 2);
    REQUIRE(pred.r2_weight.has_value());
    CHECK(*pred.r2_weight == 2);  // (1 + 2 - 1) in p-divided units

    // eps = [k > j]
    pred = predict_cohomology(5, 3, 1, 2, {0, 0, 0, 0, 0}, 2);
    CHECK(pred.r1_weight == 1);
}

TEST_CASE("weight intervals") {
    WeightInterval iv = weight_interval(6, 5, 2, 2, 2);
    CHECK(iv.lo == 1);
    CHECK(iv.hi == 3);

    iv = weight_interval(6, 5, 2, 1, 4);
    CHECK(iv.m_lk == 0);
    CHECK(iv.lo == 3);
    CHECK(iv.hi == 4);

    iv = weight_interval(6, 5, 1, 1, 3);
    CHECK(iv.m_lk == 1);
    CHECK(iv.lo == 3);
    CHECK(iv.hi == 3);

    // l = k is [1, n-3] regardless of parity
    for (int n = 5; n <= 8; ++n)
        for (int k = 1; k <= n - 3; ++k) {
            WeightInterval v = weight_interval(n, 7, 1, k, k);
            CHECK(v.lo == 1);
            CHECK(v.hi == n - 3);
        }
}
