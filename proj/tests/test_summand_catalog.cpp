#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "ffrt/sl2_characters.hpp"
#include "ffrt/summand_catalog.hpp"

using namespace ffrt;

namespace {

int count_kind(const std::vector<SummandInstance>& v, SummandKind k) {
    int c = 0;
    for (const auto& s : v)
        if (s.kind == k) ++c;
    return c;
}

}  // namespace

TEST_CASE("catalog of S^{G_r}") {
    auto c42 = catalog_S_Gr(4, 3, 2);
    CHECK(c42.size() == 3);
    CHECK(count_kind(c42, SummandKind::K) == 1);
    CHECK(count_kind(c42, SummandKind::TiltFree) == 2);

    auto c51 = catalog_S_Gr(5, 3, 1);
    CHECK(count_kind(c51, SummandKind::TiltFree) == 3);
    CHECK(count_kind(c51, SummandKind::K) == 2);  // K_1, K_2 on the diagonal
    for (const auto& s : c51)
        if (s.kind == SummandKind::K) CHECK(s.j == s.k);

    auto c63 = catalog_S_Gr(6, 5, 3);
    CHECK(count_kind(c63, SummandKind::K) == 9);
    CHECK(count_kind(c63, SummandKind::TiltFree) == 4);

    // the list for r >= 2 does not depend on r
    auto a = catalog_S_Gr(5, 3, 2), b = catalog_S_Gr(5, 3, 5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        SummandInstance x = a[i], y = b[i];
        x.frobenius_level = y.frobenius_level = 0;
        CHECK(x.same_kind(y));
    }

    CHECK_THROWS(catalog_S_Gr(4, 4, 1));   // p not prime
    CHECK_THROWS(catalog_S_Gr(6, 3, 1));   // p below max{n-2,3}
    CHECK(catalog_S_Gr(6, 3, 1, false).size() == 7);  // override keeps the list
}

TEST_CASE("catalog of R over R^{p^r}") {
    auto r42 = catalog_R(4, 3, 2);
    CHECK(r42.size() == 3);
    CHECK(count_kind(r42, SummandKind::Cov) == 2);
    CHECK(count_kind(r42, SummandKind::K) == 1);

    auto r51 = catalog_R(5, 3, 1);
    CHECK(count_kind(r51, SummandKind::Cov) == 3);
    CHECK(count_kind(r51, SummandKind::K) == 2);

    auto r41 = catalog_R(4, 3, 1);
    CHECK(r41.size() == 3);
}

TEST_CASE("decomposition of (T(j) (x) S)^{G_1}") {
    DecompositionReport rep = decompose_TjS_G1(5, 3, 1);
    CHECK(tjs_m_bound(5, 3, 1) == 2);
    CHECK(count_kind(rep.catalog, SummandKind::TiltFree) == 3);
    CHECK(count_kind(rep.catalog, SummandKind::K) == 2);
    for (const auto& s : rep.catalog) CHECK(s.flag == MultFlag::Nonzero);

    rep = decompose_TjS_G1(4, 3, 5);  // j = 2 + 3*1
    CHECK(tjs_m_bound(4, 3, 5) == 3);
    CHECK(count_kind(rep.catalog, SummandKind::K) == 0);
    int possible = 0, nonzero = 0;
    for (const auto& s : rep.catalog) (s.flag == MultFlag::Possible ? possible : nonzero)++;
    CHECK(nonzero == 3);   // T(1), T(2), T(3)
    CHECK(possible == 1);  // T(0)
    for (const auto& s : rep.catalog)
        if (s.l == 0) CHECK(s.flag == MultFlag::Possible);

    rep = decompose_TjS_G1(4, 3, 2);  // j = p - 1, j_2 = 0
    CHECK(tjs_m_bound(4, 3, 2) == 2);
    for (const auto& s : rep.catalog) CHECK(s.flag == MultFlag::Nonzero);
}

TEST_CASE("the two bound formulas agree") {
    for (int n : {4, 5, 6})
        for (std::int64_t p : {3, 5, 7}) {
            if (p < std::max(n - 2, 3)) continue;
            for (long long j = 0; j <= 3 * p * p; ++j) {
                long long alt = n - 2 + static_cast<long long>(std::floor(double(j - n + 2) / p));
                CHECK(tjs_m_bound(n, p, j) == alt);
            }
        }
}

TEST_CASE("decomposition of K_{jk}^{G_1}") {
    DecompositionReport rep = decompose_Kjk_G1(4, 3, 1, 1);
    // l = k = 1: interval [1, n-3] = {1}
    CHECK(count_kind(rep.catalog, SummandKind::K) == 1);
    for (const auto& s : rep.catalog)
        if (s.kind == SummandKind::K) {
            CHECK(s.j == 1);
            CHECK(s.k == 1);
            CHECK(s.flag == MultFlag::Nonzero);
        }
    for (const auto& s : rep.catalog)
        if (s.kind == SummandKind::TiltFree) CHECK(s.flag == MultFlag::Possible);

    // n=6, p=5, j=2, k=1: l=3 > k with even difference forces m_lk = 1,
    // so r lies in [3,3]; l=2 gives r in [1,2]; l=k=1 gives [1,3]
    rep = decompose_Kjk_G1(6, 5, 2, 1);
    std::set<std::pair<int, int>> ks;
    for (const auto& s : rep.catalog)
        if (s.kind == SummandKind::K) ks.insert({s.j, s.k});
    CHECK(ks.count({3, 3}));
    CHECK_FALSE(ks.count({2, 3}));
    CHECK(ks.count({1, 2}));
    CHECK(ks.count({2, 2}));
    CHECK_FALSE(ks.count({3, 2}));
    for (int r = 1; r <= 3; ++r) CHECK(ks.count({r, 1}));

    // n=6, p=5, j=1, k=3: l=1 < k with even difference has the interval
    // [1, 1]; l=2 < k gives [2, 3]
    rep = decompose_Kjk_G1(6, 5, 1, 3);
    ks.clear();
    for (const auto& s : rep.catalog)
        if (s.kind == SummandKind::K) ks.insert({s.j, s.k});
    CHECK(ks.count({1, 1}));
    CHECK_FALSE(ks.count({2, 1}));
    CHECK(ks.count({2, 2}));
    CHECK(ks.count({3, 2}));
    CHECK_FALSE(ks.count({1, 2}));
}

TEST_CASE("limit of the twist-bound dynamics") {
    LimitResult res = iterate_limit(5, 3, 7);
    CHECK(res.lo == 0);
    CHECK(res.hi == 3);  // n - 2

    res = iterate_limit(4, 3, 1);
    CHECK(res.hi == 1);  // n - 3

    res = iterate_limit(4, 3, 0);
    CHECK(res.hi == 1);

    for (int n = 4; n <= 8; ++n)
        for (std::int64_t p : {3, 5, 7}) {
            if (p < std::max<std::int64_t>(n - 2, 3)) continue;
            for (long long j = 0; j <= 3 * p * p; ++j) {
                LimitResult r = iterate_limit(n, p, j);
                CHECK(r.lo == 0);
                CHECK(r.hi == (j <= n - 3 ? n - 3 : n - 2));
                int bound = static_cast<int>(std::ceil(std::log(std::max(j, 1LL)) / std::log(p))) + 2;
                CHECK(r.iterations <= bound);
            }
        }
}

TEST_CASE("non-interval example") {
    std::set<int> s = noninterval_example(4, 5);
    std::set<int> expect;
    for (int l = 4; l <= 5; ++l) expect.insert(l);
    for (int l = 11; l <= 15; ++l) expect.insert(l);
    CHECK(s == expect);
    for (int g : {7, 8, 9}) CHECK_FALSE(s.count(g));

    std::set<int> s5 = noninterval_example(5, 5);
    std::set<int> expect5;
    for (int l = 4; l <= 6; ++l) expect5.insert(l);
    for (int l = 10; l <= 16; ++l) expect5.insert(l);
    CHECK(s5 == expect5);

    CHECK_THROWS(noninterval_example(6, 5));
}

TEST_CASE("exact tilt-free support by scanning") {
    // j = 0: support [0, floor((n-2)(p-1)/p)]
    for (int n : {4, 5})
        for (std::int64_t p : {3, 5}) {
            std::set<int> s = tilt_summand_scan(n, p, 0);
            std::set<int> expect;
            for (int l = 0; l <= static_cast<int>((static_cast<long long>(n - 2) * (p - 1)) / p); ++l)
                expect.insert(l);
            CHECK(s == expect);
        }
    // j = 2p-2 contains 0 (q = 0 contributes the trivial summand)
    CHECK(tilt_summand_scan(4, 3, 4).count(0) == 1);
    CHECK(tilt_summand_scan(4, 5, 8).count(0) == 1);
}

TEST_CASE("scan stays between the closed-form bounds") {
    for (int n : {4, 5})
        for (std::int64_t p : {3, 5}) {
            if (p < std::max(n - 2, 3)) continue;
            for (long long j = 0; j <= 3 * p * p; ++j) {
                std::set<int> s = tilt_summand_scan(n, p, j);
                auto [j1, j2] = tilting_normal_form(j, p);
                int m = tjs_m_bound(n, p, j);
                for (int l : s) {
                    CHECK(l >= 0);
                    CHECK(l <= m);
                }
                // the guaranteed nonzero window [j_2, m] is always present
                for (long long l = j2; l <= m; ++l) CHECK(s.count(static_cast<int>(l)) == 1);
            }
        }
}

TEST_CASE("scan reproduces the non-interval example") {
    std::set<int> s = tilt_summand_scan(4, 5, 69);
    CHECK(s == noninterval_example(4, 5));
}

TEST_CASE("pushforward catalog") {
    auto p42 = pushforward_catalog(4, 5, 2);
    CHECK(p42.size() == 3);
    for (const auto& s : p42) CHECK(s.flag == MultFlag::Nonzero);

    auto p51 = pushforward_catalog(5, 5, 1);
    CHECK(count_kind(p51, SummandKind::SheafK) == 2);
    CHECK(count_kind(p51, SummandKind::SheafSymQ) == 3);
    for (const auto& s : p51) CHECK(s.flag == MultFlag::Nonzero);

    auto p52 = pushforward_catalog(5, 3, 2);
    CHECK(count_kind(p52, SummandKind::SheafK) == 4);
    for (const auto& s : p52) CHECK(s.flag == MultFlag::Possible);
}
