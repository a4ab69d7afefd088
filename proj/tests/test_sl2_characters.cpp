#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrt/sl2_characters.hpp"

using namespace ffrt;

namespace {

WeightCharacter wc(std::initializer_list<std::pair<int, long long>> items) {
    WeightCharacter c;
    for (auto [w, m] : items) c.add(w, m);
    return c;
}

TiltingMultiset tmult(std::initializer_list<std::pair<int, long long>> items) {
    TiltingMultiset t;
    for (auto [l, m] : items) t.mult[l] = m;
    return t;
}

}  // namespace

TEST_CASE("Weyl characters") {
    CHECK(char_weyl(0) == wc({{0, 1}}));
    CHECK(char_weyl(2) == wc({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK(char_weyl(3) == wc({{3, 1}, {1, 1}, {-1, 1}, {-3, 1}}));
    CHECK_THROWS(char_weyl(-1));
}

TEST_CASE("tilting characters in the small range") {
    CHECK(char_tilting(2, 3) == char_weyl(2));                  // T(p-1) is Steinberg
    CHECK(char_tilting(3, 3) == wc({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    CHECK(char_tilting(3, 3).dim() == 6);
    CHECK(char_tilting(4, 3) == char_weyl(4) + char_weyl(0));
    CHECK(char_tilting(4, 3).dim() == 6);
}

TEST_CASE("tilting character factorizes through the twist") {
    // T(5) = T(2) (x) T(1)^Fr at p = 3
    WeightCharacter lhs = char_tilting(5, 3);
    WeightCharacter rhs = char_tilting(2, 3) * frobenius_scale(char_tilting(1, 3), 1, 3);
    CHECK(lhs == rhs);
}

TEST_CASE("top coefficient of a tilting character is one") {
    for (std::int64_t p : {3, 5})
        for (int j = 0; j <= 30; ++j) {
            WeightCharacter c = char_tilting(j, p);
            CHECK(c.mult.rbegin()->first == j);
            CHECK(c.mult.rbegin()->second == 1);
        }
}

TEST_CASE("peeling tensor products of tiltings") {
    CHECK(decompose_into_tiltings(char_tilting(2, 3) * char_tilting(2, 3), 3) ==
          tmult({{4, 1}, {2, 1}}));
    CHECK(decompose_into_tiltings(char_weyl(1) * char_weyl(1), 3) == tmult({{2, 1}, {0, 1}}));
    CHECK(decompose_into_tiltings(wc({{0, 1}}), 3) == tmult({{0, 1}}));
    CHECK(decompose_into_tiltings(wc({{0, 1}}), 7) == tmult({{0, 1}}));
    // chi(4) alone is not a tilting character at p = 3
    CHECK_THROWS_AS(decompose_into_tiltings(char_weyl(4), 3), std::domain_error);
}

TEST_CASE("peeling partitions the dimension") {
    for (std::int64_t p : {3, 5})
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; b <= 6; ++b) {
                WeightCharacter c = char_tilting(a, p) * char_tilting(b, p);
                TiltingMultiset t = decompose_into_tiltings(c, p);
                long long dim = 0;
                for (const auto& [l, m] : t.mult) dim += m * dim_tilting(l, p);
                CHECK(dim == c.dim());
            }
}

TEST_CASE("tilting Pieri closed form") {
    CHECK(tilting_pieri(4, 5) == tmult({{5, 1}}));
    CHECK(tilting_pieri(5, 5) == tmult({{6, 1}, {4, 2}}));
    CHECK(tilting_pieri(6, 5) == tmult({{7, 1}, {5, 1}}));
    CHECK_THROWS(tilting_pieri(3, 5));
    CHECK_THROWS(tilting_pieri(13, 5));
}

TEST_CASE("Pieri closed form equals character peeling") {
    for (std::int64_t p : {3, 5, 7})
        for (int a = static_cast<int>(p) - 1; a <= 3 * p - 3; ++a) {
            TiltingMultiset peeled =
                decompose_into_tiltings(char_tilting(a, p) * char_weyl(1), p);
            CHECK(tilting_pieri(a, p) == peeled);
        }
}

TEST_CASE("fusion product basics") {
    std::map<int, long long> expect;
    expect[0] = 1;
    CHECK(fusion_product({1, 1}, 3) == expect);
    expect.clear();
    expect[1] = 1;
    CHECK(fusion_product({1, 0}, 3) == expect);
    expect.clear();
    expect[3] = 1;
    expect[1] = 1;
    CHECK(fusion_product({1, 2}, 5) == expect);
    CHECK_THROWS(fusion_product({2}, 3));
}

TEST_CASE("fusion product is commutative and associative") {
    for (std::int64_t p : {3, 5}) {
        for (int a = 0; a <= p - 2; ++a)
            for (int b = 0; b <= p - 2; ++b) {
                CHECK(fusion_product({a, b}, p) == fusion_product({b, a}, p));
                for (int c = 0; c <= p - 2; ++c) {
                    // associativity: fuse pairwise in both orders
                    auto ab = fusion_product({a, b}, p);
                    std::map<int, long long> lhs;
                    for (const auto& [l, m] : ab)
                        for (const auto& [q, m2] : fusion_product({l, c}, p)) lhs[q] += m * m2;
                    auto bc = fusion_product({b, c}, p);
                    std::map<int, long long> rhs;
                    for (const auto& [l, m] : bc)
                        for (const auto& [q, m2] : fusion_product({a, l}, p)) rhs[q] += m * m2;
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("G_1 invariants of tilting modules") {
    CHECK(g1_invariants_tilting(4, 3) == tmult({{0, 1}}));
    CHECK(g1_invariants_tilting(2, 3).mult.empty());  // Steinberg
    CHECK(g1_invariants_tilting(0, 3) == tmult({{0, 1}}));
    CHECK(g1_invariants_tilting(7, 3) == tmult({{1, 1}}));  // 7 = 4 + 3*1
}

TEST_CASE("G_1 invariants vanish off the l_1 = 2p-2 branch") {
    for (std::int64_t p : {3, 5, 7})
        for (long long l = 1; l <= 40; ++l) {
            auto [l1, l2] = tilting_normal_form(l, p);
            CHECK(g1_invariants_tilting(l, p).mult.empty() == (l1 != 2 * p - 2));
        }
}

TEST_CASE("Weyl expansion") {
    std::map<int, long long> e1{{2, 1}, {0, 1}};
    CHECK(weyl_expand(wc({{2, 1}, {0, 2}, {-2, 1}})) == e1);
    std::map<int, long long> e2{{0, 1}};
    CHECK(weyl_expand(wc({{0, 1}})) == e2);
    std::map<int, long long> e3{{4, 1}, {0, 1}};
    CHECK(weyl_expand(char_tilting(4, 3)) == e3);
    CHECK_THROWS_AS(weyl_expand(wc({{1, 1}})), std::invalid_argument);
}

TEST_CASE("invariant multiplicity") {
    CHECK(invariant_multiplicity(char_weyl(0)) == 1);
    CHECK(invariant_multiplicity(wc({{1, 4}, {-1, 4}})) == 0);
    CHECK(invariant_multiplicity(char_S(4, 2)) == 6);  // Pluecker count C(4,2)
}

TEST_CASE("Frobenius scaling") {
    CHECK(frobenius_scale(wc({{1, 1}, {-1, 1}}), 1, 3) == wc({{3, 1}, {-3, 1}}));
    WeightCharacter c = char_tilting(3, 5);
    CHECK(frobenius_scale(c, 0, 5) == c);
    CHECK(frobenius_scale(wc({{2, 1}}), 2, 3) == wc({{18, 1}}));
}

TEST_CASE("graded characters of the polynomial ring") {
    CHECK(char_S(4, 0).dim() == 1);
    CHECK(char_S(4, 1) == wc({{1, 4}, {-1, 4}}));
    CHECK(char_S(4, 2).dim() == 36);  // C(9,7)
    CHECK(char_S(5, 3).dim() == 220);
    CHECK(char_S(4, 5).symmetric());
}
