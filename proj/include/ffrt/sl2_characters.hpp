#ifndef FFRT_SL2_CHARACTERS_HPP
#define FFRT_SL2_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace ffrt {

// Multiset of SL2 weights (integer multiples of the fundamental weight),
// the common currency of every catalog. Stored multiplicities are > 0.
struct WeightCharacter {
    std::map<int, long long> mult;

    bool empty() const { return mult.empty(); }
    long long dim() const;
    long long at(int w) const;
    void add(int w, long long c);  // signed accumulate, erases zeros
    bool symmetric() const;        // invariant under w -> -w
    bool operator==(const WeightCharacter&) const = default;
};

WeightCharacter operator+(const WeightCharacter& a, const WeightCharacter& b);
WeightCharacter operator*(const WeightCharacter& a, const WeightCharacter& b);  // tensor
WeightCharacter operator*(long long c, const WeightCharacter& a);

// Decomposition of a tilting character, highest weight -> multiplicity.
struct TiltingMultiset {
    std::map<int, long long> mult;
    bool operator==(const TiltingMultiset&) const = default;
};

// chi(m): weights m, m-2, ..., -m each once.
WeightCharacter char_weyl(int m);

long long dim_tilting(int j, std::int64_t p);
WeightCharacter char_tilting(int j, std::int64_t p);

// Normal form l = l1 + p*l2 with (0 <= l1 <= p-2 and l2 = 0) or p-1 <= l1 <= 2p-2.
std::pair<int, long long> tilting_normal_form(long long l, std::int64_t p);

// Greedy highest-weight peeling; throws if c is not a tilting character.
TiltingMultiset decompose_into_tiltings(const WeightCharacter& c, std::int64_t p);

// Closed form for T(a) (x) T(1), p-1 <= a <= 3p-3.
TiltingMultiset tilting_pieri(int a, std::int64_t p);

// Fusion product of simples with indices <= p-2: tensor, decompose, drop the
// G_1-projective part (highest weights >= p-1).
std::map<int, long long> fusion_product(const std::vector<int>& indices, std::int64_t p);

// G_1-invariants of T(l) as a tilting multiset over the Frobenius twist:
// {l2: 1} when l1 = 2p-2 or l = 0, empty otherwise.
TiltingMultiset g1_invariants_tilting(long long l, std::int64_t p);

// Triangular change of basis into Weyl characters; input must be symmetric.
std::map<int, long long> weyl_expand(const WeightCharacter& c);

// Coefficient of chi(0); valid for characters of modules with good filtration.
long long invariant_multiplicity(const WeightCharacter& c);

// Multiply every weight by p^r.
WeightCharacter frobenius_scale(const WeightCharacter& c, int r, std::int64_t p);

// Character of Sym^d(F (x) V) with dim F = n: d-th graded piece of the
// polynomial ring in n weight-(+1)/(-1) variable pairs. Cached.
const WeightCharacter& char_S(int n, int d);

}  // namespace ffrt

#endif
