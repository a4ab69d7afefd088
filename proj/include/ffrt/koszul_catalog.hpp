#ifndef FFRT_KOSZUL_CATALOG_HPP
#define FFRT_KOSZUL_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffrt/sl2_characters.hpp"

namespace ffrt {

// One term of the equivariant resolution of M_j: the tilting factor T(w),
// the wedge power of F, the internal twist, and the homological position.
// The wedge j+1 is skipped, so positions run over [-(n-1), 0].
struct ResolutionTermSpec {
    int position;     // 0, -1, ..., -(n-1)
    int tilt_weight;  // w in T(w)
    int wedge;        // a in Lambda^a F
    int twist;        // S(twist), always -wedge
};

std::vector<ResolutionTermSpec> resolution_spec(int n, int j);

long long binomial(long long n, long long k);

// Graded character of M_j in degree d (full alternating sum).
WeightCharacter char_Mj(int n, int j, int d);

// Graded character of the (k+1)-st syzygy K_{jk} in degree d, as the
// truncated alternating sum over positions <= -(k+1). Exactness of the
// resolution makes this the actual character; negative multiplicities
// indicate a bug and throw.
WeightCharacter char_Kjk(int n, int j, int k, int d);

// Lowest degree where K_{jk} is nonzero: k+1 when k < j, else k+2.
int kjk_bottom_degree(int j, int k);
// Character of the bottom piece: Lambda^{k+1}F (x) S^{j-k-1}V when k < j,
// else Lambda^{k+2}F (x) S^{k-j}V.
WeightCharacter kjk_bottom_character(int n, int j, int k);

struct PropKjkReport {
    bool pdim_ok = false;
    bool duality_ok = false;
    bool bottom_ok = false;
    int pdim = -1;
    int bottom_degree = -1;
    int dual_j = -1, dual_k = -1;
    std::optional<int> failing_degree;
    bool ok() const { return pdim_ok && duality_ok && bottom_ok; }
};

// Character-level structural checks for K_{jk}: projective dimension from
// the term count, graded duality against K_{n-j-2,n-k-2} with twist n, and
// the normalized bottom piece. Degreewise checks run up to D.
PropKjkReport check_propKjk(int n, int j, int k, int D);

// Divisibility invariants of j + d_t: q^0 = (j+d_t)/p when p | j+d_t,
// q^1 = (j+d_t-p+2)/p when p | j+d_t-p+2. Never both defined for p >= 3.
struct QValue {
    bool defined = false;
    int ell = 0;  // 0 or 1
    long long value = 0;
};

QValue q_values(int j, long long d_t, std::int64_t p);

// The single Tate weight of H^l(B_1, L(i) (x) (a w)), in original weight
// units (a multiple of p), or absent.
std::optional<long long> tate_char_B1(int i, long long a, int l, std::int64_t p);

// H^l(B_1, C_{jk}^{(t)}) decomposes as R_1 + R_2 where R_1 is a (possibly
// zero) multiple of ((l - eps) p w) and R_2 is at most one explicit weight.
struct CohomologyPrediction {
    long long r1_weight = 0;               // in p-divided units
    std::optional<long long> r2_weight;    // in p-divided units
};

CohomologyPrediction predict_cohomology(int n, std::int64_t p, int j, int k,
                                        const std::vector<int>& t, int l);

// Interval of r with (r p w) nonzero in H^l(B_1, C_{jk}), plus m_{lk}.
struct WeightInterval {
    long long lo = 0, hi = -1;
    int m_lk = 0;
    bool empty() const { return lo > hi; }
};

WeightInterval weight_interval(int n, std::int64_t p, int j, int k, int l);

// m_{lk} used by both the H^l interval and the K_{jk}^{G_1} interval.
int m_lk(int n, std::int64_t p, int j, int l, int k);

}  // namespace ffrt

#endif
