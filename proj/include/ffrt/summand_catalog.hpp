#ifndef FFRT_SUMMAND_CATALOG_HPP
#define FFRT_SUMMAND_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ffrt {

// One catalog entry. TiltFree(l) stands for T(l)^{Fr^r} (x) S^{p^r} at the
// S-level; K(j,k) for the syzygy summand at Frobenius level r; Cov(l) for the
// module of covariants at the invariant-ring level; the sheaf kinds are
// labels for the pushforward catalog.
enum class SummandKind { TiltFree, K, Cov, SheafSymQ, SheafK };

enum class MultFlag { Nonzero, Possible };

struct SummandInstance {
    SummandKind kind = SummandKind::TiltFree;
    int l = -1;                // TiltFree / Cov / SheafSymQ index
    int j = -1, k = -1;        // K indices
    int frobenius_level = 0;
    std::optional<int> twist;  // attachment degree; empty = unknown
    MultFlag flag = MultFlag::Nonzero;
    std::string note;

    std::string label() const;
    bool same_kind(const SummandInstance& o) const;
};

struct DecompositionReport {
    int n = 0;
    std::int64_t p = 0;
    int r = 1;
    int j = -1, k = -1;
    std::vector<SummandInstance> catalog;
    std::vector<std::string> notes;
};

void require_hypotheses(int n, std::int64_t p);

// Summands of S^{G_r}: tilt-free T(0..n-3) plus the normalized K_j = K_{jj}
// for r = 1, all K_{jk} for r >= 2. The r >= 2 list does not depend on r.
std::vector<SummandInstance> catalog_S_Gr(int n, std::int64_t p, int r, bool enforce_hypotheses = true);

// The invariant-ring mirror: Cov(l) and K{j,k} entries.
std::vector<SummandInstance> catalog_R(int n, std::int64_t p, int r, bool enforce_hypotheses = true);

// Upper bound m for the tilt-free indices of (T(j) (x) S)^{G_1}.
int tjs_m_bound(int n, std::int64_t p, long long j);

// Summands of (T(j) (x) S)^{G_1}: for j < p-1 everything is nonzero; for
// j >= p-1 only tilt-free entries, nonzero exactly on [j_2, m].
DecompositionReport decompose_TjS_G1(int n, std::int64_t p, long long j, bool enforce_hypotheses = true);

// Summands of K_{jk}^{G_1}: K(r,l) for r in the interval of the refined
// cohomology bookkeeping (flagged nonzero), plus possible tilt-free entries.
DecompositionReport decompose_Kjk_G1(int n, std::int64_t p, int j, int k, bool enforce_hypotheses = true);

struct LimitResult {
    int lo = 0, hi = 0;
    int iterations = 0;
};

// Fixed points of the twist-bound dynamics a(j), b(j); the limiting support
// interval [0, n-3] or [0, n-2].
LimitResult iterate_limit(int n, std::int64_t p, long long j, bool enforce_hypotheses = true);

// The two-interval example [p-1, p-2+c] u [3p-2-c, 3p-2+c] at
// j = p-1 + (3p-2)p, valid for p >= n.
std::set<int> noninterval_example(int n, std::int64_t p);

// Exact tilt-free support of (T(j) (x) S)^{G_1} by scanning the tilting
// summands T(q), q <= n(p-1), of the coinvariant algebra.
std::set<int> tilt_summand_scan(int n, std::int64_t p, long long j);

// Sheaf-level pushforward catalog (labels only).
std::vector<SummandInstance> pushforward_catalog(int n, std::int64_t p, int r, bool enforce_hypotheses = true);

}  // namespace ffrt

#endif
