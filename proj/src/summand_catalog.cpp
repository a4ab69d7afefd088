#include "ffrt/summand_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffrt/fp_linear.hpp"
#include "ffrt/koszul_catalog.hpp"
#include "ffrt/sl2_characters.hpp"

namespace ffrt {

std::string SummandInstance::label() const {
    switch (kind) {
        case SummandKind::TiltFree: return "T(" + std::to_string(l) + ")";
        case SummandKind::K: return "K(" + std::to_string(j) + "," + std::to_string(k) + ")";
        case SummandKind::Cov: return "Cov(" + std::to_string(l) + ")";
        case SummandKind::SheafSymQ: return "S^" + std::to_string(l) + "Q";
        case SummandKind::SheafK: return "sheafK(" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return "?";
}

bool SummandInstance::same_kind(const SummandInstance& o) const {
    return kind == o.kind && l == o.l && j == o.j && k == o.k && frobenius_level == o.frobenius_level;
}

void require_hypotheses(int n, std::int64_t p) {
    if (n < 4) throw std::invalid_argument("hypothesis violated: n >= 4");
    if (!is_prime(p)) throw std::invalid_argument("hypothesis violated: p prime");
    if (p < std::max<std::int64_t>(n - 2, 3))
        throw std::invalid_argument("hypothesis violated: p >= max{n-2,3}");
}

std::vector<SummandInstance> catalog_S_Gr(int n, std::int64_t p, int r, bool enforce_hypotheses) {
    if (enforce_hypotheses) require_hypotheses(n, p);
    if (r < 1) throw std::invalid_argument("catalog_S_Gr: r >= 1 required");
    std::vector<SummandInstance> out;
    for (int l = 0; l <= n - 3; ++l) {
        SummandInstance s;
        s.kind = SummandKind::TiltFree;
        s.l = l;
        s.frobenius_level = r;
        s.flag = MultFlag::Nonzero;
        out.push_back(s);
    }
    if (r == 1) {
        for (int j = 1; j <= n - 3; ++j) {
            SummandInstance s;
            s.kind = SummandKind::K;
            s.j = j;
            s.k = j;
            s.frobenius_level = 1;
            s.flag = MultFlag::Nonzero;
            s.note = "K_" + std::to_string(j) + " = K(" + std::to_string(j) + "," + std::to_string(j) +
                     ") normalized by " + std::to_string(j + 2);
            out.push_back(s);
        }
    } else {
        for (int j = 1; j <= n - 3; ++j)
            for (int k = 1; k <= n - 3; ++k) {
                SummandInstance s;
                s.kind = SummandKind::K;
                s.j = j;
                s.k = k;
                s.frobenius_level = r;
                s.flag = MultFlag::Nonzero;
                out.push_back(s);
            }
    }
    return out;
}

std::vector<SummandInstance> catalog_R(int n, std::int64_t p, int r, bool enforce_hypotheses) {
    std::vector<SummandInstance> out = catalog_S_Gr(n, p, r, enforce_hypotheses);
    for (auto& s : out)
        if (s.kind == SummandKind::TiltFree) s.kind = SummandKind::Cov;
    return out;
}

int tjs_m_bound(int n, std::int64_t p, long long j) {
    long long num = static_cast<long long>(n - 2) * (p - 1) + j;
    return static_cast<int>(num / p);  // nonnegative, plain division is floor
}

DecompositionReport decompose_TjS_G1(int n, std::int64_t p, long long j, bool enforce_hypotheses) {
    if (enforce_hypotheses) require_hypotheses(n, p);
    if (j < 0) throw std::invalid_argument("decompose_TjS_G1: j >= 0 required");
    DecompositionReport rep;
    rep.n = n;
    rep.p = p;
    rep.r = 1;
    rep.j = static_cast<int>(j);
    int m = tjs_m_bound(n, p, j);
    auto [j1, j2] = tilting_normal_form(j, p);
    rep.notes.push_back("m=" + std::to_string(m) + " j1=" + std::to_string(j1) +
                        " j2=" + std::to_string(j2));
    for (int l = 0; l <= m; ++l) {
        SummandInstance s;
        s.kind = SummandKind::TiltFree;
        s.l = l;
        s.frobenius_level = 1;
        if (j < p - 1)
            s.flag = MultFlag::Nonzero;
        else
            s.flag = (l >= j2 && l <= m) ? MultFlag::Nonzero : MultFlag::Possible;
        rep.catalog.push_back(s);
    }
    if (j < p - 1) {
        for (int l = 1; l <= n - 3; ++l) {
            SummandInstance s;
            s.kind = SummandKind::K;
            s.j = l;
            s.k = l;
            s.frobenius_level = 1;
            s.flag = MultFlag::Nonzero;
            s.note = "twist witness p(l+2)+d_t, first at degree " + std::to_string(p * (l + 2));
            rep.catalog.push_back(s);
        }
    }
    return rep;
}

DecompositionReport decompose_Kjk_G1(int n, std::int64_t p, int j, int k, bool enforce_hypotheses) {
    if (enforce_hypotheses) require_hypotheses(n, p);
    if (j < 1 || j > n - 3 || k < 1 || k > n - 3)
        throw std::invalid_argument("decompose_Kjk_G1: indices outside [1, n-3]");
    DecompositionReport rep;
    rep.n = n;
    rep.p = p;
    rep.r = 1;
    rep.j = j;
    rep.k = k;
    for (int l = 1; l <= n - 3; ++l) {
        long long lo, hi;
        if (l > k) {
            lo = l - k + m_lk(n, p, j, l, k);
            hi = l;
        } else if (l == k) {
            lo = 1;
            hi = n - 3;
        } else {
            lo = l;
            hi = l - k + n - 2 - m_lk(n, p, j, l, k);
        }
        for (long long rr = lo; rr <= hi; ++rr) {
            if (rr < 1 || rr > n - 3) continue;
            SummandInstance s;
            s.kind = SummandKind::K;
            s.j = static_cast<int>(rr);
            s.k = l;
            s.frobenius_level = 1;
            s.flag = MultFlag::Nonzero;
            rep.catalog.push_back(s);
        }
    }
    for (int l = 0; l <= n - 3; ++l) {
        SummandInstance s;
        s.kind = SummandKind::TiltFree;
        s.l = l;
        s.frobenius_level = 1;
        s.flag = MultFlag::Possible;
        rep.catalog.push_back(s);
    }
    return rep;
}

LimitResult iterate_limit(int n, std::int64_t p, long long j, bool enforce_hypotheses) {
    if (enforce_hypotheses) require_hypotheses(n, p);
    if (j < 0) throw std::invalid_argument("iterate_limit: j >= 0 required");
    auto floordiv = [](long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    auto bmap = [&](long long x) { return n - 2 + floordiv(x - n + 2, p); };
    LimitResult res;
    long long b = j;
    int iters = 0;
    for (;;) {
        long long nb = bmap(b);
        ++iters;
        if (nb == b) break;
        b = nb;
    }
    res.lo = 0;
    res.hi = static_cast<int>(b);
    res.iterations = iters;
    return res;
}

std::set<int> noninterval_example(int n, std::int64_t p) {
    require_hypotheses(n, p);
    if (p < n) throw std::invalid_argument("noninterval_example: example assumes p >= n");
    long long c = (static_cast<long long>(n - 1) * (p - 1)) / p;
    std::set<int> out;
    for (long long l = p - 1; l <= p - 2 + c; ++l) out.insert(static_cast<int>(l));
    for (long long l = 3 * p - 2 - c; l <= 3 * p - 2 + c; ++l) out.insert(static_cast<int>(l));
    for (long long g : {2 * p - 3, 2 * p - 2, 2 * p - 1})
        if (out.count(static_cast<int>(g)))
            throw std::domain_error("noninterval_example: gap check failed");
    return out;
}

std::set<int> tilt_summand_scan(int n, std::int64_t p, long long j) {
    require_hypotheses(n, p);
    if (j < 0) throw std::invalid_argument("tilt_summand_scan: j >= 0 required");
    std::set<int> out;
    WeightCharacter tj = char_tilting(static_cast<int>(j), p);
    for (long long q = 0; q <= static_cast<long long>(n) * (p - 1); ++q) {
        WeightCharacter prod = tj * char_tilting(static_cast<int>(q), p);
        TiltingMultiset parts = decompose_into_tiltings(prod, p);
        for (const auto& [m, c] : parts.mult) {
            TiltingMultiset inv = g1_invariants_tilting(m, p);
            for (const auto& [l, c2] : inv.mult) out.insert(l);
        }
    }
    return out;
}

std::vector<SummandInstance> pushforward_catalog(int n, std::int64_t p, int r, bool enforce_hypotheses) {
    if (enforce_hypotheses) require_hypotheses(n, p);
    if (r < 1) throw std::invalid_argument("pushforward_catalog: r >= 1 required");
    MultFlag flag = (r == 1 ? (p >= n - 1) : (p >= n)) ? MultFlag::Nonzero : MultFlag::Possible;
    std::vector<SummandInstance> out;
    for (int l = 0; l <= n - 3; ++l) {
        SummandInstance s;
        s.kind = SummandKind::SheafSymQ;
        s.l = l;
        s.frobenius_level = r;
        s.flag = flag;
        out.push_back(s);
    }
    if (r == 1) {
        for (int j = 1; j <= n - 3; ++j) {
            SummandInstance s;
            s.kind = SummandKind::SheafK;
            s.j = j;
            s.k = j;
            s.frobenius_level = 1;
            s.flag = flag;
            out.push_back(s);
        }
    } else {
        for (int j = 1; j <= n - 3; ++j)
            for (int k = 1; k <= n - 3; ++k) {
                SummandInstance s;
                s.kind = SummandKind::SheafK;
                s.j = j;
                s.k = k;
                s.frobenius_level = r;
                s.flag = flag;
                out.push_back(s);
            }
    }
    return out;
}

}  // namespace ffrt
