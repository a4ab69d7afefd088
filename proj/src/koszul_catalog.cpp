#include "ffrt/koszul_catalog.hpp"

#include <stdexcept>

namespace ffrt {

std::vector<ResolutionTermSpec> resolution_spec(int n, int j) {
    if (n < 4) throw std::invalid_argument("resolution_spec: n < 4");
    if (j < 1 || j > n - 3) throw std::invalid_argument("resolution_spec: j outside [1, n-3]");
    std::vector<ResolutionTermSpec> terms;
    for (int a = 0; a <= j; ++a) terms.push_back({-a, j - a, a, -a});
    for (int a = j + 2; a <= n; ++a) terms.push_back({-(a - 1), a - j - 2, a, -a});
    return terms;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

WeightCharacter term_char(int n, const ResolutionTermSpec& t, int d) {
    int sdeg = d + t.twist;
    if (sdeg < 0) return {};
    return binomial(n, t.wedge) * (char_weyl(t.tilt_weight) * char_S(n, sdeg));
}

}  // namespace

WeightCharacter char_Mj(int n, int j, int d) {
    WeightCharacter out;
    for (const auto& t : resolution_spec(n, j)) {
        WeightCharacter c = term_char(n, t, d);
        int sign = (-t.position) % 2 == 0 ? 1 : -1;
        for (const auto& [w, m] : c.mult) out.add(w, sign * m);
    }
    for (const auto& [w, m] : out.mult)
        if (m < 0) throw std::domain_error("char_Mj: negative multiplicity");
    return out;
}

WeightCharacter char_Kjk(int n, int j, int k, int d) {
    if (k < 1 || k > n - 3) throw std::invalid_argument("char_Kjk: k outside [1, n-3]");
    WeightCharacter out;
    for (const auto& t : resolution_spec(n, j)) {
        int m = -t.position;
        if (m < k + 1) continue;
        WeightCharacter c = term_char(n, t, d);
        int sign = (m - k - 1) % 2 == 0 ? 1 : -1;
        for (const auto& [w, mm] : c.mult) out.add(w, sign * mm);
    }
    for (const auto& [w, m] : out.mult)
        if (m < 0) throw std::domain_error("char_Kjk: negative multiplicity (exactness violated)");
    return out;
}

int kjk_bottom_degree(int j, int k) { return k < j ? k + 1 : k + 2; }

WeightCharacter kjk_bottom_character(int n, int j, int k) {
    if (k < j) return binomial(n, k + 1) * char_weyl(j - k - 1);
    return binomial(n, k + 2) * char_weyl(k - j);
}

PropKjkReport check_propKjk(int n, int j, int k, int D) {
    if (j < 1 || j > n - 3 || k < 1 || k > n - 3)
        throw std::invalid_argument("check_propKjk: indices outside [1, n-3]");
    PropKjkReport rep;
    rep.dual_j = n - j - 2;
    rep.dual_k = n - k - 2;

    // pdim from the term count of the truncated resolution
    auto terms = resolution_spec(n, j);
    int count = 0;
    for (const auto& t : terms)
        if (-t.position >= k + 1) ++count;
    rep.pdim = count - 1;
    rep.pdim_ok = (rep.pdim == n - k - 2);

    // graded duality: Hom(K_{jk}, S) has character of K_{n-j-2,n-k-2}
    // shifted by n. The dual of the resolution of K_{jk} is assembled from
    // the positions <= k of the resolution of M_j with S-degrees reflected.
    rep.duality_ok = true;
    for (int d = -n; d <= D; ++d) {
        WeightCharacter lhs;
        for (const auto& t : terms) {
            int m = -t.position;
            if (m > k) continue;
            int sdeg = d - t.twist;  // Hom(S(twist), S) = S(-twist)
            if (sdeg < 0) continue;
            WeightCharacter c = binomial(n, t.wedge) * (char_weyl(t.tilt_weight) * char_S(n, sdeg));
            int sign = (k - m) % 2 == 0 ? 1 : -1;
            for (const auto& [w, mm] : c.mult) lhs.add(w, sign * mm);
        }
        WeightCharacter rhs = char_Kjk(n, rep.dual_j, rep.dual_k, d + n);
        if (!(lhs == rhs)) {
            rep.duality_ok = false;
            if (!rep.failing_degree) rep.failing_degree = d;
            break;
        }
    }

    // normalized bottom degree and bottom character
    int b = kjk_bottom_degree(j, k);
    rep.bottom_degree = b;
    rep.bottom_ok = true;
    for (int d = 0; d < b; ++d)
        if (!char_Kjk(n, j, k, d).empty()) rep.bottom_ok = false;
    if (!(char_Kjk(n, j, k, b) == kjk_bottom_character(n, j, k))) rep.bottom_ok = false;
    if (!rep.bottom_ok && !rep.failing_degree) rep.failing_degree = b;
    return rep;
}

QValue q_values(int j, long long d_t, std::int64_t p) {
    if (j < 1) throw std::invalid_argument("q_values: j < 1");
    if (d_t < 0) throw std::invalid_argument("q_values: d_t < 0");
    QValue q;
    if ((j + d_t) % p == 0) {
        q.defined = true;
        q.ell = 0;
        q.value = (j + d_t) / p;
    } else if ((j + d_t - p + 2) % p == 0) {
        q.defined = true;
        q.ell = 1;
        q.value = (j + d_t - p + 2) / p;
    }
    return q;
}

std::optional<long long> tate_char_B1(int i, long long a, int l, std::int64_t p) {
    if (i < 0 || i > p - 2) throw std::invalid_argument("tate_char_B1: i outside [0, p-2]");
    auto mod = [p](long long x) { return ((x % p) + p) % p; };
    if (mod(i - a) == 0 && (l % 2 + 2) % 2 == 0) return l * p - (i - a);
    if (mod(i - (p - 2 - a)) == 0 && ((l % 2) + 2) % 2 == 1) return l * p + (i - (p - 2 - a));
    return std::nullopt;
}

CohomologyPrediction predict_cohomology(int n, std::int64_t p, int j, int k,
                                        const std::vector<int>& t, int l) {
    if (j < 1 || j > n - 3) throw std::invalid_argument("predict_cohomology: j outside [1, n-3]");
    if (k < 1 || k > n - 2) throw std::invalid_argument("predict_cohomology: k outside [1, n-2]");
    if (l < 1) throw std::invalid_argument("predict_cohomology: l < 1");
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("predict_cohomology: t has wrong length");
    long long d_t = 0;
    for (int ti : t) {
        if (ti < 0 || ti > p - 1) throw std::invalid_argument("predict_cohomology: t entry outside [0, p-1]");
        d_t += ti;
    }
    int eps = k > j ? 1 : 0;
    CohomologyPrediction pred;
    pred.r1_weight = l - eps;

    QValue q = q_values(j, d_t, p);
    if (!q.defined) return pred;
    int ell = ((l - k) % 2 + 2) % 2;
    if (l >= k && q.ell == ell && q.value <= k - eps)
        pred.r2_weight = q.value + l - k;
    else if (l <= k && q.ell == 1 - ell && q.value > k - eps)
        pred.r2_weight = q.value + l - k - 1;
    return pred;
}

int m_lk(int n, std::int64_t p, int j, int l, int k) {
    if (((l - k) % 2 + 2) % 2 == 0) return 1;
    if (l > k && j == n - 3 && p == n - 2) return 1;
    if (l < k && j == 1 && p == n - 2) return 1;
    return 0;
}

WeightInterval weight_interval(int n, std::int64_t p, int j, int k, int l) {
    if (j < 1 || j > n - 3) throw std::invalid_argument("weight_interval: j outside [1, n-3]");
    if (k < 1 || k > n - 2) throw std::invalid_argument("weight_interval: k outside [1, n-2]");
    int eps = k > j ? 1 : 0;
    if (l < 1 + eps) throw std::invalid_argument("weight_interval: l < 1+eps");
    WeightInterval iv;
    iv.m_lk = m_lk(n, p, j, l, k);
    if (l > k) {
        iv.lo = l - k + iv.m_lk;
        iv.hi = l - eps;
    } else if (l == k) {
        iv.lo = 1;
        iv.hi = n - 3;
    } else {
        iv.lo = l - eps;
        iv.hi = l - k + n - 2 - iv.m_lk;
    }
    return iv;
}

}  // namespace ffrt
