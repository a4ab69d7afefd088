#include "ffrt/sl2_characters.hpp"

#include <mutex>
#include <stdexcept>

namespace ffrt {

long long WeightCharacter::dim() const {
    long long d = 0;
    for (const auto& [w, c] : mult) d += c;
    return d;
}

long long WeightCharacter::at(int w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
}

void WeightCharacter::add(int w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = mult.try_emplace(w, 0);
    it->second += c;
    if (it->second == 0) mult.erase(it);
}

bool WeightCharacter::symmetric() const {
    for (const auto& [w, c] : mult)
        if (at(-w) != c) return false;
    return true;
}

WeightCharacter operator+(const WeightCharacter& a, const WeightCharacter& b) {
    WeightCharacter out = a;
    for (const auto& [w, c] : b.mult) out.add(w, c);
    return out;
}

WeightCharacter operator*(const WeightCharacter& a, const WeightCharacter& b) {
    WeightCharacter out;
    for (const auto& [wa, ca] : a.mult)
        for (const auto& [wb, cb] : b.mult) out.add(wa + wb, ca * cb);
    return out;
}

WeightCharacter operator*(long long c, const WeightCharacter& a) {
    WeightCharacter out;
    for (const auto& [w, m] : a.mult) out.add(w, c * m);
    return out;
}

WeightCharacter char_weyl(int m) {
    if (m < 0) throw std::invalid_argument("char_weyl: negative highest weight");
    WeightCharacter c;
    for (int w = -m; w <= m; w += 2) c.add(w, 1);
    return c;
}

std::pair<int, long long> tilting_normal_form(long long l, std::int64_t p) {
    if (l < 0) throw std::invalid_argument("tilting_normal_form: negative weight");
    if (l <= p - 2) return {static_cast<int>(l), 0};
    int l1 = static_cast<int>((l - (p - 1)) % p) + static_cast<int>(p) - 1;
    return {l1, (l - l1) / p};
}

WeightCharacter char_tilting(int j, std::int64_t p) {
    if (j < 0) throw std::invalid_argument("char_tilting: negative highest weight");
    if (j <= p - 1) return char_weyl(j);
    if (j <= 2 * p - 2) return char_weyl(j) + char_weyl(static_cast<int>(2 * p - 2) - j);
    auto [j1, j2] = tilting_normal_form(j, p);
    return char_tilting(j1, p) * frobenius_scale(char_tilting(static_cast<int>(j2), p), 1, p);
}

long long dim_tilting(int j, std::int64_t p) { return char_tilting(j, p).dim(); }

TiltingMultiset decompose_into_tiltings(const WeightCharacter& c, std::int64_t p) {
    TiltingMultiset out;
    WeightCharacter rem = c;
    while (!rem.empty()) {
        int top = rem.mult.rbegin()->first;
        long long mult = rem.mult.rbegin()->second;
        if (top < 0 || mult < 0) throw std::domain_error("decompose_into_tiltings: not a tilting character");
        WeightCharacter t = char_tilting(top, p);
        for (const auto& [w, m] : t.mult) rem.add(w, -mult * m);
        out.mult[top] += mult;
    }
    return out;
}

TiltingMultiset tilting_pieri(int a, std::int64_t p) {
    if (a < p - 1 || a > 3 * p - 3) throw std::invalid_argument("tilting_pieri: a outside [p-1, 3p-3]");
    TiltingMultiset out;
    out.mult[a + 1] = 1;
    if (a == p - 1 || a == 2 * p - 1) return out;
    out.mult[a - 1] = (a == p || a == 2 * p) ? 2 : 1;
    return out;
}

std::map<int, long long> fusion_product(const std::vector<int>& indices, std::int64_t p) {
    WeightCharacter prod;
    prod.add(0, 1);
    for (int i : indices) {
        if (i < 0 || i > p - 2) throw std::invalid_argument("fusion_product: index outside [0, p-2]");
        prod = prod * char_weyl(i);
    }
    TiltingMultiset t = decompose_into_tiltings(prod, p);
    std::map<int, long long> out;
    for (const auto& [l, m] : t.mult)
        if (l <= p - 2) out[l] += m;
    return out;
}

TiltingMultiset g1_invariants_tilting(long long l, std::int64_t p) {
    if (l < 0) throw std::invalid_argument("g1_invariants_tilting: negative weight");
    TiltingMultiset out;
    auto [l1, l2] = tilting_normal_form(l, p);
    if (l == 0 || l1 == 2 * p - 2) out.mult[static_cast<int>(l2)] = 1;
    return out;
}

std::map<int, long long> weyl_expand(const WeightCharacter& c) {
    if (!c.symmetric()) throw std::invalid_argument("weyl_expand: asymmetric character");
    std::map<int, long long> out;
    WeightCharacter rem = c;
    while (!rem.empty()) {
        int top = rem.mult.rbegin()->first;
        long long coeff = rem.mult.rbegin()->second;
        if (top < 0) throw std::domain_error("weyl_expand: reduction failed");
        WeightCharacter w = char_weyl(top);
        for (const auto& [wt, m] : w.mult) rem.add(wt, -coeff * m);
        out[top] += coeff;
    }
    return out;
}

long long invariant_multiplicity(const WeightCharacter& c) {
    auto exp = weyl_expand(c);
    auto it = exp.find(0);
    long long v = it == exp.end() ? 0 : it->second;
    if (v < 0) throw std::domain_error("invariant_multiplicity: no good filtration");
    return v;
}

WeightCharacter frobenius_scale(const WeightCharacter& c, int r, std::int64_t p) {
    if (r < 0) throw std::invalid_argument("frobenius_scale: negative level");
    long long f = 1;
    for (int i = 0; i < r; ++i) f *= p;
    WeightCharacter out;
    for (const auto& [w, m] : c.mult) out.add(static_cast<int>(w * f), m);
    return out;
}

const WeightCharacter& char_S(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("char_S: bad parameters");
    static std::mutex mu;
    static std::map<std::pair<int, int>, WeightCharacter> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    // one variable pair contributes chi(m) in degree m; convolve n times
    for (int e = 0; e <= d; ++e) {
        if (cache.count({1, e})) continue;
        cache[{1, e}] = char_weyl(e);
    }
    for (int i = 2; i <= n; ++i) {
        for (int e = 0; e <= d; ++e) {
            if (cache.count({i, e})) continue;
            WeightCharacter acc;
            for (int m = 0; m <= e; ++m) {
                const WeightCharacter& prev = cache[{i - 1, e - m}];
                for (const auto& [w, c] : prev.mult)
                    for (int wm = -m; wm <= m; wm += 2) acc.add(w + wm, c);
            }
            cache[{i, e}] = std::move(acc);
        }
    }
    return cache[{n, d}];
}

}  // namespace ffrt
