#include "ffrt/b1_cohomology.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ffrt {

namespace {

// Weight twist of the complete-resolution position m: positions alternate
// M(2ip w) -> M((2ip+2) w) -> M((2(i+1)p) w), with F and F^(p-1) maps.
long long resolution_twist(long long m, fp_t p) {
    if (m % 2 == 0) return m * p;
    return (m - 1) * p + 2;
}

DenseFp matrix_power(const DenseFp& f, int e) {
    DenseFp out(f.rows, f.cols, f.p);
    for (int i = 0; i < f.rows; ++i) out.at(i, i) = 1;
    for (int k = 0; k < e; ++k) out = mul(out, f);
    return out;
}

void validate_complex(const BComplex& cx, fp_t p) {
    if (cx.p != p) throw std::invalid_argument("b1_cohomology_oracle: modulus mismatch");
    for (const auto& term : cx.terms) {
        int d = static_cast<int>(term.weights.size());
        if (term.f.rows != d || term.f.cols != d)
            throw std::invalid_argument("b1_cohomology_oracle: F shape mismatch");
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (term.f.at(r, c) != 0 && term.weights[r] != term.weights[c] - 2)
                    throw std::invalid_argument("b1_cohomology_oracle: F is not weight -2");
        if (!matrix_power(term.f, static_cast<int>(p)).is_zero())
            throw std::invalid_argument("b1_cohomology_oracle: F not nilpotent of order p");
    }
    for (size_t i = 0; i + 1 < cx.terms.size(); ++i) {
        const DenseFp& d = cx.diffs[i];
        if (d.rows != static_cast<int>(cx.terms[i + 1].weights.size()) ||
            d.cols != static_cast<int>(cx.terms[i].weights.size()))
            throw std::invalid_argument("b1_cohomology_oracle: differential shape mismatch");
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (d.at(r, c) != 0 && cx.terms[i + 1].weights[r] != cx.terms[i].weights[c])
                    throw std::invalid_argument("b1_cohomology_oracle: differential not weight 0");
    }
}

// Index of cells (u, m) with u + m = tau carrying weight w; per cell the
// subspace of term u with weight w - twist(m).
struct Layer {
    // (term index, resolution position, list of basis indices), plus offsets
    struct Cell {
        int ti;
        long long m;
        std::vector<int> rows;
        int offset;
    };
    std::vector<Cell> cells;
    int total = 0;
};

Layer build_layer(const BComplex& cx, long long tau, long long w, fp_t p, B1Variant variant) {
    Layer layer;
    for (size_t ti = 0; ti < cx.terms.size(); ++ti) {
        long long u = cx.first_position + static_cast<long long>(ti);
        long long m = tau - u;
        if (variant == B1Variant::Ordinary && m < 0) continue;
        long long want = w - resolution_twist(m, p);
        Layer::Cell cell;
        cell.ti = static_cast<int>(ti);
        cell.m = m;
        for (size_t i = 0; i < cx.terms[ti].weights.size(); ++i)
            if (cx.terms[ti].weights[i] == want) cell.rows.push_back(static_cast<int>(i));
        if (cell.rows.empty()) continue;
        cell.offset = layer.total;
        layer.total += static_cast<int>(cell.rows.size());
        layer.cells.push_back(std::move(cell));
    }
    return layer;
}

// Total differential Layer(tau) -> Layer(tau+1): vertical complex maps plus
// (-1)^u horizontal F / F^(p-1) maps.
DenseFp layer_differential(const BComplex& cx, const Layer& src, const Layer& tgt, fp_t p) {
    DenseFp d(tgt.total, src.total, p);
    auto find_cell = [&](int ti, long long m) -> const Layer::Cell* {
        for (const auto& c : tgt.cells)
            if (c.ti == ti && c.m == m) return &c;
        return nullptr;
    };
    for (const auto& cell : src.cells) {
        // vertical: complex differential, same resolution position
        if (cell.ti + 1 < static_cast<int>(cx.terms.size())) {
            if (const Layer::Cell* to = find_cell(cell.ti + 1, cell.m)) {
                const DenseFp& dv = cx.diffs[cell.ti];
                for (size_t c = 0; c < cell.rows.size(); ++c)
                    for (size_t r = 0; r < to->rows.size(); ++r)
                        d.at(to->offset + static_cast<int>(r), cell.offset + static_cast<int>(c)) =
                            dv.at(to->rows[r], cell.rows[c]);
            }
        }
        // horizontal: F on even positions, F^(p-1) on odd, sign (-1)^u
        if (const Layer::Cell* to = find_cell(cell.ti, cell.m + 1)) {
            int e = (cell.m % 2 + 2) % 2 == 0 ? 1 : static_cast<int>(p) - 1;
            DenseFp fp_pow = matrix_power(cx.terms[cell.ti].f, e);
            long long u = cx.first_position + cell.ti;
            fp_t sign = ((u % 2 + 2) % 2 == 0) ? 1 : p - 1;
            for (size_t c = 0; c < cell.rows.size(); ++c)
                for (size_t r = 0; r < to->rows.size(); ++r)
                    d.at(to->offset + static_cast<int>(r), cell.offset + static_cast<int>(c)) =
                        fp_reduce(sign * fp_pow.at(to->rows[r], cell.rows[c]), p);
        }
    }
    return d;
}

}  // namespace

WeightCharacter b1_cohomology_oracle(const BComplex& cx, int l, fp_t p, B1Variant variant) {
    if (!is_prime(p)) throw std::invalid_argument("b1_cohomology_oracle: modulus not prime");
    validate_complex(cx, p);
    // candidate total weights at layer l, multiples of p
    std::set<long long> wset;
    for (size_t ti = 0; ti < cx.terms.size(); ++ti) {
        long long u = cx.first_position + static_cast<long long>(ti);
        long long m = static_cast<long long>(l) - u;
        if (variant == B1Variant::Ordinary && m < 0) continue;
        for (int w : cx.terms[ti].weights) {
            long long total = w + resolution_twist(m, p);
            if (total % p == 0) wset.insert(total);
        }
    }
    WeightCharacter out;
    for (long long w : wset) {
        Layer prev = build_layer(cx, l - 1, w, p, variant);
        Layer here = build_layer(cx, l, w, p, variant);
        Layer next = build_layer(cx, l + 1, w, p, variant);
        if (here.total == 0) continue;
        DenseFp din = layer_differential(cx, prev, here, p);
        DenseFp dout = layer_differential(cx, here, next, p);
        int h = (here.total - rank(dout)) - rank(din);
        if (h < 0) throw std::domain_error("b1_cohomology_oracle: negative cohomology dimension");
        if (h) out.add(static_cast<int>(w / p), h);
    }
    return out;
}

BComplex character_complex(long long a, fp_t p) {
    BComplex cx;
    cx.p = p;
    BRep term;
    term.weights = {static_cast<int>(a)};
    term.f = DenseFp(1, 1, p);
    cx.terms.push_back(std::move(term));
    return cx;
}

BComplex simple_times_character(int i, long long a, fp_t p) {
    if (i < 0 || i > p - 1) throw std::invalid_argument("simple_times_character: index outside [0, p-1]");
    BComplex cx;
    cx.p = p;
    BRep term;
    // L(i) = S^i V, basis x^s y^(i-s), twisted by (a w)
    for (int s = 0; s <= i; ++s) term.weights.push_back(2 * s - i + static_cast<int>(a));
    term.f = DenseFp(i + 1, i + 1, p);
    for (int s = 1; s <= i; ++s) term.f.at(s - 1, s) = fp_reduce(s, p);
    cx.terms.push_back(std::move(term));
    return cx;
}

namespace {

// Tensor product of complexes of B-representations with Koszul signs.
BComplex tensor_complex(const BComplex& a, const BComplex& b) {
    BComplex out;
    out.p = a.p;
    out.first_position = a.first_position + b.first_position;
    int la = static_cast<int>(a.terms.size()), lb = static_cast<int>(b.terms.size());
    int lo = out.first_position, hi = a.first_position + la - 1 + b.first_position + lb - 1;
    struct Piece { int ia, ib, offset; };
    std::vector<std::vector<Piece>> pieces(hi - lo + 1);
    for (int pos = lo; pos <= hi; ++pos) {
        BRep term;
        term.f = DenseFp(0, 0, a.p);
        std::vector<Piece>& ps = pieces[pos - lo];
        int off = 0;
        for (int ia = 0; ia < la; ++ia) {
            int ib = pos - (a.first_position + ia) - b.first_position;
            if (ib < 0 || ib >= lb) continue;
            ps.push_back({ia, ib, off});
            off += static_cast<int>(a.terms[ia].weights.size() * b.terms[ib].weights.size());
            for (int wa : a.terms[ia].weights)
                for (int wb : b.terms[ib].weights) term.weights.push_back(wa + wb);
        }
        term.f = DenseFp(off, off, a.p);
        for (const Piece& pc : ps) {
            const BRep& ta = a.terms[pc.ia];
            const BRep& tb = b.terms[pc.ib];
            int da = static_cast<int>(ta.weights.size()), db = static_cast<int>(tb.weights.size());
            for (int i = 0; i < da; ++i)
                for (int i2 = 0; i2 < da; ++i2) {
                    fp_t v = ta.f.at(i2, i);
                    if (!v) continue;
                    for (int j = 0; j < db; ++j)
                        term.f.at(pc.offset + i2 * db + j, pc.offset + i * db + j) =
                            fp_reduce(term.f.at(pc.offset + i2 * db + j, pc.offset + i * db + j) + v, a.p);
                }
            for (int j = 0; j < db; ++j)
                for (int j2 = 0; j2 < db; ++j2) {
                    fp_t v = tb.f.at(j2, j);
                    if (!v) continue;
                    for (int i = 0; i < da; ++i)
                        term.f.at(pc.offset + i * db + j2, pc.offset + i * db + j) =
                            fp_reduce(term.f.at(pc.offset + i * db + j2, pc.offset + i * db + j) + v, a.p);
                }
        }
        out.terms.push_back(std::move(term));
    }
    for (int pos = lo; pos < hi; ++pos) {
        const std::vector<Piece>& src = pieces[pos - lo];
        const std::vector<Piece>& tgt = pieces[pos + 1 - lo];
        DenseFp d(static_cast<int>(out.terms[pos + 1 - lo].weights.size()),
                  static_cast<int>(out.terms[pos - lo].weights.size()), a.p);
        auto find_tgt = [&](int ia, int ib) -> const Piece* {
            for (const auto& t : tgt)
                if (t.ia == ia && t.ib == ib) return &t;
            return nullptr;
        };
        for (const Piece& pc : src) {
            int da = static_cast<int>(a.terms[pc.ia].weights.size());
            int db = static_cast<int>(b.terms[pc.ib].weights.size());
            // d_a (x) id
            if (pc.ia + 1 < la) {
                if (const Piece* t = find_tgt(pc.ia + 1, pc.ib)) {
                    const DenseFp& dv = a.diffs[pc.ia];
                    int da2 = dv.rows;
                    for (int i = 0; i < da; ++i)
                        for (int i2 = 0; i2 < da2; ++i2) {
                            fp_t v = dv.at(i2, i);
                            if (!v) continue;
                            for (int jj = 0; jj < db; ++jj)
                                d.at(t->offset + i2 * db + jj, pc.offset + i * db + jj) = v;
                        }
                }
            }
            // (-1)^{deg a} id (x) d_b
            if (pc.ib + 1 < lb) {
                if (const Piece* t = find_tgt(pc.ia, pc.ib + 1)) {
                    const DenseFp& dv = b.diffs[pc.ib];
                    int degree_a = a.first_position + pc.ia;
                    fp_t sign = ((degree_a % 2 + 2) % 2 == 0) ? 1 : a.p - 1;
                    int db2 = dv.rows;
                    for (int jj = 0; jj < db; ++jj)
                        for (int j2 = 0; j2 < db2; ++j2) {
                            fp_t v = dv.at(j2, jj);
                            if (!v) continue;
                            for (int i = 0; i < da; ++i)
                                d.at(t->offset + i * db2 + j2, pc.offset + i * db + jj) =
                                    fp_reduce(sign * v, a.p);
                        }
                }
            }
        }
        out.diffs.push_back(std::move(d));
    }
    return out;
}

// Single Koszul factor: L(t-1)(-w) --y--> L(t) in degrees [-1, 0], or the
// single term L(t) when t = 0.
BComplex koszul_factor(int t, fp_t p) {
    BComplex cx;
    cx.p = p;
    if (t == 0) {
        cx.first_position = 0;
        cx.terms.push_back({{0}, DenseFp(1, 1, p)});
        return cx;
    }
    cx.first_position = -1;
    BRep src;
    for (int s = 0; s <= t - 1; ++s) src.weights.push_back(2 * s - (t - 1) - 1);  // (-w) twist
    src.f = DenseFp(t, t, p);
    for (int s = 1; s <= t - 1; ++s) src.f.at(s - 1, s) = fp_reduce(s, p);
    BRep dst;
    for (int s = 0; s <= t; ++s) dst.weights.push_back(2 * s - t);
    dst.f = DenseFp(t + 1, t + 1, p);
    for (int s = 1; s <= t; ++s) dst.f.at(s - 1, s) = fp_reduce(s, p);
    DenseFp y(t + 1, t, p);
    for (int s = 0; s <= t - 1; ++s) y.at(s, s) = 1;  // x^s y^(t-1-s) -> x^s y^(t-s)
    cx.terms.push_back(std::move(src));
    cx.terms.push_back(std::move(dst));
    cx.diffs.push_back(std::move(y));
    return cx;
}

}  // namespace

BComplex build_cjkt(int n, fp_t p, int j, int k, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("build_cjkt: t has wrong length");
    if (k < 1 || k > n) throw std::invalid_argument("build_cjkt: k outside [1, n]");
    for (int ti : t)
        if (ti < 0 || ti > p - 1) throw std::invalid_argument("build_cjkt: t entry outside [0, p-1]");
    BComplex cx = koszul_factor(t[0], p);
    for (int i = 1; i < n; ++i) cx = tensor_complex(cx, koszul_factor(t[i], p));
    for (auto& term : cx.terms)
        for (int& w : term.weights) w += j;
    // stupid truncation at positions >= -k, then shift by [-k]: degrees [0, k]
    int drop = 0;
    while (cx.first_position + drop < -k) ++drop;
    cx.terms.erase(cx.terms.begin(), cx.terms.begin() + drop);
    cx.diffs.erase(cx.diffs.begin(), cx.diffs.begin() + std::min<size_t>(drop, cx.diffs.size()));
    cx.first_position = cx.first_position + drop + k;
    return cx;
}

}  // namespace ffrt
