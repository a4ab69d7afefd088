#include "ffrt/equivariant_resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ffrt/binomials.hpp"
#include "ffrt/threads.hpp"

namespace ffrt {

namespace {

int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

// Sign of substituting variable b -> a inside the ascending wedge word whose
// remaining letters are `mask` (endpoints excluded): (-1)^(letters between).
fp_t wedge_swap_sign(int mask, int b, int a, fp_t p) {
    int lo = std::min(a, b) + 1, hi = std::max(a, b);
    int between = 0;
    for (int i = lo; i < hi; ++i)
        if (mask & (1 << i)) ++between;
    return between % 2 == 0 ? 1 : p - 1;
}

// x-exponent vectors a with 0 <= a_i <= cap_i and sum(2a - cap) = weight.
std::vector<std::vector<int>> x_exponents(const std::vector<int>& cap, int weight) {
    int d = std::accumulate(cap.begin(), cap.end(), 0);
    std::vector<std::vector<int>> out;
    if ((weight + d) % 2 != 0) return out;
    int target = (weight + d) / 2;
    if (target < 0 || target > d) return out;
    std::vector<int> cur;
    std::function<void(size_t, int)> rec = [&](size_t var, int rem) {
        if (var == cap.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int tail = 0;
        for (size_t i = var + 1; i < cap.size(); ++i) tail += cap[i];
        for (int a = std::max(0, rem - tail); a <= std::min(cap[var], rem); ++a) {
            cur.push_back(a);
            rec(var + 1, rem - a);
            cur.pop_back();
        }
    };
    rec(0, target);
    return out;
}

void enumerate_multidegrees(int n, int d, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 1) {
        cur.push_back(d);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_multidegrees(n - 1, d - e, cur, emit);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_multidegrees(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_multidegrees(n, d, cur, [&](const std::vector<int>& m) { out.push_back(m); });
    return out;
}

// Monomial of small degree as a sorted multiset of (variable, 'x'|'y').
using SmallMono = std::vector<std::pair<int, char>>;

SmallMono canon(SmallMono m) {
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

struct EquivariantResolution::Block {
    std::vector<std::tuple<int, int, std::vector<int>>> basis;  // (tv, mask, x-exponents)
    std::map<std::tuple<int, int, std::vector<int>>, int> index;
    std::vector<int> mdeg;
    int weight = 0;
};

EquivariantResolution::Block EquivariantResolution::term_block(int u, const std::vector<int>& mdeg,
                                                               int w) const {
    Block blk;
    blk.mdeg = mdeg;
    blk.weight = w;
    if (u < 0 || u >= static_cast<int>(terms_.size())) return blk;
    const ResolutionTermSpec& t = terms_[u];
    for (int mask = 0; mask < (1 << n_); ++mask) {
        if (popcount(mask) != t.wedge) continue;
        std::vector<int> cap(n_);
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i) {
            cap[i] = mdeg[i] - ((mask >> i) & 1);
            if (cap[i] < 0) ok = false;
        }
        if (!ok) continue;
        for (int tv = 0; tv <= t.tilt_weight; ++tv) {
            int sweight = w - (2 * tv - t.tilt_weight);
            for (auto& a : x_exponents(cap, sweight)) {
                blk.index[{tv, mask, a}] = static_cast<int>(blk.basis.size());
                blk.basis.emplace_back(tv, mask, a);
            }
        }
    }
    return blk;
}

FpMatrix EquivariantResolution::block_map(int u, const Block& src, const Block& tgt) const {
    FpMatrix m(static_cast<int>(tgt.basis.size()), static_cast<int>(src.basis.size()), p_);
    if (u < 1 || u >= static_cast<int>(terms_.size())) return m;
    const auto& gen = gen_maps_[u];
    for (size_t col = 0; col < src.basis.size(); ++col) {
        const auto& [sv, smask, a] = src.basis[col];
        auto it = gen.find({sv, smask});
        if (it == gen.end()) continue;
        for (const GeneratorImage& img : it->second) {
            std::vector<int> a2 = a;
            for (size_t i = 0; i < img.vars.size(); ++i)
                if (img.kind[i] == 'x') a2[img.vars[i]] += 1;
            auto jt = tgt.index.find({img.tv, img.mask, a2});
            if (jt == tgt.index.end()) continue;
            m.add(jt->second, static_cast<int>(col), img.coeff);
        }
    }
    return m;
}

// The differential P_{-u} -> P_{-u+1} on generators, solved from the linear
// system: entries preserve multidegree and weight, and the map commutes with
// e, f and with the gl(F) root operators E_{i,i+1}, E_{i+1,i}. The solution
// space must be one-dimensional; the leading coefficient is normalized to 1.
void EquivariantResolution::solve_generator_map(int u) {
    const ResolutionTermSpec& sterm = terms_[u];
    const ResolutionTermSpec& tterm = terms_[u - 1];
    int ws = sterm.tilt_weight, wt = tterm.tilt_weight;
    int delta = sterm.wedge - tterm.wedge;
    if (delta < 1) throw std::domain_error("solve_generator_map: wedge powers not decreasing");

    struct Var {
        int sv, smask, tv, tmask;
        std::vector<int> vars;
        std::vector<char> kind;
    };
    std::vector<Var> vars;
    for (int smask = 0; smask < (1 << n_); ++smask) {
        if (popcount(smask) != sterm.wedge) continue;
        for (int tmask = smask;; tmask = (tmask - 1) & smask) {
            if (popcount(tmask) == tterm.wedge) {
                std::vector<int> dropped;
                for (int i = 0; i < n_; ++i)
                    if ((smask & (1 << i)) && !(tmask & (1 << i))) dropped.push_back(i);
                for (int bits = 0; bits < (1 << delta); ++bits) {
                    std::vector<char> kind(delta);
                    int mw = 0;
                    for (int i = 0; i < delta; ++i) {
                        kind[i] = (bits >> i) & 1 ? 'x' : 'y';
                        mw += kind[i] == 'x' ? 1 : -1;
                    }
                    for (int sv = 0; sv <= ws; ++sv)
                        for (int tv = 0; tv <= wt; ++tv)
                            if (2 * sv - ws == 2 * tv - wt + mw)
                                vars.push_back({sv, smask, tv, tmask, dropped, kind});
                }
            }
            if (tmask == 0) break;
        }
    }
    if (vars.empty()) throw std::domain_error("equivariance system has no admissible entries");

    // Row: (source generator, operator, target element). Operators:
    // 0 = e, 1 = f, 2+2i = E_{i,i+1}, 3+2i = E_{i+1,i}.
    int nops = 2 + 2 * (n_ - 1);
    using RowKey = std::tuple<int, int, int, int, int, SmallMono>;  // sv, smask, op, tv, tmask, mono
    std::map<RowKey, int> row_index;
    int nrows = 0;
    std::vector<std::tuple<int, int, fp_t>> coeffs;
    auto emit = [&](int gsv, int gsmask, int op, int tv, int tmask, const SmallMono& mono, int var,
                    fp_t c) {
        c = fp_reduce(c, p_);
        if (!c) return;
        auto [it, inserted] = row_index.try_emplace({gsv, gsmask, op, tv, tmask, mono}, nrows);
        if (inserted) ++nrows;
        coeffs.emplace_back(it->second, var, c);
    };

    for (int v = 0; v < static_cast<int>(vars.size()); ++v) {
        const Var& x = vars[v];
        SmallMono mono;
        for (int i = 0; i < delta; ++i) mono.emplace_back(x.vars[i], x.kind[i]);
        mono = canon(mono);

        // +O(X(g)) side, rows of g's own equation
        // e / f on the target tilting factor
        if (x.tv + 1 <= wt) emit(x.sv, x.smask, 0, x.tv + 1, x.tmask, mono, v, wt - x.tv);
        if (x.tv - 1 >= 0) emit(x.sv, x.smask, 1, x.tv - 1, x.tmask, mono, v, x.tv);
        // e / f on the monomial factor
        for (int i = 0; i < delta; ++i) {
            SmallMono m2 = mono;
            if (mono[i].second == 'y') {
                m2[i].second = 'x';
                emit(x.sv, x.smask, 0, x.tv, x.tmask, canon(m2), v, 1);
            } else {
                m2[i].second = 'y';
                emit(x.sv, x.smask, 1, x.tv, x.tmask, canon(m2), v, 1);
            }
        }
        for (int op = 2; op < nops; ++op) {
            int i = (op - 2) / 2;
            bool up = (op - 2) % 2 == 0;
            int from = up ? i + 1 : i, to = up ? i : i + 1;
            // gl(F) on the target wedge factor
            if ((x.tmask & (1 << from)) && !(x.tmask & (1 << to))) {
                int nm = (x.tmask & ~(1 << from)) | (1 << to);
                fp_t sgn = wedge_swap_sign(x.tmask & ~(1 << from), from, to, p_);
                emit(x.sv, x.smask, op, x.tv, nm, mono, v, sgn);
            }
            // gl(F) on the monomial factor (a derivation; repeated variables
            // in the image are legitimate monomials and stay as rows)
            for (int q = 0; q < delta; ++q) {
                if (mono[q].first != from) continue;
                SmallMono m2 = mono;
                m2[q].first = to;
                emit(x.sv, x.smask, op, x.tv, x.tmask, canon(m2), v, 1);
            }
        }

        // -X(O(g')) side: every generator g' with O(g') hitting (x.sv, x.smask)
        // picks up this variable in its own equation.
        if (x.sv - 1 >= 0) emit(x.sv - 1, x.smask, 0, x.tv, x.tmask, mono, v, -(ws - (x.sv - 1)));
        if (x.sv + 1 <= ws) emit(x.sv + 1, x.smask, 1, x.tv, x.tmask, mono, v, -(x.sv + 1));
        for (int op = 2; op < nops; ++op) {
            int i = (op - 2) / 2;
            bool up = (op - 2) % 2 == 0;
            int from = up ? i + 1 : i, to = up ? i : i + 1;
            if ((x.smask & (1 << to)) && !(x.smask & (1 << from))) {
                int om = (x.smask & ~(1 << to)) | (1 << from);
                fp_t sgn = wedge_swap_sign(x.smask & ~(1 << to), from, to, p_);
                emit(x.sv, om, op, x.tv, x.tmask, mono, v, -sgn);
            }
        }
    }

    FpMatrix sys(nrows, static_cast<int>(vars.size()), p_);
    for (const auto& [row, var, c] : coeffs) sys.add(row, var, c);
    auto null_vecs = kernel_basis(sys);
    if (null_vecs.size() != 1)
        throw std::domain_error("equivariance system has solution space of dimension " +
                                std::to_string(null_vecs.size()) + " at position " +
                                std::to_string(-u));
    FpVector sol = null_vecs[0];
    fp_t lead = 0;
    for (fp_t c : sol)
        if (c) { lead = c; break; }
    fp_t inv = fp_inverse(lead, p_);
    auto& gm = gen_maps_[u];
    for (size_t v = 0; v < vars.size(); ++v) {
        fp_t c = fp_reduce(sol[v] * inv, p_);
        if (!c) continue;
        const Var& x = vars[v];
        gm[{x.sv, x.smask}].push_back({x.tv, x.tmask, x.vars, x.kind, c});
    }
}

EquivariantResolution::EquivariantResolution(int n, int j, int D, fp_t p, int threads)
    : n_(n), j_(j), D_(D), p_(p), threads_(threads) {
    if (!is_prime(p)) throw std::invalid_argument("EquivariantResolution: modulus not prime");
    if (j < 1 || j > n - 3) throw std::invalid_argument("EquivariantResolution: j outside [1, n-3]");
    terms_ = resolution_spec(n, j);
    gen_maps_.resize(terms_.size());
    for (int u = 1; u < static_cast<int>(terms_.size()); ++u) solve_generator_map(u);
}

WeightCharacter EquivariantResolution::kernel_char(int u, int d) const {
    if (u < 1 || u >= static_cast<int>(terms_.size()))
        throw std::invalid_argument("kernel_char: position out of range");
    auto mdegs = all_multidegrees(n_, d);
    std::vector<WeightCharacter> partial(mdegs.size());
    parallel_for(static_cast<int>(mdegs.size()), [&](int mi) {
        for (int w = -d; w <= d; ++w) {
            Block src = term_block(u, mdegs[mi], w);
            if (src.basis.empty()) continue;
            Block tgt = term_block(u - 1, mdegs[mi], w);
            FpMatrix m = block_map(u, src, tgt);
            int nullity = static_cast<int>(src.basis.size()) - rank_dense(m);
            if (nullity) partial[mi].add(w, nullity);
        }
    }, threads_);
    WeightCharacter out;
    for (const auto& part : partial)
        for (const auto& [w, c] : part.mult) out.add(w, c);
    return out;
}

bool EquivariantResolution::composites_vanish() const {
    for (int d = 0; d <= D_; ++d) {
        auto mdegs = all_multidegrees(n_, d);
        std::vector<char> fails(mdegs.size(), 0);
        parallel_for(static_cast<int>(mdegs.size()), [&](int mi) {
            for (int w = -d; w <= d; ++w) {
                for (int u = 2; u < static_cast<int>(terms_.size()); ++u) {
                    Block a = term_block(u, mdegs[mi], w);
                    if (a.basis.empty()) continue;
                    Block b = term_block(u - 1, mdegs[mi], w);
                    Block c = term_block(u - 2, mdegs[mi], w);
                    FpMatrix d1 = block_map(u, a, b);
                    FpMatrix d0 = block_map(u - 1, b, c);
                    FpMatrix comp(d0.rows, d1.cols, p_);
                    for (const auto& [rc, v] : d1.entries)
                        for (const auto& [rc0, v0] : d0.entries)
                            if (rc0.second == rc.first) comp.add(rc0.first, rc.second, v0 * v);
                    if (!comp.entries.empty()) fails[mi] = 1;
                }
            }
        }, threads_);
        for (char f : fails)
            if (f) return false;
    }
    return true;
}

bool EquivariantResolution::exact_away_from_zero() const {
    for (int d = 0; d <= D_; ++d) {
        auto mdegs = all_multidegrees(n_, d);
        std::vector<char> fails(mdegs.size(), 0);
        parallel_for(static_cast<int>(mdegs.size()), [&](int mi) {
            for (int w = -d; w <= d; ++w) {
                for (int u = 1; u < static_cast<int>(terms_.size()); ++u) {
                    Block src = term_block(u, mdegs[mi], w);
                    if (src.basis.empty()) continue;
                    Block tgt = term_block(u - 1, mdegs[mi], w);
                    FpMatrix m = block_map(u, src, tgt);
                    int nullity = static_cast<int>(src.basis.size()) - rank_dense(m);
                    int expected = 0;
                    if (u + 1 < static_cast<int>(terms_.size())) {
                        Block up = term_block(u + 1, mdegs[mi], w);
                        expected = rank_dense(block_map(u + 1, up, src));
                    }
                    if (nullity != expected) fails[mi] = 1;
                }
            }
        }, threads_);
        for (char f : fails)
            if (f) return false;
    }
    return true;
}

WeightCharacter EquivariantResolution::kjk_gr_invariants(int k, int r, int d) const {
    if (k < 1 || k > n_ - 3) throw std::invalid_argument("kjk_gr_invariants: k outside [1, n-3]");
    if (r < 1) throw std::invalid_argument("kjk_gr_invariants: r < 1");
    long long pr = 1;
    for (int s = 0; s < r; ++s) pr *= p_;
    auto mdegs = all_multidegrees(n_, d);
    int wmax = d + terms_[k].tilt_weight;

    // e^(q) or f^(q) on a block of P_{-k}: divided-power comultiplication
    // across the symmetric-power tilting factor and the polynomial part.
    auto term_op = [&](char op, int q, const Block& src, const Block& tgt) {
        const ResolutionTermSpec& t = terms_[k];
        FpMatrix m(static_cast<int>(tgt.basis.size()), static_cast<int>(src.basis.size()), p_);
        for (size_t col = 0; col < src.basis.size(); ++col) {
            const auto& [tv, mask, a] = src.basis[col];
            std::vector<int> cap(n_);
            for (int i = 0; i < n_; ++i) cap[i] = src.mdeg[i] - ((mask >> i) & 1);
            for (int s = 0; s <= q; ++s) {
                int tq = q - s;
                fp_t cm = 1;
                int tv2 = tv;
                if (s > 0) {
                    if (op == 'e') {
                        tv2 = tv + s;
                        cm = tv2 <= t.tilt_weight ? binom_mod(t.tilt_weight - tv, s, p_) : 0;
                    } else {
                        tv2 = tv - s;
                        cm = tv2 >= 0 ? binom_mod(tv, s, p_) : 0;
                    }
                }
                if (!cm) continue;
                std::function<void(int, int, fp_t, std::vector<int>&)> rec =
                    [&](int var, int rem, fp_t coeff, std::vector<int>& acc) {
                        if (var == n_) {
                            if (rem) return;
                            auto it = tgt.index.find({tv2, mask, acc});
                            if (it == tgt.index.end()) return;
                            m.add(it->second, static_cast<int>(col), fp_reduce(cm * coeff, p_));
                            return;
                        }
                        int ai = acc[var];
                        int avail = op == 'e' ? cap[var] - ai : ai;
                        for (int mm = 0; mm <= std::min(rem, avail); ++mm) {
                            fp_t c = mm == 0 ? 1 : binom_mod(avail, mm, p_);
                            if (!c) continue;
                            acc[var] = ai + (op == 'e' ? mm : -mm);
                            rec(var + 1, rem - mm, fp_reduce(coeff * c, p_), acc);
                            acc[var] = ai;
                        }
                    };
                std::vector<int> acc = a;
                rec(0, tq, 1, acc);
            }
        }
        return m;
    };

    auto kernel_cols = [&](const Block& src, const Block& tgt) {
        FpMatrix m = block_map(k, src, tgt);
        auto vecs = kernel_basis(m);
        DenseFp cols(static_cast<int>(src.basis.size()), static_cast<int>(vecs.size()), p_);
        for (size_t c = 0; c < vecs.size(); ++c)
            for (size_t rr = 0; rr < vecs[c].size(); ++rr)
                cols.at(static_cast<int>(rr), static_cast<int>(c)) = vecs[c][rr];
        return cols;
    };

    std::vector<WeightCharacter> partial(mdegs.size());
    parallel_for(static_cast<int>(mdegs.size()), [&](int mi) {
        const auto& mdeg = mdegs[mi];
        for (long long w = -((wmax / pr) * pr); w <= wmax; w += pr) {
            Block src = term_block(k, mdeg, static_cast<int>(w));
            if (src.basis.empty()) continue;
            Block low = term_block(k - 1, mdeg, static_cast<int>(w));
            DenseFp kb = kernel_cols(src, low);
            if (kb.cols == 0) continue;
            std::vector<FpMatrix> restricted;
            long long q = 1;
            for (int s = 0; s < r; ++s) {
                for (char op : {'e', 'f'}) {
                    int wshift = op == 'e' ? 2 * static_cast<int>(q) : -2 * static_cast<int>(q);
                    Block tgt = term_block(k, mdeg, static_cast<int>(w) + wshift);
                    Block tgt_low = term_block(k - 1, mdeg, static_cast<int>(w) + wshift);
                    DenseFp tkb = kernel_cols(tgt, tgt_low);
                    FpMatrix opm = term_op(op, static_cast<int>(q), src, tgt);
                    DenseFp rhs(static_cast<int>(tgt.basis.size()), kb.cols, p_);
                    for (const auto& [rc, v] : opm.entries)
                        for (int c = 0; c < kb.cols; ++c)
                            rhs.at(rc.first, c) =
                                fp_reduce(rhs.at(rc.first, c) + v * kb.at(rc.second, c), p_);
                    DenseFp am = solve_exact(tkb, rhs);
                    FpMatrix A(am.rows, am.cols, p_);
                    for (int rr = 0; rr < am.rows; ++rr)
                        for (int cc = 0; cc < am.cols; ++cc)
                            if (am.at(rr, cc)) A.set(rr, cc, am.at(rr, cc));
                    restricted.push_back(std::move(A));
                }
                q *= p_;
            }
            int nullity = static_cast<int>(joint_kernel(restricted, kb.cols, p_).size());
            if (nullity) partial[mi].add(static_cast<int>(w / pr), nullity);
        }
    }, threads_);

    WeightCharacter out;
    for (const auto& part : partial)
        for (const auto& [w, c] : part.mult) out.add(w, c);
    return out;
}

}  // namespace ffrt
