#include "ffrt/poly_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ffrt/binomials.hpp"
#include "ffrt/threads.hpp"

namespace ffrt {

namespace {

void enumerate_exponents(int slots, int total, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exponents(slots - 1, total - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis monomial_basis(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("monomial_basis: bad parameters");
    MonomialBasis b;
    b.n = n;
    b.d = d;
    std::vector<int> cur;
    enumerate_exponents(2 * n, d, cur, b.monomials);
    std::sort(b.monomials.begin(), b.monomials.end());
    return b;
}

int monomial_weight(const std::vector<int>& exps) {
    int w = 0;
    for (size_t i = 0; i + 1 < exps.size(); i += 2) w += exps[i] - exps[i + 1];
    return w;
}

namespace {

// Apply e^(order) (op='e') or f^(order) (op='f') to one monomial; emits
// (exponents, coeff) pairs. Compositions of the order over the n pairs.
void apply_divided_power(char op, int order, const std::vector<int>& exps, fp_t p,
                         const std::function<void(const std::vector<int>&, fp_t)>& emit) {
    int n = static_cast<int>(exps.size()) / 2;
    std::vector<int> cur = exps;
    std::function<void(int, int, fp_t)> rec = [&](int var, int rem, fp_t coeff) {
        if (var == n) {
            if (rem == 0) emit(cur, coeff);
            return;
        }
        int a = exps[2 * var], b = exps[2 * var + 1];
        int avail = (op == 'e') ? b : a;
        for (int m = 0; m <= std::min(rem, avail); ++m) {
            fp_t c = m == 0 ? 1 : binom_mod(avail, m, p);
            if (c == 0) continue;
            cur[2 * var] = a + (op == 'e' ? m : -m);
            cur[2 * var + 1] = b + (op == 'e' ? -m : m);
            rec(var + 1, rem - m, fp_reduce(coeff * c, p));
        }
        cur[2 * var] = a;
        cur[2 * var + 1] = b;
    };
    rec(0, order, 1);
}

}  // namespace

FpMatrix divided_power_matrix(char op, int order, int n, int d, fp_t p) {
    if (op != 'e' && op != 'f') throw std::invalid_argument("divided_power_matrix: op must be 'e' or 'f'");
    if (order < 1) throw std::invalid_argument("divided_power_matrix: order < 1");
    MonomialBasis basis = monomial_basis(n, d);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.monomials.size(); ++i) index[basis.monomials[i]] = static_cast<int>(i);
    FpMatrix m(static_cast<int>(basis.monomials.size()), static_cast<int>(basis.monomials.size()), p);
    for (size_t c = 0; c < basis.monomials.size(); ++c) {
        apply_divided_power(op, order, basis.monomials[c], p, [&](const std::vector<int>& tgt, fp_t coeff) {
            m.add(index.at(tgt), static_cast<int>(c), coeff);
        });
    }
    return m;
}

WeightCharacter ExplicitModule::character() const {
    WeightCharacter c;
    for (int w : weights) c.add(w, 1);
    return c;
}

void ExplicitModule::validate() const {
    for (int ord = 1; ord <= max_order(); ++ord) {
        const DenseFp& e = e_ops[ord - 1];
        const DenseFp& f = f_ops[ord - 1];
        if (e.rows != dim() || e.cols != dim() || f.rows != dim() || f.cols != dim())
            throw std::domain_error("ExplicitModule: operator shape mismatch");
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c) {
                if (e.at(r, c) != 0 && weights[r] != weights[c] + 2 * ord)
                    throw std::domain_error("ExplicitModule: e weight shift violated");
                if (f.at(r, c) != 0 && weights[r] != weights[c] - 2 * ord)
                    throw std::domain_error("ExplicitModule: f weight shift violated");
            }
    }
}

ExplicitModule trivial_module(fp_t p, int max_order) {
    ExplicitModule m;
    m.p = p;
    m.weights = {0};
    m.e_ops.assign(max_order, DenseFp(1, 1, p));
    m.f_ops.assign(max_order, DenseFp(1, 1, p));
    return m;
}

ExplicitModule symmetric_power_module(int deg, fp_t p, int max_order) {
    if (deg < 0) throw std::invalid_argument("symmetric_power_module: negative degree");
    ExplicitModule m;
    m.p = p;
    // basis x^a y^(deg-a), a = 0..deg
    for (int a = 0; a <= deg; ++a) m.weights.push_back(2 * a - deg);
    for (int ord = 1; ord <= max_order; ++ord) {
        DenseFp e(deg + 1, deg + 1, p), f(deg + 1, deg + 1, p);
        for (int a = 0; a <= deg; ++a) {
            int b = deg - a;
            if (a + ord <= deg) e.at(a + ord, a) = binom_mod(b, ord, p);
            if (a - ord >= 0) f.at(a - ord, a) = binom_mod(a, ord, p);
        }
        m.e_ops.push_back(std::move(e));
        m.f_ops.push_back(std::move(f));
    }
    return m;
}

ExplicitModule tensor(const ExplicitModule& a, const ExplicitModule& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor: modulus mismatch");
    int K = std::min(a.max_order(), b.max_order());
    ExplicitModule m;
    m.p = a.p;
    int da = a.dim(), db = b.dim();
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) m.weights.push_back(a.weights[i] + b.weights[j]);
    auto comult = [&](const std::vector<DenseFp>& oa, const std::vector<DenseFp>& ob, int ord) {
        DenseFp out(da * db, da * db, a.p);
        // e^(ord)(u (x) v) = sum_{s+t=ord} e^(s)u (x) e^(t)v
        for (int s = 0; s <= ord; ++s) {
            int t = ord - s;
            for (int i = 0; i < da; ++i)
                for (int i2 = 0; i2 < da; ++i2) {
                    fp_t ca = (s == 0) ? (i == i2 ? 1 : 0) : oa[s - 1].at(i2, i);
                    if (!ca) continue;
                    for (int j = 0; j < db; ++j)
                        for (int j2 = 0; j2 < db; ++j2) {
                            fp_t cb = (t == 0) ? (j == j2 ? 1 : 0) : ob[t - 1].at(j2, j);
                            if (!cb) continue;
                            int col = i * db + j, row = i2 * db + j2;
                            out.at(row, col) = fp_reduce(out.at(row, col) + ca * cb, a.p);
                        }
                }
        }
        return out;
    };
    for (int ord = 1; ord <= K; ++ord) {
        m.e_ops.push_back(comult(a.e_ops, b.e_ops, ord));
        m.f_ops.push_back(comult(a.f_ops, b.f_ops, ord));
    }
    return m;
}

ExplicitModule frobenius_twist(const ExplicitModule& src) {
    ExplicitModule m;
    m.p = src.p;
    for (int w : src.weights) m.weights.push_back(w * static_cast<int>(src.p));
    int K = src.max_order() * static_cast<int>(src.p);
    for (int ord = 1; ord <= K; ++ord) {
        if (ord % src.p == 0) {
            m.e_ops.push_back(src.e_ops[ord / src.p - 1]);
            m.f_ops.push_back(src.f_ops[ord / src.p - 1]);
        } else {
            m.e_ops.emplace_back(src.dim(), src.dim(), src.p);
            m.f_ops.emplace_back(src.dim(), src.dim(), src.p);
        }
    }
    return m;
}

namespace {

// Submodule spanned by the (weight-homogeneous) columns of an idempotent.
ExplicitModule restrict_to_image(const ExplicitModule& m, const DenseFp& idem) {
    int d = m.dim();
    // weight-homogeneous column reduction: pick pivot columns per weight
    std::vector<int> col_order(d);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::vector<FpVector> chosen;      // basis vectors
    std::vector<int> chosen_weight;
    std::vector<FpVector> reduced;     // echelon copies for independence tests
    for (int c : col_order) {
        FpVector v(d, 0);
        for (int r = 0; r < d; ++r) v[r] = idem.at(r, c);
        FpVector red = v;
        for (const auto& er : reduced) {
            int lead = -1;
            for (int i = 0; i < d; ++i)
                if (er[i]) { lead = i; break; }
            if (lead >= 0 && red[lead]) {
                fp_t f = fp_reduce(red[lead] * fp_inverse(er[lead], m.p), m.p);
                for (int i = 0; i < d; ++i) red[i] = fp_reduce(red[i] - f * er[i], m.p);
            }
        }
        bool zero = std::all_of(red.begin(), red.end(), [](fp_t x) { return x == 0; });
        if (zero) continue;
        reduced.push_back(red);
        chosen.push_back(v);
        chosen_weight.push_back(m.weights[c]);
    }
    int r = static_cast<int>(chosen.size());
    DenseFp basis(d, r, m.p);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < d; ++i) basis.at(i, c) = chosen[c][i];
    ExplicitModule out;
    out.p = m.p;
    out.weights = chosen_weight;
    for (int ord = 1; ord <= m.max_order(); ++ord) {
        out.e_ops.push_back(solve_exact(basis, mul(m.e_ops[ord - 1], basis)));
        out.f_ops.push_back(solve_exact(basis, mul(m.f_ops[ord - 1], basis)));
    }
    return out;
}

// Basis of weight-preserving endomorphisms commuting with every stored
// operator: the equivariant commutant.
std::vector<DenseFp> equivariant_commutant(const ExplicitModule& m) {
    int d = m.dim();
    std::vector<std::pair<int, int>> vars;  // (row, col) with equal weights
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (m.weights[r] == m.weights[c]) vars.emplace_back(r, c);
    std::map<std::pair<int, int>, int> var_index;
    for (size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);

    std::vector<const DenseFp*> ops;
    for (const auto& o : m.e_ops) ops.push_back(&o);
    for (const auto& o : m.f_ops) ops.push_back(&o);

    FpMatrix sys(static_cast<int>(ops.size()) * d * d, static_cast<int>(vars.size()), m.p);
    int row_base = 0;
    for (const DenseFp* op : ops) {
        for (size_t v = 0; v < vars.size(); ++v) {
            auto [xr, xc] = vars[v];
            // (X op)_{xr, c} picks up X_{xr, xc} op_{xc, c}
            for (int c = 0; c < d; ++c) {
                fp_t o = op->at(xc, c);
                if (o) sys.add(row_base + xr * d + c, static_cast<int>(v), -o);
            }
            // (op X)_{r, xc} picks up op_{r, xr} X_{xr, xc}
            for (int r = 0; r < d; ++r) {
                fp_t o = op->at(r, xr);
                if (o) sys.add(row_base + r * d + xc, static_cast<int>(v), o);
            }
        }
        row_base += d * d;
    }
    auto null_vecs = kernel_basis(sys);
    std::vector<DenseFp> basis;
    for (const auto& nv : null_vecs) {
        DenseFp x(d, d, m.p);
        for (size_t v = 0; v < vars.size(); ++v)
            if (nv[v]) x.at(vars[v].first, vars[v].second) = nv[v];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Deterministic search for an idempotent in the commutant whose image has
// the requested character.
ExplicitModule split_summand(const ExplicitModule& m, const WeightCharacter& target) {
    auto comm = equivariant_commutant(m);
    int B = static_cast<int>(comm.size());
    int d = m.dim();
    long long total = 1;
    for (int i = 0; i < B; ++i) {
        total *= m.p;
        if (total > 2'000'000) throw std::domain_error("split_summand: commutant too large to enumerate");
    }
    int top = target.mult.rbegin()->first;
    // scalar of each commutant element on the (1-dim) top weight space
    int top_idx = -1;
    for (int i = 0; i < d; ++i)
        if (m.weights[i] == top) {
            if (top_idx >= 0) throw std::domain_error("split_summand: top weight space not 1-dim");
            top_idx = i;
        }
    std::vector<fp_t> top_scalar(B);
    for (int b = 0; b < B; ++b) top_scalar[b] = comm[b].at(top_idx, top_idx);

    std::vector<fp_t> coef(B, 0);
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        fp_t ts = 0;
        for (int b = 0; b < B; ++b) {
            coef[b] = c % m.p;
            c /= m.p;
            ts = fp_reduce(ts + coef[b] * top_scalar[b], m.p);
        }
        if (ts != 1) continue;  // a projection onto T(top) is the identity up there
        DenseFp x(d, d, m.p);
        for (int b = 0; b < B; ++b)
            if (coef[b]) x = add(x, scale(comm[b], coef[b]));
        DenseFp x2 = mul(x, x);
        bool idem = true;
        for (size_t i = 0; i < x.a.size() && idem; ++i) idem = (x2.a[i] == x.a[i]);
        if (!idem) continue;
        WeightCharacter img;
        // rank per weight = char of image
        std::map<int, std::vector<int>> by_weight;
        for (int i = 0; i < d; ++i) by_weight[m.weights[i]].push_back(i);
        for (const auto& [w, idxs] : by_weight) {
            DenseFp sub(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()), m.p);
            for (size_t r = 0; r < idxs.size(); ++r)
                for (size_t cc = 0; cc < idxs.size(); ++cc) sub.at(static_cast<int>(r), static_cast<int>(cc)) = x.at(idxs[r], idxs[cc]);
            int rk = rank(sub);
            if (rk) img.add(w, rk);
        }
        if (img == target) return restrict_to_image(m, x);
    }
    throw std::domain_error("split_summand: no idempotent with the requested character");
}

}  // namespace

ExplicitModule realize_tilting(int j, fp_t p, int max_order) {
    if (j < 0) throw std::invalid_argument("realize_tilting: negative weight");
    // enough orders to pin down genuine equivariance during splitting
    int build_order = std::max(max_order, 2 * static_cast<int>(p));
    ExplicitModule result;
    if (j <= p - 1) {
        result = symmetric_power_module(j, p, build_order);
    } else if (j <= 2 * p - 2) {
        ExplicitModule prev = realize_tilting(j - 1, p, build_order);
        ExplicitModule prod = tensor(prev, symmetric_power_module(1, p, build_order));
        TiltingMultiset pieri = tilting_pieri(j - 1, p);
        if (pieri.mult.size() == 1) {
            result = std::move(prod);  // T(j-1) (x) V = T(j), no splitting
        } else {
            result = split_summand(prod, char_tilting(j, p));
        }
    } else {
        auto [j1, j2] = tilting_normal_form(j, p);
        ExplicitModule a = realize_tilting(j1, p, build_order);
        ExplicitModule b = frobenius_twist(realize_tilting(static_cast<int>(j2), p, build_order));
        result = tensor(a, b);
    }
    result.validate();
    if (!(result.character() == char_tilting(j, p)))
        throw std::domain_error("realize_tilting: character mismatch");
    if (result.max_order() > max_order) {
        result.e_ops.resize(max_order);
        result.f_ops.resize(max_order);
    }
    return result;
}

namespace {

// x-exponent vectors a with 0 <= a_i <= delta_i and sum(2a - delta) = weight.
std::vector<std::vector<int>> x_exponent_block(const std::vector<int>& delta, int weight) {
    int d = std::accumulate(delta.begin(), delta.end(), 0);
    std::vector<std::vector<int>> out;
    if ((weight + d) % 2 != 0) return out;
    int target = (weight + d) / 2;
    if (target < 0 || target > d) return out;
    std::vector<int> cur;
    std::function<void(size_t, int)> rec = [&](size_t var, int rem) {
        if (var == delta.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int tail = 0;
        for (size_t i = var + 1; i < delta.size(); ++i) tail += delta[i];
        for (int a = std::max(0, rem - tail); a <= std::min(delta[var], rem); ++a) {
            cur.push_back(a);
            rec(var + 1, rem - a);
            cur.pop_back();
        }
    };
    rec(0, target);
    return out;
}

void enumerate_compositions(int n, int d, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 1) {
        cur.push_back(d);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_compositions(n - 1, d - e, cur, emit);
        cur.pop_back();
    }
}

struct TensorBlock {
    // basis: (module index, x-exponent index into slices by module weight)
    std::vector<std::pair<int, int>> basis;           // (mu, position in sblock[mu])
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<std::vector<int>>> sblock;  // per module vector: monomial list
};

TensorBlock build_block(const ExplicitModule& mod, const std::vector<int>& delta, int w) {
    TensorBlock blk;
    blk.sblock.resize(mod.dim());
    for (int mu = 0; mu < mod.dim(); ++mu) {
        blk.sblock[mu] = x_exponent_block(delta, w - mod.weights[mu]);
        for (size_t i = 0; i < blk.sblock[mu].size(); ++i) {
            blk.index[{mu, static_cast<int>(i)}] = static_cast<int>(blk.basis.size());
            blk.basis.emplace_back(mu, static_cast<int>(i));
        }
    }
    return blk;
}

// e^(q) or f^(q) from block (delta, w) to block (delta, w +- 2q), via the
// divided-power comultiplication across the module and polynomial factors.
// Dense output: these blocks are small and the elimination is the hot path.
DenseFp block_operator(const ExplicitModule& mod, const std::vector<int>& delta, char op, int q,
                       const TensorBlock& src, const TensorBlock& tgt, fp_t p) {
    DenseFp m(static_cast<int>(tgt.basis.size()), static_cast<int>(src.basis.size()), p);
    int n = static_cast<int>(delta.size());
    for (size_t col = 0; col < src.basis.size(); ++col) {
        auto [mu, si] = src.basis[col];
        const std::vector<int>& a = src.sblock[mu][si];
        for (int s = 0; s <= q; ++s) {
            int t = q - s;  // s on the module, t on the polynomial part
            for (int mu2 = 0; mu2 < mod.dim(); ++mu2) {
                fp_t cm;
                if (s == 0)
                    cm = (mu2 == mu) ? 1 : 0;
                else
                    cm = (op == 'e' ? mod.e_ops[s - 1] : mod.f_ops[s - 1]).at(mu2, mu);
                if (!cm) continue;
                // distribute t over the n variable pairs
                std::function<void(int, int, fp_t, std::vector<int>&)> rec = [&](int var, int rem, fp_t coeff, std::vector<int>& acc) {
                    if (var == n) {
                        if (rem) return;
                        auto it = std::lower_bound(tgt.sblock[mu2].begin(), tgt.sblock[mu2].end(), acc);
                        if (it == tgt.sblock[mu2].end() || *it != acc) return;
                        int ti = static_cast<int>(it - tgt.sblock[mu2].begin());
                        int row = tgt.index.at({mu2, ti});
                        m.at(row, static_cast<int>(col)) =
                            fp_reduce(m.at(row, static_cast<int>(col)) + cm * coeff, p);
                        return;
                    }
                    int ai = acc[var];
                    int avail = (op == 'e') ? delta[var] - ai : ai;
                    for (int mm = 0; mm <= std::min(rem, avail); ++mm) {
                        fp_t c = mm == 0 ? 1 : binom_mod(avail, mm, p);
                        if (!c) { continue; }
                        acc[var] = ai + (op == 'e' ? mm : -mm);
                        rec(var + 1, rem - mm, fp_reduce(coeff * c, p), acc);
                        acc[var] = ai;
                    }
                };
                std::vector<int> acc = a;
                rec(0, t, 1, acc);
            }
        }
    }
    return m;
}

}  // namespace

WeightCharacter graded_invariants_of_tensor(const ExplicitModule& mod, int n, fp_t p, int r,
                                            int d, int threads) {
    if (!is_prime(p)) throw std::invalid_argument("graded_invariants_of_tensor: modulus not prime");
    if (r < 1) throw std::invalid_argument("graded_invariants_of_tensor: r < 1");
    if (d < 0) throw std::invalid_argument("graded_invariants_of_tensor: negative degree");
    long long pr = 1;
    for (int s = 0; s < r; ++s) pr *= p;
    long long needed = 1;
    for (int s = 0; s + 1 < r; ++s) needed *= p;
    if (mod.max_order() < needed)
        throw std::invalid_argument("graded_invariants_of_tensor: module lacks operators up to p^(r-1)");

    std::vector<std::vector<int>> deltas;
    {
        std::vector<int> cur;
        enumerate_compositions(n, d, cur, [&](const std::vector<int>& c) { deltas.push_back(c); });
    }
    int maxw = d;
    for (int w : mod.weights) maxw = std::max(maxw, d + std::abs(w));
    std::vector<int> wlist;
    for (long long w = -((maxw / pr) * pr); w <= maxw; w += pr) wlist.push_back(static_cast<int>(w));

    std::vector<WeightCharacter> partial(deltas.size());
    parallel_for(static_cast<int>(deltas.size()), [&](int di) {
        const std::vector<int>& delta = deltas[di];
        std::map<int, TensorBlock> block_cache;
        auto get_block = [&](int w) -> const TensorBlock& {
            auto it = block_cache.find(w);
            if (it == block_cache.end()) it = block_cache.emplace(w, build_block(mod, delta, w)).first;
            return it->second;
        };
        for (int w : wlist) {
            const TensorBlock& src = get_block(w);
            if (src.basis.empty()) continue;
            int cols = static_cast<int>(src.basis.size());
            // stack the 2r operators and compute the joint nullity densely
            std::vector<DenseFp> ops;
            int total_rows = 0;
            long long q = 1;
            for (int s = 0; s < r; ++s) {
                const TensorBlock& up = get_block(w + 2 * static_cast<int>(q));
                const TensorBlock& dn = get_block(w - 2 * static_cast<int>(q));
                ops.push_back(block_operator(mod, delta, 'e', static_cast<int>(q), src, up, p));
                ops.push_back(block_operator(mod, delta, 'f', static_cast<int>(q), src, dn, p));
                total_rows += ops[ops.size() - 2].rows + ops.back().rows;
                q *= p;
            }
            DenseFp stacked(total_rows, cols, p);
            int off = 0;
            for (const auto& op : ops) {
                for (int rr = 0; rr < op.rows; ++rr)
                    for (int cc = 0; cc < cols; ++cc) stacked.at(off + rr, cc) = op.at(rr, cc);
                off += op.rows;
            }
            int nullity = cols - rank(stacked);
            if (nullity) partial[di].add(static_cast<int>(w / pr), nullity);
        }
    }, threads);

    WeightCharacter out;
    for (const auto& part : partial)
        for (const auto& [w, c] : part.mult) out.add(w, c);
    return out;
}

WeightCharacter gr_invariants_S(int n, fp_t p, int r, int d, int threads) {
    if (n < 1) throw std::invalid_argument("gr_invariants_S: n < 1");
    long long needed = 1;
    for (int s = 0; s + 1 < r; ++s) needed *= p;
    ExplicitModule triv = trivial_module(p, static_cast<int>(needed));
    return graded_invariants_of_tensor(triv, n, p, r, d, threads);
}

}  // namespace ffrt
