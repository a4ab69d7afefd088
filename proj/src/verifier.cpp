#include "ffrt/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "ffrt/b1_cohomology.hpp"
#include "ffrt/equivariant_resolution.hpp"
#include "ffrt/koszul_catalog.hpp"
#include "ffrt/poly_oracle.hpp"
#include "ffrt/threads.hpp"

namespace ffrt {

void GradedCharacter::add(int d, const WeightCharacter& c) {
    if (c.empty()) return;
    WeightCharacter& slot = deg[d];
    for (const auto& [w, m] : c.mult) slot.add(w, m);
    if (slot.empty()) deg.erase(d);
}

bool GradedCharacter::empty() const {
    for (const auto& [d, c] : deg)
        if (!c.empty()) return false;
    return true;
}

namespace {

long long pow_ll(std::int64_t p, int r) {
    long long v = 1;
    for (int i = 0; i < r; ++i) v *= p;
    return v;
}

// Normalized layer sequence of a summand kind: layer i is the weight
// character at p^r * (bottom + i) in the natural grading; layer 0 nonzero.
struct LayerSeq {
    std::vector<WeightCharacter> layers;
    long long step = 1;          // p^r
    long long natural_bottom = 0;  // degree of layer 0 in the natural grading
};

LayerSeq layer_sequence(const SummandInstance& s, int n, std::int64_t p, int D) {
    LayerSeq seq;
    seq.step = pow_ll(p, s.frobenius_level);
    int max_layer = static_cast<int>(D / seq.step) + 1;
    switch (s.kind) {
        case SummandKind::TiltFree: {
            seq.natural_bottom = 0;
            WeightCharacter t = char_tilting(s.l, p);
            for (int m = 0; m <= max_layer; ++m) seq.layers.push_back(t * char_S(n, m));
            break;
        }
        case SummandKind::K: {
            int b = kjk_bottom_degree(s.j, s.k);
            seq.natural_bottom = seq.step * b;
            for (int m = 0; m <= max_layer; ++m) seq.layers.push_back(char_Kjk(n, s.j, s.k, b + m));
            break;
        }
        case SummandKind::Cov: {
            int m0 = -1;
            std::vector<WeightCharacter> raw;
            for (int m = 0; m <= max_layer + s.l; ++m) {
                long long v = invariant_multiplicity(char_weyl(s.l) * char_S(n, m));
                WeightCharacter c;
                if (v) c.add(0, v);
                if (m0 < 0 && v) m0 = m;
                raw.push_back(c);
            }
            if (m0 < 0) throw std::domain_error("summand_graded_character: Cov summand vanishes");
            seq.natural_bottom = seq.step * m0;
            for (int m = m0; m < static_cast<int>(raw.size()); ++m) seq.layers.push_back(raw[m]);
            break;
        }
        default:
            throw std::invalid_argument("summand_graded_character: unknown kind " + s.label());
    }
    return seq;
}

}  // namespace

GradedCharacter summand_graded_character(const SummandInstance& s, int n, std::int64_t p, int D) {
    LayerSeq seq = layer_sequence(s, n, p, D);
    GradedCharacter out;
    long long base = s.twist ? *s.twist : seq.natural_bottom;
    for (size_t i = 0; i < seq.layers.size(); ++i) {
        long long d = base + seq.step * static_cast<long long>(i);
        if (d > D) break;
        out.add(static_cast<int>(d), seq.layers[i]);
    }
    return out;
}

namespace {

// signed residual bookkeeping
struct Residual {
    std::map<int, std::map<int, long long>> v;  // degree -> weight -> count

    static Residual from(const GradedCharacter& g, int D) {
        Residual r;
        for (const auto& [d, c] : g.deg) {
            if (d > D) continue;
            for (const auto& [w, m] : c.mult) r.v[d][w] = m;
        }
        return r;
    }
    long long at(int d, int w) const {
        auto it = v.find(d);
        if (it == v.end()) return 0;
        auto jt = it->second.find(w);
        return jt == it->second.end() ? 0 : jt->second;
    }
    void add(int d, int w, long long c) {
        if (!c) return;
        long long& slot = v[d][w];
        slot += c;
        if (!slot) {
            v[d].erase(w);
            if (v[d].empty()) v.erase(d);
        }
    }
};

struct Candidate {
    SummandInstance inst;
    LayerSeq seq;
    bool tiltfree = false;
};

// All exact nonnegative fits of `rem` by the bottoms of candidates attachable
// at the current degree. Non-tilt-free counts are enumerated; tilt-free
// counts are then forced by peeling maximal weights (their bottoms are Weyl
// characters with distinct tops). Fits arrive in decreasing non-tilt usage.
void enumerate_fits(const std::map<int, long long>& rem, const std::vector<const Candidate*>& cands,
                    std::vector<std::vector<long long>>& fits) {
    std::vector<const Candidate*> special, tilts;
    for (const Candidate* c : cands) (c->tiltfree ? tilts : special).push_back(c);
    // sort tilt bottoms by descending highest weight for triangular peeling
    std::sort(tilts.begin(), tilts.end(), [](const Candidate* a, const Candidate* b) {
        return a->inst.l > b->inst.l;
    });

    std::vector<long long> counts(cands.size(), 0);
    auto index_of = [&](const Candidate* c) {
        for (size_t i = 0; i < cands.size(); ++i)
            if (cands[i] == c) return i;
        return cands.size();
    };

    std::function<void(size_t, std::map<int, long long>&)> rec = [&](size_t si,
                                                                     std::map<int, long long>& cur) {
        if (si == special.size()) {
            // peel tilt-free bottoms, maximal weight first
            std::map<int, long long> work = cur;
            std::vector<std::pair<size_t, long long>> tilt_counts;
            for (const Candidate* t : tilts) {
                const WeightCharacter& bottom = t->seq.layers[0];
                int top = bottom.mult.rbegin()->first;
                long long avail = 0;
                auto it = work.find(top);
                if (it != work.end()) avail = it->second;
                if (avail < 0) return;
                if (avail > 0) {
                    for (const auto& [w, m] : bottom.mult) {
                        auto [jt, ins] = work.try_emplace(w, 0);
                        jt->second -= avail * m;
                        if (!jt->second) work.erase(jt);
                    }
                }
                tilt_counts.emplace_back(index_of(t), avail);
            }
            for (const auto& [w, m] : work)
                if (m != 0) return;
            std::vector<long long> fit = counts;
            for (const auto& [i, c] : tilt_counts) fit[i] = c;
            fits.push_back(std::move(fit));
            return;
        }
        const Candidate* sc = special[si];
        const WeightCharacter& bottom = sc->seq.layers[0];
        long long maxc = -1;
        for (const auto& [w, m] : bottom.mult) {
            long long have = 0;
            auto it = cur.find(w);
            if (it != cur.end()) have = it->second;
            long long cap = have / m;
            if (cap < 0) cap = 0;
            maxc = maxc < 0 ? cap : std::min(maxc, cap);
        }
        for (long long c = std::max<long long>(maxc, 0); c >= 0; --c) {
            if (c) {
                for (const auto& [w, m] : bottom.mult) cur[w] -= c * m;
            }
            counts[index_of(sc)] = c;
            rec(si + 1, cur);
            counts[index_of(sc)] = 0;
            if (c) {
                for (const auto& [w, m] : bottom.mult) {
                    cur[w] += c * m;
                    if (!cur[w]) cur.erase(w);
                }
            }
        }
    };
    std::map<int, long long> cur = rem;
    rec(0, cur);
}

struct SolverState {
    std::vector<Candidate> cands;
    Residual res;
    int D = 0;
    long long nodes = 0;
    long long node_budget = 500000;
    std::map<std::pair<int, int>, long long> committed;  // (candidate idx, degree) -> count
    std::optional<std::pair<int, int>> failure;
};

bool solve_rec(SolverState& st, int d) {
    if (d > st.D) return true;
    if (++st.nodes > st.node_budget) throw std::length_error("solve_multiplicities: search budget exceeded");
    std::map<int, long long> rem;
    {
        auto it = st.res.v.find(d);
        if (it != st.res.v.end()) rem = it->second;
    }
    for (const auto& [w, c] : rem)
        if (c < 0) {
            if (!st.failure) st.failure = {d, w};
            return false;
        }
    std::vector<const Candidate*> attachable;
    std::vector<size_t> attachable_idx;
    for (size_t i = 0; i < st.cands.size(); ++i) {
        if (st.cands[i].seq.natural_bottom <= d) {
            attachable.push_back(&st.cands[i]);
            attachable_idx.push_back(i);
        }
    }
    if (rem.empty()) {
        if (solve_rec(st, d + 1)) return true;
        return false;
    }
    if (attachable.empty()) {
        if (!st.failure) st.failure = {d, rem.begin()->first};
        return false;
    }
    std::vector<std::vector<long long>> fits;
    enumerate_fits(rem, attachable, fits);
    if (fits.empty()) {
        if (!st.failure) st.failure = {d, rem.begin()->first};
        return false;
    }
    for (const auto& fit : fits) {
        // commit: subtract the full truncated contribution of the new pieces
        for (size_t a = 0; a < fit.size(); ++a) {
            if (!fit[a]) continue;
            const Candidate& c = *attachable[a];
            for (size_t layer = 0; layer < c.seq.layers.size(); ++layer) {
                long long dd = d + c.seq.step * static_cast<long long>(layer);
                if (dd > st.D) break;
                for (const auto& [w, m] : c.seq.layers[layer].mult)
                    st.res.add(static_cast<int>(dd), w, -fit[a] * m);
            }
            st.committed[{static_cast<int>(attachable_idx[a]), d}] += fit[a];
        }
        if (solve_rec(st, d + 1)) return true;
        for (size_t a = 0; a < fit.size(); ++a) {
            if (!fit[a]) continue;
            const Candidate& c = *attachable[a];
            for (size_t layer = 0; layer < c.seq.layers.size(); ++layer) {
                long long dd = d + c.seq.step * static_cast<long long>(layer);
                if (dd > st.D) break;
                for (const auto& [w, m] : c.seq.layers[layer].mult)
                    st.res.add(static_cast<int>(dd), w, fit[a] * m);
            }
            auto key = std::make_pair(static_cast<int>(attachable_idx[a]), d);
            st.committed[key] -= fit[a];
            if (!st.committed[key]) st.committed.erase(key);
        }
    }
    return false;
}

}  // namespace

MultiplicityAssignment solve_multiplicities(const GradedCharacter& target,
                                            const std::vector<SummandInstance>& candidates, int n,
                                            std::int64_t p, int D) {
    MultiplicityAssignment out;
    SolverState st;
    st.D = D;
    st.res = Residual::from(target, D);
    for (const auto& s : candidates) {
        if (s.kind == SummandKind::SheafK || s.kind == SummandKind::SheafSymQ)
            throw std::invalid_argument("solve_multiplicities: sheaf labels carry no character");
        bool dup = false;
        for (const auto& c : st.cands)
            if (c.inst.same_kind(s)) dup = true;
        if (dup) continue;
        Candidate c;
        c.inst = s;
        c.seq = layer_sequence(s, n, p, D);
        c.tiltfree = s.kind == SummandKind::TiltFree;
        st.cands.push_back(std::move(c));
    }
    // indistinguishable candidates (identical truncated characters) cannot be
    // told apart by any solve; flag a run that uses one of them
    std::map<size_t, std::string> ambiguous;
    for (size_t i = 0; i < st.cands.size(); ++i)
        for (size_t k = i + 1; k < st.cands.size(); ++k) {
            const auto& a = st.cands[i];
            const auto& b = st.cands[k];
            if (a.seq.natural_bottom != b.seq.natural_bottom || a.seq.step != b.seq.step) continue;
            size_t layers = std::min(a.seq.layers.size(), b.seq.layers.size());
            bool same = true;
            for (size_t m = 0; m < layers && same; ++m)
                if (!(a.seq.layers[m] == b.seq.layers[m])) same = false;
            if (same) {
                std::string txt = a.inst.label() + " vs " + b.inst.label();
                ambiguous[i] = txt;
                ambiguous[k] = txt;
            }
        }

    bool solved = false;
    try {
        solved = solve_rec(st, 0);
    } catch (const std::length_error& e) {
        out.status = MultiplicityAssignment::Status::Inconclusive;
        out.detail = e.what();
        return out;
    }
    if (!solved) {
        out.status = MultiplicityAssignment::Status::Inconsistent;
        out.first_failure = st.failure;
        if (st.failure) {
            WeightCharacter c;
            c.add(st.failure->second, 1);
            out.residual.add(st.failure->first, c);
        }
        out.detail = "no assignment explains the target";
        return out;
    }
    for (const auto& [key, count] : st.committed) {
        if (!count) continue;
        auto [ci, d] = key;
        if (ambiguous.count(ci)) {
            out.status = MultiplicityAssignment::Status::Inconclusive;
            out.detail = "ambiguous: " + ambiguous[ci];
            out.entries.clear();
            return out;
        }
        SolveEntry e;
        e.inst = st.cands[ci].inst;
        e.inst.twist = d;
        e.multiplicity = count;
        out.entries.push_back(e);
    }
    out.status = MultiplicityAssignment::Status::Solved;
    return out;
}

namespace {

GradedCharacter oracle_target(Scenario sc, const VerifyParams& q) {
    GradedCharacter target;
    if (sc == Scenario::S_Gr) {
        for (int d = 0; d <= q.D; ++d)
            target.add(d, gr_invariants_S(q.n, q.p, q.r, d, q.threads));
    } else if (sc == Scenario::TjS_G1) {
        long long needed = 1;  // r = 1: order-1 operators suffice
        ExplicitModule mod = realize_tilting(q.j, q.p, static_cast<int>(needed));
        for (int d = 0; d <= q.D; ++d)
            target.add(d, graded_invariants_of_tensor(mod, q.n, q.p, 1, d, q.threads));
    } else if (sc == Scenario::Kjk_G1) {
        EquivariantResolution res(q.n, q.j, q.D, q.p, q.threads);
        for (int d = 0; d <= q.D; ++d) target.add(d, res.kjk_gr_invariants(q.k, 1, d));
    }
    return target;
}

VerifyReport verify_b1_predictor(const VerifyParams& q) {
    VerifyReport rep;
    rep.scenario = Scenario::B1_predictor;
    rep.params = q;
    rep.consistent = true;
    int mismatches = 0, checked = 0;
    std::vector<int> t(q.n, 0);
    // per-l union over t of the oracle weights, for the interval comparison
    std::map<int, std::set<long long>> seen_weights;
    int eps = q.k > q.j ? 1 : 0;

    std::function<void(int)> sweep = [&](int pos) {
        if (!rep.consistent) return;
        if (pos == q.n) {
            for (int l = 1; l <= q.lmax; ++l) {
                BComplex cx = build_cjkt(q.n, q.p, q.j, q.k, t);
                WeightCharacter h = b1_cohomology_oracle(cx, l, q.p, B1Variant::Ordinary);
                CohomologyPrediction pred = predict_cohomology(q.n, q.p, q.j, q.k, t, l);
                ++checked;
                // beyond the R1 weight line the oracle must match R2 exactly
                for (const auto& [w, m] : h.mult) {
                    if (w == pred.r1_weight) continue;
                    if (!(pred.r2_weight && *pred.r2_weight == w && m == 1)) {
                        ++mismatches;
                        rep.consistent = false;
                    }
                }
                if (pred.r2_weight && *pred.r2_weight != pred.r1_weight &&
                    h.at(static_cast<int>(*pred.r2_weight)) != 1) {
                    ++mismatches;
                    rep.consistent = false;
                }
                if (l >= 1 + eps && l <= q.n - 3)
                    for (const auto& [w, m] : h.mult) seen_weights[l].insert(w);
            }
            return;
        }
        for (int v = 0; v < q.p; ++v) {
            t[pos] = v;
            sweep(pos + 1);
        }
    };
    sweep(0);

    if (rep.consistent) {
        for (int l = 1 + eps; l <= std::min(q.lmax, q.n - 3); ++l) {
            WeightInterval iv = weight_interval(q.n, q.p, q.j, q.k, l);
            std::set<long long> expected;
            for (long long r = iv.lo; r <= iv.hi; ++r) expected.insert(r);
            expected.insert(l - eps);  // the R1 line; nonzero for some t
            if (seen_weights[l] != expected) {
                rep.consistent = false;
                rep.detail = "interval formula mismatch at l=" + std::to_string(l);
                break;
            }
        }
    }
    rep.status = rep.consistent ? "consistent" : "inconsistent";
    if (rep.detail.empty())
        rep.detail = std::to_string(checked) + " (t,l) pairs checked, " +
                     std::to_string(mismatches) + " mismatches";
    return rep;
}

}  // namespace

std::string scenario_name(Scenario sc) {
    switch (sc) {
        case Scenario::S_Gr: return "s-invariants";
        case Scenario::TjS_G1: return "tjs";
        case Scenario::Kjk_G1: return "kjk";
        case Scenario::B1_predictor: return "b1-predictor";
    }
    return "?";
}

VerifyReport verify_decomposition(Scenario sc, const VerifyParams& q) {
    auto start = std::chrono::steady_clock::now();
    require_hypotheses(q.n, q.p);
    VerifyReport rep;
    if (sc == Scenario::B1_predictor) {
        rep = verify_b1_predictor(q);
    } else {
        rep.scenario = sc;
        rep.params = q;
        std::vector<SummandInstance> catalog;
        if (sc == Scenario::S_Gr) {
            catalog = catalog_S_Gr(q.n, q.p, q.r);
        } else if (sc == Scenario::TjS_G1) {
            catalog = decompose_TjS_G1(q.n, q.p, q.j).catalog;
        } else {
            catalog = decompose_Kjk_G1(q.n, q.p, q.j, q.k).catalog;
        }
        GradedCharacter target = oracle_target(sc, q);
        MultiplicityAssignment asg = solve_multiplicities(target, catalog, q.n, q.p, q.D);
        rep.consistent = asg.status == MultiplicityAssignment::Status::Solved;
        rep.status = asg.status == MultiplicityAssignment::Status::Solved ? "consistent"
                     : asg.status == MultiplicityAssignment::Status::Inconsistent ? "inconsistent"
                                                                                  : "inconclusive";
        rep.detail = asg.detail;
        rep.first_failure = asg.first_failure;
        for (const auto& [d, c] : asg.residual.deg)
            if (!c.empty()) rep.residual_degrees.push_back(d);
        for (const auto& cat : catalog) {
            VerifyEntry e;
            e.inst = cat;
            for (const auto& se : asg.entries)
                if (se.inst.same_kind(cat)) e.attachments.emplace_back(*se.inst.twist, se.multiplicity);
            std::sort(e.attachments.begin(), e.attachments.end());
            if (!e.attachments.empty())
                e.status = "confirmed";
            else if (rep.consistent)
                e.status = cat.flag == MultFlag::Nonzero ? "unreached" : "possible";
            else
                e.status = "unknown";
            rep.entries.push_back(std::move(e));
        }
    }
    auto stop = std::chrono::steady_clock::now();
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

}  // namespace ffrt
