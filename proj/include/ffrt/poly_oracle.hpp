#ifndef FFRT_POLY_ORACLE_HPP
#define FFRT_POLY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ffrt/fp_linear.hpp"
#include "ffrt/sl2_characters.hpp"

namespace ffrt {

// Monomials of S = k[x_1,y_1,...,x_n,y_n] in total degree d, as exponent
// tuples (a_1,b_1,...,a_n,b_n), ordered lexicographically. The weight of a
// monomial is sum(a_i - b_i).
struct MonomialBasis {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> monomials;
};

MonomialBasis monomial_basis(int n, int d);
int monomial_weight(const std::vector<int>& exps);

// Matrix of e^(order) or f^(order) on monomial_basis(n, d). e = sum x_i d/dy_i
// raises the weight by 2*order, f lowers it; entries are products of
// binomial coefficients mod p.
FpMatrix divided_power_matrix(char op, int order, int n, int d, fp_t p);

// Per-weight dimensions of (S^{G_r})_d, weights divided by p^r.
// Invariance: killed by e^(p^s), f^(p^s) for s < r, weight = 0 mod p^r.
WeightCharacter gr_invariants_S(int n, fp_t p, int r, int d, int threads = 0);

// Finite dimensional module with explicit divided-power operators.
// ops[i] is the action of e^((i+1)) resp. f^((i+1)); operators shift the
// weight by +-2(i+1).
struct ExplicitModule {
    fp_t p = 0;
    std::vector<int> weights;
    std::vector<DenseFp> e_ops;
    std::vector<DenseFp> f_ops;

    int dim() const { return static_cast<int>(weights.size()); }
    int max_order() const { return static_cast<int>(e_ops.size()); }
    WeightCharacter character() const;
    void validate() const;  // weight-shift invariants of all operators
};

ExplicitModule trivial_module(fp_t p, int max_order);
ExplicitModule symmetric_power_module(int m, fp_t p, int max_order);
ExplicitModule tensor(const ExplicitModule& a, const ExplicitModule& b);
ExplicitModule frobenius_twist(const ExplicitModule& m);

// Explicit realization of the tilting module T(j): symmetric powers in the
// restricted range, Pieri steps with idempotent splitting up to 2p-2, and
// the twisted tensor factorization beyond.
ExplicitModule realize_tilting(int j, fp_t p, int max_order);

// Per-weight dimensions of ((mod (x) S)^{G_r})_d, weights divided by p^r.
WeightCharacter graded_invariants_of_tensor(const ExplicitModule& mod, int n, fp_t p, int r,
                                            int d, int threads = 0);

}  // namespace ffrt

#endif
