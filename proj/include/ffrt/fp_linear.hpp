#ifndef FFRT_FP_LINEAR_HPP
#define FFRT_FP_LINEAR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ffrt {

using fp_t = std::int64_t;
using FpVector = std::vector<fp_t>;

bool is_prime(fp_t p);

// Residue arithmetic. p is assumed prime and < 2^31 so products fit in int64.
inline fp_t fp_reduce(fp_t v, fp_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}
fp_t fp_inverse(fp_t a, fp_t p);

// Sparse exact matrix over F_p between fixed ordered bases.
// Stored residues are nonzero and lie in [1, p).
struct FpMatrix {
    fp_t p = 0;
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, fp_t> entries;

    FpMatrix() = default;
    FpMatrix(int rows_, int cols_, fp_t p_);

    static FpMatrix identity(int n, fp_t p);

    void set(int r, int c, fp_t v);
    void add(int r, int c, fp_t v);
    fp_t get(int r, int c) const;
};

// Columns spanning ker(m), in deterministic order (one column per free
// coordinate, ascending). Sparse row-echelon elimination, pivots chosen by
// column order, lowest row index first.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

int rank(const FpMatrix& m);

// Dense elimination over the same data; cross-check path for the sparse one.
int rank_dense(const FpMatrix& m);
std::vector<FpVector> kernel_basis_dense(const FpMatrix& m);

// Basis of the simultaneous kernel of all operators. All matrices must share
// p and column count; the empty family yields the full space.
std::vector<FpVector> joint_kernel(std::span<const FpMatrix> ops, int cols, fp_t p);

// Row-major dense matrix mod p; workhorse for small blocks.
struct DenseFp {
    int rows = 0;
    int cols = 0;
    fp_t p = 0;
    std::vector<fp_t> a;

    DenseFp() = default;
    DenseFp(int rows_, int cols_, fp_t p_) : rows(rows_), cols(cols_), p(p_), a(static_cast<size_t>(rows_) * cols_, 0) {}

    fp_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    fp_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool is_zero() const;
};

DenseFp mul(const DenseFp& x, const DenseFp& y);
DenseFp add(const DenseFp& x, const DenseFp& y);
DenseFp scale(const DenseFp& x, fp_t c);
int rank(const DenseFp& m);
std::vector<FpVector> kernel_basis(const DenseFp& m);
// Solve a * x = b for each column of b; requires a solution to exist.
DenseFp solve_exact(const DenseFp& a, const DenseFp& b);

}  // namespace ffrt

#endif
