#include "ffrt/fp_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffrt {

bool is_prime(fp_t p) {
    if (p < 2) return false;
    for (fp_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

fp_t fp_inverse(fp_t a, fp_t p) {
    // extended Euclid
    fp_t u = 1, v = 0, x = fp_reduce(a, p), y = p;
    if (x == 0) throw std::domain_error("fp_inverse: zero not invertible");
    while (y != 0) {
        fp_t q = x / y;
        fp_t r = x - q * y;
        fp_t t = u - q * v;
        x = y; y = r;
        u = v; v = t;
    }
    return fp_reduce(u, p);
}

FpMatrix::FpMatrix(int rows_, int cols_, fp_t p_) : p(p_), rows(rows_), cols(cols_) {
    if (!is_prime(p_)) throw std::invalid_argument("FpMatrix: modulus not prime");
    if (rows_ < 0 || cols_ < 0) throw std::invalid_argument("FpMatrix: negative dimension");
}

FpMatrix FpMatrix::identity(int n, fp_t p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(int r, int c, fp_t v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("FpMatrix::set: index");
    v = fp_reduce(v, p);
    if (v == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

void FpMatrix::add(int r, int c, fp_t v) { set(r, c, get(r, c) + fp_reduce(v, p)); }

fp_t FpMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? 0 : it->second;
}

namespace {

// Sparse row as sorted (col, val) pairs, val in [1, p).
using SparseRow = std::vector<std::pair<int, fp_t>>;

// dst -= coeff * src
SparseRow row_axpy(const SparseRow& dst, const SparseRow& src, fp_t coeff, fp_t p) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            fp_t v = fp_reduce(-coeff * src[j].second, p);
            if (v) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            fp_t v = fp_reduce(dst[i].second - coeff * src[j].second, p);
            if (v) out.emplace_back(dst[i].first, v);
            ++i; ++j;
        }
    }
    return out;
}

struct Echelon {
    std::map<int, SparseRow> pivot_rows;  // pivot col -> reduced row, leading coeff 1
    fp_t p = 0;
};

// Online reduced row echelon insertion. Rows are inserted in order, so a
// column's pivot always comes from the lowest row index that reaches it.
Echelon eliminate(const FpMatrix& m) {
    Echelon e;
    e.p = m.p;
    std::vector<SparseRow> rows(m.rows);
    for (const auto& [rc, v] : m.entries) rows[rc.first].emplace_back(rc.second, v);

    for (auto& row : rows) {
        SparseRow cur = std::move(row);
        // full reduction against the current pivot rows; pivot rows start at
        // their lead column, so a forward scan stays valid after each axpy
        size_t i = 0;
        while (i < cur.size()) {
            auto it = e.pivot_rows.find(cur[i].first);
            if (it == e.pivot_rows.end()) {
                ++i;
                continue;
            }
            cur = row_axpy(cur, it->second, cur[i].second, e.p);
        }
        if (cur.empty()) continue;
        fp_t inv = fp_inverse(cur.front().second, e.p);
        for (auto& [c, v] : cur) v = fp_reduce(v * inv, e.p);
        int lead = cur.front().first;
        // back-substitute into existing pivot rows to keep the form reduced
        for (auto& [pc, prow] : e.pivot_rows) {
            auto hit = std::lower_bound(prow.begin(), prow.end(), std::make_pair(lead, fp_t{0}),
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
            if (hit != prow.end() && hit->first == lead) prow = row_axpy(prow, cur, hit->second, e.p);
        }
        e.pivot_rows.emplace(lead, std::move(cur));
    }
    return e;
}

}  // namespace

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
    Echelon e = eliminate(m);
    std::vector<FpVector> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (e.pivot_rows.count(c)) continue;
        FpVector v(m.cols, 0);
        v[c] = 1;
        for (const auto& [pc, prow] : e.pivot_rows) {
            for (const auto& [col, val] : prow)
                if (col == c) v[pc] = fp_reduce(-val, m.p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const FpMatrix& m) { return static_cast<int>(eliminate(m).pivot_rows.size()); }

std::vector<FpVector> joint_kernel(std::span<const FpMatrix> ops, int cols, fp_t p) {
    if (!is_prime(p)) throw std::invalid_argument("joint_kernel: modulus not prime");
    int total_rows = 0;
    for (const auto& op : ops) {
        if (op.cols != cols) throw std::invalid_argument("joint_kernel: mismatched column count");
        if (op.p != p) throw std::invalid_argument("joint_kernel: mismatched modulus");
        total_rows += op.rows;
    }
    FpMatrix stacked(total_rows, cols, p);
    int off = 0;
    for (const auto& op : ops) {
        for (const auto& [rc, v] : op.entries) stacked.set(off + rc.first, rc.second, v);
        off += op.rows;
    }
    return kernel_basis(stacked);
}

namespace {

// Dense row echelon, returns pivot cols and the reduced rows.
std::pair<std::vector<int>, std::vector<FpVector>> dense_echelon(std::vector<FpVector> rows, int cols, fp_t p) {
    std::vector<int> pivots;
    std::vector<FpVector> reduced;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        fp_t inv = fp_inverse(rows[r][c], p);
        for (int k = c; k < cols; ++k) rows[r][k] = fp_reduce(rows[r][k] * inv, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            fp_t f = rows[i][c];
            for (int k = c; k < cols; ++k) rows[i][k] = fp_reduce(rows[i][k] - f * rows[r][k], p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return {pivots, rows};
}

}  // namespace

int rank_dense(const FpMatrix& m) {
    std::vector<FpVector> rows(m.rows, FpVector(m.cols, 0));
    for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;
    return static_cast<int>(dense_echelon(std::move(rows), m.cols, m.p).first.size());
}

std::vector<FpVector> kernel_basis_dense(const FpMatrix& m) {
    std::vector<FpVector> rows(m.rows, FpVector(m.cols, 0));
    for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;
    auto [pivots, red] = dense_echelon(std::move(rows), m.cols, m.p);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        FpVector v(m.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fp_reduce(-red[i][c], m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool DenseFp::is_zero() const {
    for (fp_t v : a)
        if (v) return false;
    return true;
}

DenseFp mul(const DenseFp& x, const DenseFp& y) {
    if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("DenseFp mul: shape/modulus mismatch");
    DenseFp out(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            fp_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = fp_reduce(out.at(i, j) + v * y.at(k, j), x.p);
        }
    return out;
}

DenseFp add(const DenseFp& x, const DenseFp& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw std::invalid_argument("DenseFp add: shape mismatch");
    DenseFp out(x.rows, x.cols, x.p);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = fp_reduce(x.a[i] + y.a[i], x.p);
    return out;
}

DenseFp scale(const DenseFp& x, fp_t c) {
    DenseFp out(x.rows, x.cols, x.p);
    c = fp_reduce(c, x.p);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = fp_reduce(x.a[i] * c, x.p);
    return out;
}

int rank(const DenseFp& m) {
    std::vector<FpVector> rows(m.rows, FpVector(m.cols, 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
    return static_cast<int>(dense_echelon(std::move(rows), m.cols, m.p).first.size());
}

std::vector<FpVector> kernel_basis(const DenseFp& m) {
    std::vector<FpVector> rows(m.rows, FpVector(m.cols, 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
    auto [pivots, red] = dense_echelon(std::move(rows), m.cols, m.p);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        FpVector v(m.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fp_reduce(-red[i][c], m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

DenseFp solve_exact(const DenseFp& a, const DenseFp& b) {
    if (a.rows != b.rows || a.p != b.p) throw std::invalid_argument("solve_exact: shape mismatch");
    // eliminate on [a | b]
    int cols = a.cols + b.cols;
    std::vector<FpVector> rows(a.rows, FpVector(cols, 0));
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) rows[r][c] = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) rows[r][a.cols + c] = b.at(r, c);
    }
    auto [pivots, red] = dense_echelon(std::move(rows), cols, a.p);
    DenseFp x(a.cols, b.cols, a.p);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols) throw std::domain_error("solve_exact: inconsistent system");
        for (int c = 0; c < b.cols; ++c) x.at(pivots[i], c) = red[i][a.cols + c];
    }
    return x;
}

}  // namespace ffrt
