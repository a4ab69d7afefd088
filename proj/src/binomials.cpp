#include "ffrt/binomials.hpp"

#include <array>
#include <stdexcept>

namespace ffrt {

namespace {

constexpr int kMaxRow = 63;

// Pascal triangle up to row 63; every value fits in int64. Built once,
// thread-safe via static initialization.
struct PascalTable {
    std::array<std::array<long long, kMaxRow + 1>, kMaxRow + 1> c{};
    PascalTable() {
        for (int n = 0; n <= kMaxRow; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = (k == n) ? 1 : c[n - 1][k - 1] + c[n - 1][k];
        }
    }
};

const PascalTable& pascal() {
    static const PascalTable table;
    return table;
}

}  // namespace

long long binom_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > kMaxRow) throw std::out_of_range("binom_exact: row too large");
    return pascal().c[n][k];
}

fp_t binom_mod(int n, int k, fp_t p) {
    if (k < 0 || k > n) return 0;
    fp_t r = 1;
    while (n > 0 || k > 0) {
        int nd = static_cast<int>(n % p), kd = static_cast<int>(k % p);
        if (kd > nd) return 0;
        r = fp_reduce(r * fp_reduce(binom_exact(nd, kd), p), p);
        if (r == 0) return 0;
        n /= static_cast<int>(p);
        k /= static_cast<int>(p);
    }
    return r;
}

}  // namespace ffrt
