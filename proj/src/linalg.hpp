#pragma once

// Exact dense linear algebra over Rat for the formula path. The oracle module
// keeps its own elimination routine and does not include this header.

#include "rootcontract/error.hpp"
#include "rootcontract/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace rootcontract::detail {

using RatMatrix = std::vector<std::vector<Rat>>;

// Gauss-Jordan inverse of a square non-singular matrix.
inline RatMatrix inverse(RatMatrix a) {
    const std::size_t n = a.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].sign() == 0) ++pivot;
        if (pivot == n) throw InvariantViolation("singular matrix in inverse()");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);

        const Rat p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].sign() == 0) continue;
            const Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    RatMatrix out(n, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].sign() == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace rootcontract::detail
