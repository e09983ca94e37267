/*
   Copyright 2026 the supereig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEV_DETAIL_BERKOWITZ_HPP
#define SEV_DETAIL_BERKOWITZ_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sev::detail {

/// Samuelson-Berkowitz division-free characteristic polynomial over any
/// commutative ring. `a` holds the n*n entries row-major; `ops` supplies
/// zero(), one(), add(), mul(), neg(). Returns the n+1 coefficients of
/// det(T*I - A) in ascending degree order (monic by construction).
///
/// The coefficient vector is the product of the lower-triangular Toeplitz
/// matrices whose first columns are [1, -a_ii, -R_iC_i, -R_iB_iC_i, ...]
/// taken over the trailing principal submatrices.
template <class T, class Ops>
std::vector<T> berkowitz_charpoly(const std::vector<T>& a, size_t n, const Ops& ops) {
    if (a.size() != n * n) throw std::invalid_argument("berkowitz: bad entry count");
    auto at = [&](size_t i, size_t j) -> const T& { return a[i * n + j]; };

    std::vector<T> acc;  // descending coefficients, starts as [1]
    acc.push_back(ops.one());
    for (size_t step = n; step-- > 0;) {
        // Trailing submatrix starts at (step, step) and has size m = n - step.
        size_t m = n - step;
        std::vector<T> col;  // first column of the Toeplitz factor, length m+1
        col.reserve(m + 1);
        col.push_back(ops.one());
        col.push_back(ops.neg(at(step, step)));
        if (m >= 2) {
            // w runs through C, B*C, B^2*C, ...; emit -R*w each time.
            std::vector<T> w;
            w.reserve(m - 1);
            for (size_t i = step + 1; i < n; ++i) w.push_back(at(i, step));
            for (size_t k = 0; k + 2 <= m; ++k) {
                T dot = ops.zero();
                for (size_t j = 0; j < m - 1; ++j)
                    dot = ops.add(dot, ops.mul(at(step, step + 1 + j), w[j]));
                col.push_back(ops.neg(dot));
                if (k + 3 <= m) {
                    std::vector<T> next;
                    next.reserve(m - 1);
                    for (size_t i = 0; i < m - 1; ++i) {
                        T s = ops.zero();
                        for (size_t j = 0; j < m - 1; ++j)
                            s = ops.add(s, ops.mul(at(step + 1 + i, step + 1 + j), w[j]));
                        next.push_back(std::move(s));
                    }
                    w = std::move(next);
                }
            }
        }
        // acc <- Toeplitz(col) * acc  (column convolution).
        std::vector<T> out;
        out.reserve(acc.size() + 1);
        for (size_t i = 0; i < acc.size() + 1; ++i) {
            T s = ops.zero();
            for (size_t k = 0; k < acc.size(); ++k) {
                if (i < k || i - k >= col.size()) continue;
                s = ops.add(s, ops.mul(col[i - k], acc[k]));
            }
            out.push_back(std::move(s));
        }
        acc = std::move(out);
    }
    // acc is descending (leading first); flip to ascending.
    std::vector<T> result(acc.rbegin(), acc.rend());
    return result;
}

}  // namespace sev::detail

#endif
