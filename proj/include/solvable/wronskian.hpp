#pragma once

#include "solvable/poly.hpp"
#include "solvable/prefactored.hpp"

#include <functional>
#include <vector>

namespace solvable {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Fraction-free (Bareiss) determinant over Q[v].
Poly poly_determinant(PolyMatrix m);

// det(d^{j} f_k / dv^{j}), j,k = 0..n-1.
Poly poly_wronskian(const std::vector<Poly>& fs);

// Wronskian with respect to eta. Column prefactors are stripped before the
// polynomial determinant is taken.
PrefactoredFunction prefactored_wronskian(const std::vector<PrefactoredFunction>& fs);

// Wronskian with respect to x for functions of eta(x), via the covariant form
// W_x = (eta')^{n(n-1)/2} W_eta.
PrefactoredFunction prefactored_wronskian_x(const std::vector<PrefactoredFunction>& fs,
                                            const PrefactoredFunction& eta_prime);

// Direct determinant of repeated applications of `deriv`. Each column's entries
// must differ from each other by integer factor powers.
PrefactoredFunction prefactored_wronskian_with(
    const std::vector<PrefactoredFunction>& fs,
    const std::function<PrefactoredFunction(const PrefactoredFunction&)>& deriv);

// Leibniz expansion, for commutative rings without exact division.
template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][c] * laplace_determinant(minor);
        if (c % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

}  // namespace solvable
