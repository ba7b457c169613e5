#ifndef EXTVAN_CHARPOLY_HPP
#define EXTVAN_CHARPOLY_HPP

#include <vector>

#include "extvan/matrix.hpp"

namespace extvan {

/* Characteristic polynomial det(xI - M) via Hessenberg reduction, exact
 * over any field. Returns coefficients lowest degree first, length n+1,
 * leading coefficient 1. */
template <class F>
std::vector<typename F::Elem> char_poly(const Matrix<F>& m) {
    using Elem = typename F::Elem;
    const F& K = m.field();
    const std::size_t n = m.rows();
    if (m.cols() != n) raise_internal("char_poly of a non-square matrix");

    Matrix<F> h = m;
    // similarity reduction to upper Hessenberg form
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && K.is_zero(h.at(piv, c))) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
        }
        Elem inv = K.inv(h.at(c + 1, c));
        for (std::size_t r = c + 2; r < n; ++r) {
            if (K.is_zero(h.at(r, c))) continue;
            Elem f = K.mul(h.at(r, c), inv);
            for (std::size_t j = 0; j < n; ++j) h.at(r, j) = K.sub(h.at(r, j), K.mul(f, h.at(c + 1, j)));
            for (std::size_t i = 0; i < n; ++i) h.at(i, c + 1) = K.add(h.at(i, c + 1), K.mul(f, h.at(i, r)));
        }
    }

    // p_k = char poly of leading k x k block, built by the Hessenberg recurrence
    std::vector<std::vector<Elem>> p(n + 1);
    p[0] = {K.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x) - sum_{i=1..k-1} h[k-1-i][k-1] * (prod of subdiag) p_{k-1-i}(x)
        std::vector<Elem> cur(k + 1, K.zero());
        for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
            cur[t + 1] = K.add(cur[t + 1], p[k - 1][t]);
            cur[t] = K.sub(cur[t], K.mul(h.at(k - 1, k - 1), p[k - 1][t]));
        }
        Elem beta = K.one();
        for (std::size_t i = 1; i < k; ++i) {
            beta = K.mul(beta, h.at(k - i, k - i - 1));
            if (K.is_zero(beta)) break;
            Elem coef = K.mul(beta, h.at(k - 1 - i, k - 1));
            if (K.is_zero(coef)) continue;
            for (std::size_t t = 0; t < p[k - 1 - i].size(); ++t)
                cur[t] = K.sub(cur[t], K.mul(coef, p[k - 1 - i][t]));
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

/* c_m = trace of the m-th exterior power = up-to-sign coefficient of the
 * characteristic polynomial. Only vanishing matters to callers. */
template <class F>
typename F::Elem char_coeff(const std::vector<typename F::Elem>& cp, std::size_t m) {
    const std::size_t n = cp.size() - 1;
    if (m > n) raise_internal("char_coeff index out of range");
    return cp[n - m];
}

}  // namespace extvan

#endif
