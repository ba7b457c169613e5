#ifndef EXTVAN_TEST_UTIL_HPP
#define EXTVAN_TEST_UTIL_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "extvan/ext.hpp"
#include "extvan/radical.hpp"

namespace extvan_test {

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::vector<std::size_t>> klein_table() {
    // Z/2 x Z/2 with elements indexed by bit pairs
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

inline std::vector<std::vector<std::size_t>> direct_product_table(
    const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b) {
    std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
    for (std::size_t i = 0; i < n * m; ++i)
        for (std::size_t j = 0; j < n * m; ++j)
            t[i][j] = a[i / m][j / m] * m + b[i % m][j % m];
    return t;
}

// multiplication table of the symmetric group S_n (order: lexicographic permutations)
inline std::vector<std::vector<std::size_t>> symmetric_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) {
            std::vector<std::size_t> comp(n);
            for (std::size_t k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            t[i][j] = index[comp];
        }
    return t;
}

// dim Hom_A(M, N) by solving the intertwiner equations directly
template <class F>
std::size_t hom_dim_oracle(const extvan::FDModule<F>& m, const extvan::FDModule<F>& n) {
    using namespace extvan;
    const F& K = m.algebra->field;
    const std::size_t rows = n.dim, cols = m.dim;
    const std::size_t unknowns = rows * cols;
    Matrix<F> sys(K, m.algebra->dim * unknowns, unknowns);
    for (std::size_t l = 0; l < m.algebra->dim; ++l) {
        // condition: action_N[l] * T - T * action_M[l] = 0
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                std::size_t row = l * unknowns + r * cols + c;
                for (std::size_t k = 0; k < rows; ++k)
                    sys.at(row, k * cols + c) =
                        K.add(sys.at(row, k * cols + c), n.action[l].at(r, k));
                for (std::size_t k = 0; k < cols; ++k)
                    sys.at(row, r * cols + k) =
                        K.sub(sys.at(row, r * cols + k), m.action[l].at(k, c));
            }
    }
    return unknowns - rank_of(sys);
}

template <class F>
extvan::Matrix<F> random_invertible(const F& field, std::size_t n, std::mt19937_64& rng,
                                    std::int64_t coeff_range = 5) {
    using namespace extvan;
    for (int tries = 0; tries < 200; ++tries) {
        Matrix<F> m(field, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = field.from_int(static_cast<std::int64_t>(rng() % (2 * coeff_range + 1)) -
                                            coeff_range);
        if (rank_of(m) == n) return m;
    }
    extvan::raise_internal("no invertible matrix found");
}

}  // namespace extvan_test

#endif
