#ifndef EXTVAN_GRADED_WINDOW_HPP
#define EXTVAN_GRADED_WINDOW_HPP

#include <cstdint>
#include <vector>

#include "extvan/matrix.hpp"

namespace extvan {

/* A finite window of graded pieces (Ext groups in chosen bases) together
 * with the matrices of graded operators acting on them. Operator i of
 * degree deg has one matrix per start degree n with n + deg <= n1, mapping
 * piece n to piece n + deg. */
template <class F>
struct WindowOperator {
    std::int64_t degree = 1;
    std::vector<Matrix<F>> mats;  // index 0 acts on degree n0
};

template <class F>
struct GradedWindow {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::vector<std::int64_t> piece_dims;      // n0..n1
    std::vector<WindowOperator<F>> operators;

    std::int64_t piece_dim(std::int64_t n) const {
        return piece_dims[static_cast<std::size_t>(n - n0)];
    }
    const Matrix<F>& op_matrix(std::size_t op, std::int64_t n) const {
        return operators[op].mats[static_cast<std::size_t>(n - n0)];
    }
    bool op_defined_at(std::size_t op, std::int64_t n) const {
        return n >= n0 && n + operators[op].degree <= n1;
    }

    void validate() const {
        if (n1 < n0 || piece_dims.size() != static_cast<std::size_t>(n1 - n0 + 1))
            raise_internal("graded window shape mismatch");
        for (const auto& op : operators) {
            for (std::int64_t n = n0; n + op.degree <= n1; ++n) {
                const Matrix<F>& m = op.mats[static_cast<std::size_t>(n - n0)];
                if (m.cols() != static_cast<std::size_t>(piece_dim(n)) ||
                    m.rows() != static_cast<std::size_t>(piece_dim(n + op.degree)))
                    raise_internal("operator matrix shape mismatch in graded window");
            }
        }
        // even-degree operators must commute strictly where both composites exist
        for (std::size_t i = 0; i < operators.size(); ++i) {
            if (operators[i].degree % 2) continue;
            for (std::size_t j = i + 1; j < operators.size(); ++j) {
                if (operators[j].degree % 2) continue;
                std::int64_t di = operators[i].degree, dj = operators[j].degree;
                for (std::int64_t n = n0; n + di + dj <= n1; ++n) {
                    Matrix<F> ab = op_matrix(i, n + dj) * op_matrix(j, n);
                    Matrix<F> ba = op_matrix(j, n + di) * op_matrix(i, n);
                    if (ab != ba) raise_internal("even-degree operators fail to commute on window");
                }
            }
        }
    }
};

}  // namespace extvan

#endif
