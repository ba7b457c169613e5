#ifndef EXTVAN_CHAIN_OP_HPP
#define EXTVAN_CHAIN_OP_HPP

#include <optional>

#include "extvan/resolution.hpp"

namespace extvan {

/* A cocycle P_m -> T where T is the resolved module (this covers both
 * Ext^m(M, M) classes and Ext^m(k, k) classes, where M = k), stored as
 * the expanded matrix of the module map. */
template <class F>
struct Cocycle {
    std::size_t degree = 1;
    Matrix<F> expanded;  // dim T  x  dim P_degree
};

/* A chain self-map of degree m: maps[n - first_n] : P_{n+m} -> P_n with
 * d_n maps_n = maps_{n-1} d_{n+m} holding exactly on the stored range. */
template <class F>
struct ChainOperator {
    std::size_t degree = 1;
    std::size_t first_n = 0;
    std::vector<Matrix<F>> maps;

    std::size_t last_n() const { return first_n + maps.size() - 1; }
    const Matrix<F>& map_at(std::size_t n) const { return maps[n - first_n]; }
    bool defined_at(std::size_t n) const { return n >= first_n && n <= last_n(); }
};

namespace detail {

// basis of e*P_n as columns, for constrained lifting
template <class F>
Matrix<F> idempotent_image_basis(const MinimalResolution<F>& res, std::size_t n,
                                 const std::vector<typename F::Elem>& idem) {
    const BlockSpace& sp = res.spaces[n];
    Echelon<F> ech(res.algebra->field, sp.total_dim);
    for (std::size_t c = 0; c < sp.total_dim; ++c) {
        std::vector<typename F::Elem> unit(sp.total_dim, res.algebra->field.zero());
        unit[c] = res.algebra->field.one();
        ech.add(block_act(res.proj, sp, *res.algebra, idem, unit));
    }
    return ech.basis_cols();
}

}  // namespace detail

/* Lifts a cocycle to a chain operator, degree by degree, solving one
 * constrained linear system per generator. The lift always exists over
 * projective terms; an unsolvable system signals a bug, not bad input. */
template <class F>
ChainOperator<F> lift_chain_map(const MinimalResolution<F>& res, const Cocycle<F>& cocycle) {
    using Vec = std::vector<typename F::Elem>;
    const F& K = res.algebra->field;
    const std::size_t m = cocycle.degree;
    if (m < 1) raise(ErrorCode::ConfigError, "chain operators have positive degree");
    if (m >= res.length() + 1)
        raise(ErrorCode::RangeExceedsResolution, "cocycle degree exceeds the resolution length");
    if (cocycle.expanded.rows() != res.module.dim ||
        cocycle.expanded.cols() != res.spaces[m].total_dim)
        raise(ErrorCode::ConfigError, "cocycle shape does not match the resolution");
    if (m < res.length() && !(cocycle.expanded * res.diff(m + 1)).is_zero())
        raise(ErrorCode::NotACocycle, "map does not vanish on the image of the next differential");

    ChainOperator<F> op;
    op.degree = m;
    op.first_n = 0;

    std::vector<Matrix<F>> e_bases;  // per class: basis of e * P_target for current target
    auto rebuild_bases = [&](std::size_t target) {
        e_bases.clear();
        for (const auto& cls : res.proj.classes)
            e_bases.push_back(detail::idempotent_image_basis(res, target, cls.idempotent));
    };

    Matrix<F> prev;  // expanded map of the previous degree
    for (std::size_t n = 0; n + m <= res.length(); ++n) {
        const BlockSpace& src = res.spaces[n + m];
        const BlockSpace& dst = res.spaces[n];
        const Matrix<F>& bound = n == 0 ? res.augmentation : res.diff(n);
        rebuild_bases(n);

        std::vector<std::unique_ptr<LinearSolver<F>>> solvers(res.proj.classes.size());
        std::vector<Vec> images;
        for (std::size_t t = 0; t < src.columns(); ++t) {
            const std::size_t cls_idx = src.col_class[t];
            if (!solvers[cls_idx])
                solvers[cls_idx] = std::make_unique<LinearSolver<F>>(bound * e_bases[cls_idx]);
            // generator of column t as a field vector of P_{n+m}
            Vec genvec(src.total_dim, K.zero());
            const auto& cls = res.proj.classes[cls_idx];
            for (std::size_t s = 0; s < cls.dim(); ++s)
                genvec[src.offset[t] + s] = cls.generator_coords[s];
            Vec rhs;
            if (n == 0) {
                rhs = cocycle.expanded.apply(genvec);
            } else {
                rhs = prev.apply(res.diff(n + m).apply(genvec));
            }
            auto lambda = solvers[cls_idx]->solve(rhs);
            if (!lambda) raise_internal("chain-map lift system unsolvable");
            images.push_back(e_bases[cls_idx].apply(*lambda));
        }
        auto dst_act = [&](const Vec& a, const Vec& v) {
            return block_act(res.proj, dst, *res.algebra, a, v);
        };
        Matrix<F> phin = expand_generator_map(*res.algebra, res.proj, src, dst.total_dim, images, dst_act);
        // exact chain-map identity on the stored range
        if (n >= 1 && !(bound * phin - prev * res.diff(n + m)).is_zero())
            raise_internal("chain-map identity violated after lift");
        prev = phin;
        op.maps.push_back(std::move(phin));
    }
    if (op.maps.empty()) raise(ErrorCode::RangeExceedsResolution, "resolution too short to lift");
    return op;
}

/* Detects an eventually 2-periodic resolution: the largest tail on which
 * d_{n+2} equals d_n exactly. Returns the degree-2 comparison operator
 * (identity maps on the tail), or nullopt. */
template <class F>
std::optional<ChainOperator<F>> detect_periodicity(const MinimalResolution<F>& res) {
    if (res.length() < 4)
        raise(ErrorCode::InsufficientData, "periodicity detection needs resolution length >= 4");
    const std::size_t L = res.length();
    std::size_t s = 0;  // least s with d_{n+2} == d_n for every n in [s, L-2]
    for (std::size_t n = L - 2; n >= 1; --n) {
        if (!(res.spaces[n].col_class == res.spaces[n + 2].col_class &&
              res.diff(n) == res.diff(n + 2)))
            break;
        s = n;
        if (n == 1) break;
    }
    if (s == 0 || s + 3 > L) return std::nullopt;  // want at least two verified matches

    std::size_t first_n = s;
    if (res.spaces[s - 1].col_class == res.spaces[s + 1].col_class) first_n = s - 1;
    ChainOperator<F> op;
    op.degree = 2;
    op.first_n = first_n;
    for (std::size_t n = first_n; n + 2 <= L; ++n)
        op.maps.push_back(Matrix<F>::identity(res.algebra->field, res.spaces[n].total_dim));
    return op;
}

}  // namespace extvan

#endif
