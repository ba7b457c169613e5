#ifndef EXTVAN_EXT_HPP
#define EXTVAN_EXT_HPP

#include "extvan/chain_op.hpp"
#include "extvan/graded_window.hpp"
#include "extvan/series.hpp"

namespace extvan {

/* The complex Hom_A(P_*, N) with its cohomology. Hom_A(A e, N) = e N, so
 * C^n is a direct sum of e N pieces, one per generator column of P_n.
 * Differentials are composition with the resolution differentials. */
template <class F>
class HomComplex {
   public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    HomComplex(const MinimalResolution<F>& res, const FDModule<F>& n_module)
        : res_(res), n_(n_module), field_(res.algebra->field) {
        if (n_.algebra.get() != res_.algebra.get())
            raise(ErrorCode::ConfigError, "Hom complex needs modules over the same algebra");
        for (const auto& cls : res_.proj.classes) {
            Matrix<F> en = n_.action_of(cls.idempotent);
            Echelon<F> ech(field_, n_.dim);
            for (std::size_t c = 0; c < n_.dim; ++c) ech.add(en.col(c));
            Matrix<F> basis = ech.basis_cols();
            class_value_dims_.push_back(basis.cols());
            value_solvers_.push_back(
                basis.cols() ? std::make_unique<LinearSolver<F>>(basis) : nullptr);
            value_bases_.push_back(std::move(basis));
        }
        hom_offsets_.resize(res_.spaces.size());
        hom_dims_.resize(res_.spaces.size(), 0);
        for (std::size_t deg = 0; deg < res_.spaces.size(); ++deg) {
            std::size_t off = 0;
            for (std::size_t t = 0; t < res_.spaces[deg].columns(); ++t) {
                hom_offsets_[deg].push_back(off);
                off += class_value_dims_[res_.spaces[deg].col_class[t]];
            }
            hom_dims_[deg] = off;
        }
        deltas_.reserve(res_.length());
        for (std::size_t deg = 0; deg + 1 < res_.spaces.size(); ++deg)
            deltas_.push_back(build_delta(deg));
    }

    std::size_t max_degree() const { return res_.spaces.size() - 1; }
    std::size_t hom_dim(std::size_t deg) const { return hom_dims_[deg]; }
    const Matrix<F>& delta(std::size_t deg) const { return deltas_[deg]; }
    const MinimalResolution<F>& resolution() const { return res_; }
    const FDModule<F>& target_module() const { return n_; }

    // dim Ext^deg, valid for deg <= max_degree() - 1
    std::size_t ext_dim(std::size_t deg) const {
        std::size_t dim = hom_dims_[deg];
        std::size_t r1 = rank_of(deltas_[deg]);
        std::size_t r0 = deg == 0 ? 0 : rank_of(deltas_[deg - 1]);
        return dim - r1 - r0;
    }

    /* Expanded matrix (dim N x dim P_deg) of the module map a hom-complex
     * coordinate vector represents. */
    Matrix<F> expand(std::size_t deg, const Vec& coords) const {
        const BlockSpace& sp = res_.spaces[deg];
        Matrix<F> out(field_, n_.dim, sp.total_dim);
        for (std::size_t t = 0; t < sp.columns(); ++t) {
            const std::size_t cls_idx = sp.col_class[t];
            const auto& cls = res_.proj.classes[cls_idx];
            // value on the generator of column t
            Vec value(n_.dim, field_.zero());
            for (std::size_t k = 0; k < class_value_dims_[cls_idx]; ++k) {
                const Elem& c = coords[hom_offsets_[deg][t] + k];
                if (field_.is_zero(c)) continue;
                for (std::size_t r = 0; r < n_.dim; ++r)
                    value[r] = field_.add(value[r], field_.mul(c, value_bases_[cls_idx].at(r, k)));
            }
            for (std::size_t s = 0; s < cls.dim(); ++s) {
                Vec col = n_.act(cls.basis.col(s), value);
                for (std::size_t r = 0; r < n_.dim; ++r) out.at(r, sp.offset[t] + s) = col[r];
            }
        }
        return out;
    }

    // hom-complex coordinates of a module map given expanded (values must lie in e N per block)
    Vec coords_of_expanded(std::size_t deg, const Matrix<F>& expanded) const {
        const BlockSpace& sp = res_.spaces[deg];
        Vec out(hom_dims_[deg], field_.zero());
        for (std::size_t t = 0; t < sp.columns(); ++t) {
            const std::size_t cls_idx = sp.col_class[t];
            if (class_value_dims_[cls_idx] == 0) continue;
            const auto& cls = res_.proj.classes[cls_idx];
            Vec genvec(sp.total_dim, field_.zero());
            for (std::size_t s = 0; s < cls.dim(); ++s)
                genvec[sp.offset[t] + s] = cls.generator_coords[s];
            Vec value = expanded.apply(genvec);
            auto sol = value_solvers_[cls_idx]->solve(value);
            if (!sol) raise_internal("hom value outside e*N");
            for (std::size_t k = 0; k < class_value_dims_[cls_idx]; ++k)
                out[hom_offsets_[deg][t] + k] = (*sol)[k];
        }
        return out;
    }

   private:
    Matrix<F> build_delta(std::size_t deg) {
        // delta f = f o d_{deg+1}: column = coords of (basis hom) composed with the differential
        const BlockSpace& src = res_.spaces[deg + 1];
        Matrix<F> delta(field_, hom_dims_[deg + 1], hom_dims_[deg]);
        for (std::size_t t = 0; t < res_.spaces[deg].columns(); ++t) {
            const std::size_t cls_idx = res_.spaces[deg].col_class[t];
            for (std::size_t k = 0; k < class_value_dims_[cls_idx]; ++k) {
                // basis hom: value basis vector k on generator t, zero elsewhere
                Vec img(hom_dims_[deg + 1], field_.zero());
                for (std::size_t s = 0; s < src.columns(); ++s) {
                    const std::size_t scls = src.col_class[s];
                    if (class_value_dims_[scls] == 0) continue;
                    // a = block-t algebra entry of d(gen_s); value = a . w
                    Vec a = res_.diff_entry(deg + 1, t, s);
                    Vec value = n_.act(a, value_bases_[cls_idx].col(k));
                    auto sol = value_solvers_[scls]->solve(value);
                    if (!sol) raise_internal("delta value outside e*N");
                    for (std::size_t kk = 0; kk < class_value_dims_[scls]; ++kk)
                        img[hom_offsets_[deg + 1][s] + kk] = (*sol)[kk];
                }
                delta.set_col(hom_offsets_[deg][t] + k, img);
            }
        }
        return delta;
    }

    const MinimalResolution<F>& res_;
    FDModule<F> n_;
    F field_;
    std::vector<Matrix<F>> value_bases_;  // per class: basis of e*N
    std::vector<std::unique_ptr<LinearSolver<F>>> value_solvers_;
    std::vector<std::size_t> class_value_dims_;
    std::vector<std::vector<std::size_t>> hom_offsets_;  // per degree, per column
    std::vector<std::size_t> hom_dims_;
    std::vector<Matrix<F>> deltas_;
};

struct ExtSequence {
    SeriesWindow dims;  // start 0
};

template <class F>
ExtSequence ext_dims(std::shared_ptr<const BasisAlgebra<F>> alg, const FDModule<F>& m,
                     const FDModule<F>& n, std::size_t n_max, const ResolutionLimits& limits = {}) {
    MinimalResolution<F> res = minimal_resolution(alg, m, n_max + 1, limits);
    HomComplex<F> hom(res, n);
    ExtSequence seq;
    seq.dims.start = 0;
    for (std::size_t deg = 0; deg <= n_max; ++deg)
        seq.dims.terms.push_back(static_cast<std::int64_t>(hom.ext_dim(deg)));
    return seq;
}

/* Cohomology bases of a Hom complex on a degree range: representatives of
 * Ext classes and coordinates for arbitrary cocycles. */
template <class F>
class ExtBases {
   public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    ExtBases(const HomComplex<F>& hom, std::size_t up_to) : hom_(hom) {
        if (up_to + 1 > hom.max_degree())
            raise(ErrorCode::RangeExceedsResolution, "Ext bases beyond the resolution length");
        for (std::size_t deg = 0; deg <= up_to; ++deg) {
            Matrix<F> kernel = rank_kernel(hom.delta(deg)).kernel;
            Echelon<F> image(hom.delta(deg).field(), hom.hom_dim(deg));
            std::vector<Vec> image_basis;
            if (deg > 0) {
                const Matrix<F>& prev = hom.delta(deg - 1);
                for (std::size_t c = 0; c < prev.cols(); ++c)
                    if (image.add(prev.col(c))) image_basis.push_back(prev.col(c));
            }
            std::vector<Vec> reps;
            Echelon<F> acc = image;
            for (std::size_t c = 0; c < kernel.cols(); ++c)
                if (acc.add(kernel.col(c))) reps.push_back(kernel.col(c));
            // solver over [image | reps] to coordinatize cocycles
            Matrix<F> full(hom.delta(deg).field(), hom.hom_dim(deg), image_basis.size() + reps.size());
            for (std::size_t c = 0; c < image_basis.size(); ++c) full.set_col(c, image_basis[c]);
            for (std::size_t c = 0; c < reps.size(); ++c)
                full.set_col(image_basis.size() + c, reps[c]);
            image_dims_.push_back(image_basis.size());
            reps_.push_back(std::move(reps));
            solvers_.push_back(std::make_unique<LinearSolver<F>>(full));
        }
    }

    std::size_t ext_dim(std::size_t deg) const { return reps_[deg].size(); }
    const std::vector<Vec>& reps(std::size_t deg) const { return reps_[deg]; }

    // Ext coordinates of a cocycle (hom-complex coordinates)
    Vec ext_coords(std::size_t deg, const Vec& cocycle) const {
        auto sol = solvers_[deg]->solve(cocycle);
        if (!sol) raise_internal("vector is not a cocycle in the stored span");
        return Vec(sol->begin() + static_cast<std::ptrdiff_t>(image_dims_[deg]), sol->end());
    }

    /* Matrix of the map Ext^deg -> Ext^{deg+op.degree} given by
     * precomposition with a chain operator. */
    Matrix<F> operator_matrix(const ChainOperator<F>& op, std::size_t deg) const {
        const HomComplex<F>& hom = hom_;
        const F& K = hom.delta(0).field();
        const std::size_t target = deg + op.degree;
        if (!op.defined_at(deg))
            raise(ErrorCode::RangeExceedsResolution, "chain operator undefined at degree " +
                                                         std::to_string(deg));
        Matrix<F> out(K, ext_dim(target), ext_dim(deg));
        for (std::size_t c = 0; c < reps_[deg].size(); ++c) {
            Matrix<F> f = hom.expand(deg, reps_[deg][c]);
            Matrix<F> composed = f * op.map_at(deg);  // f o phi_deg : P_{deg+m} -> N
            Vec coords = hom.coords_of_expanded(target, composed);
            // composition with a chain map takes cocycles to cocycles
            if (target < hom.max_degree()) {
                Vec img = hom.delta(target).apply(coords);
                for (const auto& x : img)
                    if (!K.is_zero(x)) raise_internal("operator image is not a cocycle");
            }
            out.set_col(c, ext_coords(target, coords));
        }
        return out;
    }

   private:
    const HomComplex<F>& hom_;
    std::vector<std::vector<Vec>> reps_;
    std::vector<std::unique_ptr<LinearSolver<F>>> solvers_;
    std::vector<std::size_t> image_dims_;
};

/* Assembles the graded window [n0, n1] with the matrices of the given
 * chain operators acting on Ext(M, N). */
template <class F>
GradedWindow<F> operator_window(const MinimalResolution<F>& res, const FDModule<F>& n_module,
                                const std::vector<ChainOperator<F>>& ops, std::int64_t n0,
                                std::int64_t n1) {
    if (n0 < 0 || n1 < n0) raise(ErrorCode::ConfigError, "bad window range");
    std::size_t need = static_cast<std::size_t>(n1) + 1;
    if (need + 1 > res.spaces.size())
        raise(ErrorCode::RangeExceedsResolution,
              "window needs resolution length " + std::to_string(need + 1) + ", have " +
                  std::to_string(res.length()));
    for (const auto& op : ops)
        if (op.first_n > static_cast<std::size_t>(n0))
            raise(ErrorCode::RangeExceedsResolution,
                  "operator undefined at the window start");
    HomComplex<F> hom(res, n_module);
    ExtBases<F> bases(hom, static_cast<std::size_t>(n1));
    GradedWindow<F> win;
    win.n0 = n0;
    win.n1 = n1;
    for (std::int64_t n = n0; n <= n1; ++n)
        win.piece_dims.push_back(static_cast<std::int64_t>(bases.ext_dim(static_cast<std::size_t>(n))));
    for (const auto& op : ops) {
        WindowOperator<F> wop;
        wop.degree = static_cast<std::int64_t>(op.degree);
        for (std::int64_t n = n0; n + wop.degree <= n1; ++n)
            wop.mats.push_back(bases.operator_matrix(op, static_cast<std::size_t>(n)));
        win.operators.push_back(std::move(wop));
    }
    win.validate();
    return win;
}

}  // namespace extvan

#endif
