#ifndef EXTVAN_FD_MODULE_HPP
#define EXTVAN_FD_MODULE_HPP

#include "extvan/basis_algebra.hpp"

namespace extvan {

/* Finite-dimensional left module over a basis algebra: one action matrix
 * per algebra basis element. */
template <class F>
struct FDModule {
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    std::shared_ptr<const BasisAlgebra<F>> algebra;
    std::size_t dim = 0;
    std::vector<Matrix<F>> action;

    Matrix<F> action_of(const Vec& v) const {
        const F& K = algebra->field;
        Matrix<F> m(K, dim, dim);
        for (std::size_t l = 0; l < algebra->dim; ++l) {
            if (K.is_zero(v[l])) continue;
            m = m + action[l].scaled(v[l]);
        }
        return m;
    }

    Vec act(const Vec& algebra_elt, const Vec& vec) const {
        const F& K = algebra->field;
        Vec out(dim, K.zero());
        for (std::size_t l = 0; l < algebra->dim; ++l) {
            if (K.is_zero(algebra_elt[l])) continue;
            Vec part = action[l].apply(vec);
            for (std::size_t t = 0; t < dim; ++t)
                out[t] = K.add(out[t], K.mul(algebra_elt[l], part[t]));
        }
        return out;
    }

    void validate() const {
        const F& K = algebra->field;
        if (action.size() != algebra->dim) raise_internal("module action table size mismatch");
        if (action[algebra->unit_index] != Matrix<F>::identity(K, dim))
            raise(ErrorCode::UnsupportedAlgebra, "unit does not act as the identity on the module");
        for (std::size_t i = 0; i < algebra->dim; ++i)
            for (std::size_t j = 0; j < algebra->dim; ++j) {
                Matrix<F> lhs = action[i] * action[j];
                Matrix<F> rhs(K, dim, dim);
                for (const auto& t : algebra->product(i, j)) rhs = rhs + action[t.index].scaled(t.coeff);
                if (lhs != rhs)
                    raise(ErrorCode::UnsupportedAlgebra,
                          "module action does not respect the structure constants");
            }
    }
};

template <class F>
FDModule<F> make_trivial_module(std::shared_ptr<const BasisAlgebra<F>> alg) {
    if (!alg->has_augmentation())
        raise(ErrorCode::NoAugmentation,
              "trivial module needs an augmentation (local algebra or group algebra)");
    FDModule<F> m;
    m.algebra = alg;
    m.dim = 1;
    const F& K = alg->field;
    for (std::size_t l = 0; l < alg->dim; ++l) {
        Matrix<F> a(K, 1, 1);
        a.at(0, 0) = alg->augment(alg->basis_vec(l));
        m.action.push_back(a);
    }
    return m;
}

template <class F>
FDModule<F> make_regular_module(std::shared_ptr<const BasisAlgebra<F>> alg) {
    FDModule<F> m;
    m.algebra = alg;
    m.dim = alg->dim;
    for (std::size_t l = 0; l < alg->dim; ++l) m.action.push_back(alg->left_mult_basis(l));
    return m;
}

// conjugate the action by an invertible change of basis (t * rho * t^{-1})
template <class F>
FDModule<F> change_module_basis(const FDModule<F>& m, const Matrix<F>& t) {
    auto tinv = inverse(t);
    if (!tinv) raise(ErrorCode::ConfigError, "module basis change matrix is singular");
    FDModule<F> out;
    out.algebra = m.algebra;
    out.dim = m.dim;
    for (const auto& a : m.action) out.action.push_back(t * a * *tinv);
    return out;
}

}  // namespace extvan

#endif
