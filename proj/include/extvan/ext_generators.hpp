#ifndef EXTVAN_EXT_GENERATORS_HPP
#define EXTVAN_EXT_GENERATORS_HPP

#include "extvan/ext.hpp"

namespace extvan {

template <class F>
struct ExtRingGenerators {
    std::vector<int> degrees;             // one entry per generator, ascending
    std::vector<Cocycle<F>> cocycles;     // representing cocycles P_deg -> k
    std::vector<ChainOperator<F>> lifts;  // chain operators of the generators
    MinimalResolution<F> resolution;      // the resolution of k the lifts live on
};

/* Generators of Ext(k, k) by degree, greedily: in each degree the span of
 * Yoneda products of the generators found so far is computed through
 * their lifted chain operators, and a basis of a complement is appended
 * as new generators. */
template <class F>
ExtRingGenerators<F> ext_ring_generators(std::shared_ptr<const BasisAlgebra<F>> alg,
                                         std::size_t max_degree,
                                         const ResolutionLimits& limits = {},
                                         std::size_t lift_up_to = 0) {
    using Vec = std::vector<typename F::Elem>;
    if (max_degree < 1) raise(ErrorCode::ConfigError, "generator search needs max degree >= 1");
    const F& K = alg->field;
    FDModule<F> triv = make_trivial_module(alg);
    const std::size_t res_len = std::max(max_degree + 1, lift_up_to + 1);
    MinimalResolution<F> res = minimal_resolution(alg, triv, res_len, limits);
    HomComplex<F> hom(res, triv);
    ExtBases<F> bases(hom, res_len - 1);

    ExtRingGenerators<F> out;
    /* Generators found in degrees < n span all of Ext^j for j < n (a
     * complement was appended at every step), so the decomposable part of
     * Ext^n is the sum of the generator action images. */
    for (std::size_t n = 1; n <= max_degree; ++n) {
        Echelon<F> span(K, bases.ext_dim(n));
        for (std::size_t g = 0; g < out.degrees.size(); ++g) {
            const std::size_t dg = static_cast<std::size_t>(out.degrees[g]);
            if (dg > n) continue;
            Matrix<F> action = bases.operator_matrix(out.lifts[g], n - dg);
            for (std::size_t c = 0; c < action.cols(); ++c) span.add(action.col(c));
        }
        for (std::size_t k = 0; k < bases.ext_dim(n); ++k) {
            Vec unit(bases.ext_dim(n), K.zero());
            unit[k] = K.one();
            if (!span.add(unit)) continue;
            // new generator: the k-th stored representative of Ext^n
            Cocycle<F> cyc;
            cyc.degree = n;
            cyc.expanded = hom.expand(n, bases.reps(n)[k]);
            out.degrees.push_back(static_cast<int>(n));
            out.lifts.push_back(lift_chain_map(res, cyc));
            out.cocycles.push_back(std::move(cyc));
        }
    }
    out.resolution = std::move(res);
    return out;
}

}  // namespace extvan

#endif
