#ifndef EXTVAN_RESOLUTION_HPP
#define EXTVAN_RESOLUTION_HPP

#include "extvan/fd_module.hpp"

namespace extvan {

struct ResolutionLimits {
    std::size_t max_algebra_dim = 64;
    std::size_t max_differential_entries = 20000;  // rows*cols of one expanded differential
};

/* The indecomposable projectives A*e the resolution engine sums: one
 * class per primitive idempotent of the algebra. For local algebras the
 * single class e = 1 makes every term free and the construction below is
 * the classical minimal free resolution. */
template <class F>
struct ProjectiveStructure {
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    struct Class {
        Vec idempotent;                    // e, in A coordinates
        Matrix<F> basis;                   // columns: basis of A*e inside A
        LinearSolver<F> coords;            // v in A*e  ->  coordinates in that basis
        std::vector<Matrix<F>> left_mult;  // restricted action of each algebra basis element
        Vec generator_coords;              // coordinates of e itself

        Class(const BasisAlgebra<F>& alg, Vec idem)
            : idempotent(std::move(idem)),
              basis(left_ideal_basis(alg, idempotent)),
              coords(basis) {
            const F& K = alg.field;
            for (std::size_t l = 0; l < alg.dim; ++l) {
                Matrix<F> img = alg.left_mult_basis(l) * basis;
                Matrix<F> restr(K, basis.cols(), basis.cols());
                for (std::size_t c = 0; c < basis.cols(); ++c) {
                    auto sol = coords.solve(img.col(c));
                    if (!sol) raise_internal("A*e is not closed under left multiplication");
                    restr.set_col(c, *sol);
                }
                left_mult.push_back(std::move(restr));
            }
            auto g = coords.solve(idempotent);
            if (!g) raise_internal("idempotent not inside its own left ideal");
            generator_coords = *g;
        }

        static Matrix<F> left_ideal_basis(const BasisAlgebra<F>& alg, const Vec& e) {
            Echelon<F> ech(alg.field, alg.dim);
            Matrix<F> re = alg.right_mult(e);
            for (std::size_t c = 0; c < alg.dim; ++c) ech.add(re.col(c));
            return ech.basis_cols();
        }

        std::size_t dim() const { return basis.cols(); }
    };

    std::vector<Class> classes;

    ProjectiveStructure() = default;
    explicit ProjectiveStructure(const BasisAlgebra<F>& alg) {
        if (alg.proj_class_idempotents.empty())
            raise(ErrorCode::UnsupportedAlgebra, "algebra carries no projective class data");
        for (const auto& e : alg.proj_class_idempotents) classes.emplace_back(alg, e);
    }
};

/* Shape of one term P_n = direct sum of A*e_{class(t)} over generator columns. */
struct BlockSpace {
    std::vector<std::size_t> col_class;
    std::vector<std::size_t> offset;
    std::size_t total_dim = 0;

    std::size_t columns() const { return col_class.size(); }
};

template <class F>
BlockSpace make_block_space(const ProjectiveStructure<F>& proj,
                            const std::vector<std::size_t>& classes) {
    BlockSpace sp;
    sp.col_class = classes;
    for (std::size_t c : classes) {
        sp.offset.push_back(sp.total_dim);
        sp.total_dim += proj.classes[c].dim();
    }
    return sp;
}

template <class F>
std::vector<std::size_t> count_classes(const ProjectiveStructure<F>& proj,
                                       const std::vector<std::size_t>& classes) {
    std::vector<std::size_t> counts(proj.classes.size(), 0);
    for (std::size_t c : classes) ++counts[c];
    return counts;
}

/* Left action of an algebra element on a block-space vector. */
template <class F>
std::vector<typename F::Elem> block_act(const ProjectiveStructure<F>& proj, const BlockSpace& sp,
                                        const BasisAlgebra<F>& alg,
                                        const std::vector<typename F::Elem>& algebra_elt,
                                        const std::vector<typename F::Elem>& v) {
    using Elem = typename F::Elem;
    const F& K = alg.field;
    std::vector<Elem> out(sp.total_dim, K.zero());
    for (std::size_t t = 0; t < sp.columns(); ++t) {
        const auto& cls = proj.classes[sp.col_class[t]];
        const std::size_t d = cls.dim(), off = sp.offset[t];
        std::vector<Elem> comp(v.begin() + static_cast<std::ptrdiff_t>(off),
                               v.begin() + static_cast<std::ptrdiff_t>(off + d));
        std::vector<Elem> acc(d, K.zero());
        for (std::size_t l = 0; l < alg.dim; ++l) {
            if (K.is_zero(algebra_elt[l])) continue;
            std::vector<Elem> part = cls.left_mult[l].apply(comp);
            for (std::size_t s = 0; s < d; ++s) acc[s] = K.add(acc[s], K.mul(algebra_elt[l], part[s]));
        }
        for (std::size_t s = 0; s < d; ++s) out[off + s] = acc[s];
    }
    return out;
}

// the block-t component of a space vector, as an element of A
template <class F>
std::vector<typename F::Elem> block_component_as_algebra_elt(
    const ProjectiveStructure<F>& proj, const BlockSpace& sp, std::size_t t,
    const std::vector<typename F::Elem>& v) {
    const auto& cls = proj.classes[sp.col_class[t]];
    std::vector<typename F::Elem> comp(
        v.begin() + static_cast<std::ptrdiff_t>(sp.offset[t]),
        v.begin() + static_cast<std::ptrdiff_t>(sp.offset[t] + cls.dim()));
    return cls.basis.apply(comp);
}

template <class F>
struct MinimalResolution {
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    std::shared_ptr<const BasisAlgebra<F>> algebra;
    FDModule<F> module;
    ProjectiveStructure<F> proj;

    std::vector<BlockSpace> spaces;        // P_0 .. P_length
    Matrix<F> augmentation;                // dim M x dim P_0
    std::vector<Matrix<F>> differentials;  // differentials[n-1]: P_n -> P_{n-1}
    std::vector<std::size_t> betti;
    std::vector<std::vector<std::size_t>> class_mults;

    std::size_t length() const { return differentials.size(); }
    const Matrix<F>& diff(std::size_t n) const { return differentials[n - 1]; }

    // image of the generator of column t of P_n, as a vector in P_{n-1}
    Vec generator_image(std::size_t n, std::size_t t) const {
        const BlockSpace& src = spaces[n];
        const BlockSpace& dst = spaces[n - 1];
        const auto& cls = proj.classes[src.col_class[t]];
        const F& K = algebra->field;
        Vec w(dst.total_dim, K.zero());
        for (std::size_t s = 0; s < cls.dim(); ++s) {
            const Elem& g = cls.generator_coords[s];
            if (K.is_zero(g)) continue;
            for (std::size_t r = 0; r < dst.total_dim; ++r)
                w[r] = K.add(w[r], K.mul(g, diff(n).at(r, src.offset[t] + s)));
        }
        return w;
    }

    // algebra-element entry (row block r, generator column t) of differential n
    Vec diff_entry(std::size_t n, std::size_t r, std::size_t t) const {
        return block_component_as_algebra_elt(proj, spaces[n - 1], r, generator_image(n, t));
    }
};

namespace detail {

/* Generators of a submodule K minimal over the radical: per projective
 * class e, the vectors e*w (w over a basis of K) that are independent
 * modulo J*K. Deterministic given the kernel basis order. */
template <class F, class Act>
std::vector<std::pair<std::size_t, std::vector<typename F::Elem>>> minimal_cover_generators(
    const BasisAlgebra<F>& alg, const ProjectiveStructure<F>& proj, std::size_t ambient_dim,
    const Matrix<F>& kernel_basis, Act&& act) {
    using Vec = std::vector<typename F::Elem>;
    Echelon<F> ech(alg.field, ambient_dim);
    for (const auto& j : alg.radical_vectors)
        for (std::size_t c = 0; c < kernel_basis.cols(); ++c) ech.add(act(j, kernel_basis.col(c)));
    std::vector<std::pair<std::size_t, Vec>> gens;
    for (std::size_t i = 0; i < proj.classes.size(); ++i) {
        const Vec& e = proj.classes[i].idempotent;
        for (std::size_t c = 0; c < kernel_basis.cols(); ++c) {
            Vec u = act(e, kernel_basis.col(c));
            if (ech.add(u)) gens.emplace_back(i, std::move(u));
        }
    }
    return gens;
}

}  // namespace detail

/* Expanded matrix of the module map sending the generator of column t to
 * gen_images[t]; columns are images of the A*e basis vectors. */
template <class F, class Act>
Matrix<F> expand_generator_map(const BasisAlgebra<F>& alg, const ProjectiveStructure<F>& proj,
                               const BlockSpace& from, std::size_t target_dim,
                               const std::vector<std::vector<typename F::Elem>>& gen_images,
                               Act&& act) {
    Matrix<F> m(alg.field, target_dim, from.total_dim);
    for (std::size_t t = 0; t < from.columns(); ++t) {
        const auto& cls = proj.classes[from.col_class[t]];
        for (std::size_t s = 0; s < cls.dim(); ++s) {
            auto col = act(cls.basis.col(s), gen_images[t]);
            for (std::size_t r = 0; r < target_dim; ++r) m.at(r, from.offset[t] + s) = col[r];
        }
    }
    return m;
}

template <class F>
MinimalResolution<F> minimal_resolution(std::shared_ptr<const BasisAlgebra<F>> alg,
                                        const FDModule<F>& m, std::size_t n_max,
                                        const ResolutionLimits& limits = {}) {
    using Vec = std::vector<typename F::Elem>;
    if (alg->dim > limits.max_algebra_dim)
        raise(ErrorCode::DimensionCap, "algebra dimension " + std::to_string(alg->dim) +
                                           " exceeds the resolution cap " +
                                           std::to_string(limits.max_algebra_dim));
    MinimalResolution<F> res;
    res.algebra = alg;
    res.module = m;
    res.proj = ProjectiveStructure<F>(*alg);

    auto module_act = [&](const Vec& a, const Vec& v) { return res.module.act(a, v); };

    Matrix<F> m_basis = Matrix<F>::identity(alg->field, m.dim);
    auto gens0 = detail::minimal_cover_generators(*alg, res.proj, m.dim, m_basis, module_act);
    std::vector<std::size_t> classes0;
    std::vector<Vec> images0;
    for (auto& [cls, u] : gens0) {
        classes0.push_back(cls);
        images0.push_back(std::move(u));
    }
    res.spaces.push_back(make_block_space(res.proj, classes0));
    res.betti.push_back(classes0.size());
    res.class_mults.push_back(count_classes(res.proj, classes0));
    res.augmentation =
        expand_generator_map(*alg, res.proj, res.spaces[0], m.dim, images0, module_act);
    if (rank_of(res.augmentation) != m.dim) raise_internal("augmentation is not surjective");

    for (std::size_t n = 0; n < n_max; ++n) {
        const BlockSpace& cur = res.spaces[n];
        const Matrix<F>& boundary = n == 0 ? res.augmentation : res.diff(n);
        Matrix<F> kernel = rank_kernel(boundary).kernel;
        auto space_act = [&](const Vec& a, const Vec& v) {
            return block_act(res.proj, cur, *alg, a, v);
        };
        auto gens = detail::minimal_cover_generators(*alg, res.proj, cur.total_dim, kernel, space_act);
        std::vector<std::size_t> classes;
        std::vector<Vec> images;
        for (auto& [cls, u] : gens) {
            classes.push_back(cls);
            images.push_back(std::move(u));
        }
        BlockSpace next = make_block_space(res.proj, classes);
        if (next.total_dim * cur.total_dim > limits.max_differential_entries)
            raise(ErrorCode::DimensionCap,
                  "expanded differential would have " +
                      std::to_string(next.total_dim * cur.total_dim) + " entries, cap is " +
                      std::to_string(limits.max_differential_entries));
        Matrix<F> d = expand_generator_map(*alg, res.proj, next, cur.total_dim, images, space_act);
        res.spaces.push_back(std::move(next));
        res.betti.push_back(classes.size());
        res.class_mults.push_back(count_classes(res.proj, classes));
        res.differentials.push_back(std::move(d));
    }
    return res;
}

/* ---- standard modules ---- */

enum class StandardModuleKind { Trivial, Regular, Syzygy };

template <class F>
FDModule<F> syzygy_module(std::shared_ptr<const BasisAlgebra<F>> alg, std::size_t i,
                          const ResolutionLimits& limits = {}) {
    if (i < 1) raise(ErrorCode::ConfigError, "syzygy index must be at least 1");
    FDModule<F> triv = make_trivial_module(alg);
    MinimalResolution<F> res = minimal_resolution(alg, triv, i - 1, limits);
    const Matrix<F>& boundary = i == 1 ? res.augmentation : res.diff(i - 1);
    Matrix<F> kernel = rank_kernel(boundary).kernel;
    const BlockSpace& ambient = res.spaces[i - 1];

    FDModule<F> syz;
    syz.algebra = alg;
    syz.dim = kernel.cols();
    LinearSolver<F> coords(kernel);
    for (std::size_t l = 0; l < alg->dim; ++l) {
        Matrix<F> a(alg->field, syz.dim, syz.dim);
        for (std::size_t c = 0; c < kernel.cols(); ++c) {
            auto img = block_act(res.proj, ambient, *alg, alg->basis_vec(l), kernel.col(c));
            auto sol = coords.solve(img);
            if (!sol) raise_internal("syzygy is not closed under the algebra action");
            a.set_col(c, *sol);
        }
        syz.action.push_back(std::move(a));
    }
    return syz;
}

template <class F>
FDModule<F> standard_module(std::shared_ptr<const BasisAlgebra<F>> alg, StandardModuleKind kind,
                            std::size_t syzygy_index = 1, const ResolutionLimits& limits = {}) {
    switch (kind) {
        case StandardModuleKind::Trivial: return make_trivial_module(alg);
        case StandardModuleKind::Regular: return make_regular_module(alg);
        case StandardModuleKind::Syzygy: return syzygy_module(alg, syzygy_index, limits);
    }
    raise_internal("unknown module kind");
}

/* ---- invariant checks used by tests ---- */

template <class F>
void verify_resolution(const MinimalResolution<F>& res) {
    for (std::size_t n = 1; n < res.length(); ++n)
        if (!(res.diff(n) * res.diff(n + 1)).is_zero())
            raise_internal("d o d != 0 at degree " + std::to_string(n + 1));
    if (res.length() >= 1 && !(res.augmentation * res.diff(1)).is_zero())
        raise_internal("aug o d1 != 0");
    if (rank_of(res.augmentation) != res.module.dim) raise_internal("augmentation not surjective");
    std::size_t prev_rank = rank_of(res.augmentation);
    for (std::size_t n = 1; n <= res.length(); ++n) {
        std::size_t r = rank_of(res.diff(n));
        if (prev_rank + r != res.spaces[n - 1].total_dim)
            raise_internal("complex not exact at degree " + std::to_string(n - 1));
        prev_rank = r;
    }
}

template <class F>
bool differentials_lie_in_radical(const MinimalResolution<F>& res) {
    Echelon<F> rad = res.algebra->radical_echelon();
    for (std::size_t n = 1; n <= res.length(); ++n) {
        const BlockSpace& dst = res.spaces[n - 1];
        for (std::size_t t = 0; t < res.spaces[n].columns(); ++t)
            for (std::size_t r = 0; r < dst.columns(); ++r)
                if (!rad.contains(res.diff_entry(n, r, t))) return false;
    }
    return true;
}

}  // namespace extvan

#endif
