#ifndef EXTVAN_BASIS_ALGEBRA_HPP
#define EXTVAN_BASIS_ALGEBRA_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "extvan/matrix.hpp"

namespace extvan {

inline constexpr std::size_t kDefaultConstructorDimCap = 4096;

/* A finite-dimensional unital algebra given by a basis and a product rule
 * on basis elements. Monomial presets (truncated polynomial, quantum
 * complete intersection, exterior) and group algebras keep their product
 * rule symbolic; explicitly tabulated algebras carry sparse rows. The
 * radical is stored as a spanning set; for local algebras the quotient
 * A/J is the ground field and carries the augmentation. Instances are
 * immutable once built. */
template <class F>
class BasisAlgebra {
   public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;
    struct Term {
        std::size_t index;
        Elem coeff;
    };
    using SparseVec = std::vector<Term>;

    F field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::size_t unit_index = 0;

    // product representation
    enum class Kind { Monomial, Group, Table };
    Kind kind = Kind::Table;

    // Monomial: basis = monomials x1^e1..xc^ec with ei < a, graded-lex order
    std::size_t mono_c = 0, mono_a = 0;
    Elem mono_q{};
    // Group: basis = group elements, product from the multiplication table
    std::vector<std::vector<std::size_t>> group_table;
    // Table: explicit sparse rows
    std::vector<std::vector<SparseVec>> table;

    std::vector<Vec> radical_vectors;  // spanning set of J
    std::size_t radical_dim = 0;
    std::vector<Vec> semisimple_lift;  // lifts of a basis of A/J, complements radical
    std::vector<Vec> augmentation;     // empty, or the one-row functional A -> k

    /* One primitive idempotent per isomorphism class of simple module;
     * the left ideals A*e are the indecomposable projectives the
     * resolution engine sums. Local algebras have the single class e = 1. */
    std::vector<Vec> proj_class_idempotents;

    bool is_local() const { return radical_dim + 1 == dim; }
    bool has_augmentation() const { return !augmentation.empty(); }

    std::size_t monomial_index(const std::vector<std::size_t>& expo) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < mono_c; ++i) idx = idx * mono_a + expo[i];
        return idx;
    }
    std::vector<std::size_t> monomial_exponents(std::size_t idx) const {
        std::vector<std::size_t> e(mono_c, 0);
        for (std::size_t i = mono_c; i-- > 0;) {
            e[i] = idx % mono_a;
            idx /= mono_a;
        }
        return e;
    }

    SparseVec product(std::size_t i, std::size_t j) const {
        switch (kind) {
            case Kind::Group:
                return {Term{group_table[i][j], field.one()}};
            case Kind::Table:
                return table[i][j];
            case Kind::Monomial: {
                auto e = monomial_exponents(i), f = monomial_exponents(j);
                std::size_t swaps = 0;  // moves of f-variables left past higher e-variables
                for (std::size_t a = 0; a < mono_c; ++a)
                    for (std::size_t b = a + 1; b < mono_c; ++b) swaps += e[b] * f[a];
                std::vector<std::size_t> sum(mono_c);
                for (std::size_t t = 0; t < mono_c; ++t) {
                    sum[t] = e[t] + f[t];
                    if (sum[t] >= mono_a) return {};
                }
                Elem coeff = field.one();
                if (swaps) {
                    Elem qinv = field.inv(mono_q);
                    for (std::size_t s = 0; s < swaps; ++s) coeff = field.mul(coeff, qinv);
                }
                return {Term{monomial_index(sum), coeff}};
            }
        }
        return {};
    }

    // coords of v * b_j
    Vec mult_vec_basis(const Vec& v, std::size_t j) const {
        Vec out(dim, field.zero());
        for (std::size_t i = 0; i < dim; ++i) {
            if (field.is_zero(v[i])) continue;
            for (const Term& t : product(i, j))
                out[t.index] = field.add(out[t.index], field.mul(v[i], t.coeff));
        }
        return out;
    }

    Vec mult(const Vec& v, const Vec& w) const {
        Vec out(dim, field.zero());
        for (std::size_t i = 0; i < dim; ++i) {
            if (field.is_zero(v[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (field.is_zero(w[j])) continue;
                Elem c = field.mul(v[i], w[j]);
                for (const Term& t : product(i, j))
                    out[t.index] = field.add(out[t.index], field.mul(c, t.coeff));
            }
        }
        return out;
    }

    // matrix of left multiplication by basis element i
    Matrix<F> left_mult_basis(std::size_t i) const {
        Matrix<F> m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (const Term& t : product(i, j)) m.at(t.index, j) = t.coeff;
        return m;
    }

    Matrix<F> left_mult(const Vec& v) const {
        Matrix<F> m(field, dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (field.is_zero(v[i])) continue;
            for (std::size_t j = 0; j < dim; ++j)
                for (const Term& t : product(i, j))
                    m.at(t.index, j) = field.add(m.at(t.index, j), field.mul(v[i], t.coeff));
        }
        return m;
    }

    // matrix of right multiplication by v: w -> w*v
    Matrix<F> right_mult(const Vec& v) const {
        Matrix<F> m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (field.is_zero(v[j])) continue;
            for (std::size_t i = 0; i < dim; ++i)
                for (const Term& t : product(i, j))
                    m.at(t.index, i) = field.add(m.at(t.index, i), field.mul(v[j], t.coeff));
        }
        return m;
    }

    Vec unit_vec() const {
        Vec v(dim, field.zero());
        v[unit_index] = field.one();
        return v;
    }
    Vec basis_vec(std::size_t i) const {
        Vec v(dim, field.zero());
        v[i] = field.one();
        return v;
    }

    Echelon<F> radical_echelon() const {
        Echelon<F> e(field, dim);
        for (const auto& v : radical_vectors) e.add(v);
        return e;
    }

    Elem augment(const Vec& v) const {
        if (!has_augmentation()) raise(ErrorCode::NoAugmentation, "algebra has no augmentation");
        Elem s = field.zero();
        for (std::size_t i = 0; i < dim; ++i) s = field.add(s, field.mul(augmentation[0][i], v[i]));
        return s;
    }

    void verify_unit_and_associativity() const;
    void finalize_radical();  // fills radical_dim, semisimple_lift; radical_vectors set by caller
};

template <class F>
void BasisAlgebra<F>::verify_unit_and_associativity() const {
    for (std::size_t j = 0; j < dim; ++j) {
        SparseVec uj = product(unit_index, j), ju = product(j, unit_index);
        bool ok = uj.size() == 1 && uj[0].index == j && field.is_one(uj[0].coeff) &&
                  ju.size() == 1 && ju[0].index == j && field.is_one(ju[0].coeff);
        if (!ok) raise(ErrorCode::UnsupportedAlgebra, "unit does not act as identity");
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec ij(dim, field.zero());
            for (const Term& t : product(i, j)) ij[t.index] = field.add(ij[t.index], t.coeff);
            for (std::size_t k = 0; k < dim; ++k) {
                Vec lhs = mult_vec_basis(ij, k);
                Vec jk(dim, field.zero());
                for (const Term& t : product(j, k)) jk[t.index] = field.add(jk[t.index], t.coeff);
                Vec rhs(dim, field.zero());
                for (std::size_t l = 0; l < dim; ++l) {
                    if (field.is_zero(jk[l])) continue;
                    for (const Term& t : product(i, l))
                        rhs[t.index] = field.add(rhs[t.index], field.mul(jk[l], t.coeff));
                }
                if (lhs != rhs)
                    raise(ErrorCode::UnsupportedAlgebra, "product is not associative at basis triple " +
                                                             std::to_string(i) + "," + std::to_string(j) +
                                                             "," + std::to_string(k));
            }
        }
}

template <class F>
void BasisAlgebra<F>::finalize_radical() {
    Echelon<F> e(field, dim);
    for (const auto& v : radical_vectors) e.add(v);
    radical_dim = e.dim();
    semisimple_lift.clear();
    Echelon<F> full = e;
    for (std::size_t i = 0; i < dim && full.dim() < dim; ++i) {
        Vec v = basis_vec(i);
        if (full.add(v)) semisimple_lift.push_back(v);
    }
    if (radical_dim + semisimple_lift.size() != dim) raise_internal("radical complement mismatch");
}

/* ---- monomial presets ---- */

template <class F>
std::shared_ptr<const BasisAlgebra<F>> make_quantum_ci(std::size_t c, std::size_t a,
                                                       typename F::Elem q, F field,
                                                       std::size_t dim_cap = kDefaultConstructorDimCap) {
    if (c < 1 || a < 2) raise(ErrorCode::ConfigError, "quantum complete intersection needs c >= 1, a >= 2");
    if (field.is_zero(q)) raise(ErrorCode::BadCommutator, "commutator parameter q must be nonzero");
    typename F::Elem qa = field.one();
    for (std::size_t i = 0; i < a; ++i) qa = field.mul(qa, q);
    if (!field.is_one(qa)) raise(ErrorCode::BadCommutator, "q^a must equal 1 in the ground field");

    double logdim = static_cast<double>(c) * std::log2(static_cast<double>(a));
    if (logdim > 40 || [&] {
            std::size_t d = 1;
            for (std::size_t i = 0; i < c; ++i) {
                d *= a;
                if (d > dim_cap) return true;
            }
            return false;
        }())
        raise(ErrorCode::OverflowGuard, "algebra dimension a^c exceeds the cap of " +
                                            std::to_string(dim_cap));

    auto alg = std::make_shared<BasisAlgebra<F>>();
    alg->field = field;
    alg->kind = BasisAlgebra<F>::Kind::Monomial;
    alg->mono_c = c;
    alg->mono_a = a;
    alg->mono_q = q;
    std::size_t dim = 1;
    for (std::size_t i = 0; i < c; ++i) dim *= a;
    alg->dim = dim;
    alg->unit_index = 0;
    alg->basis_labels.reserve(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        auto e = alg->monomial_exponents(idx);
        std::string label;
        for (std::size_t i = 0; i < c; ++i) {
            if (e[i] == 0) continue;
            label += "x" + std::to_string(i + 1);
            if (e[i] > 1) label += "^" + std::to_string(e[i]);
        }
        alg->basis_labels.push_back(label.empty() ? "1" : label);
    }
    for (std::size_t idx = 1; idx < dim; ++idx) alg->radical_vectors.push_back(alg->basis_vec(idx));
    alg->finalize_radical();
    alg->augmentation = {alg->basis_vec(alg->unit_index)};  // evaluation at x = 0
    alg->proj_class_idempotents = {alg->unit_vec()};
    if (dim <= 64) alg->verify_unit_and_associativity();
    return alg;
}

template <class F>
std::shared_ptr<const BasisAlgebra<F>> make_truncated_polynomial(
    std::size_t c, std::size_t a, F field, std::size_t dim_cap = kDefaultConstructorDimCap) {
    return make_quantum_ci<F>(c, a, field.one(), field, dim_cap);
}

template <class F>
std::shared_ptr<const BasisAlgebra<F>> make_exterior(std::size_t c, F field,
                                                     std::size_t dim_cap = kDefaultConstructorDimCap) {
    return make_quantum_ci<F>(c, 2, field.neg(field.one()), field, dim_cap);
}

}  // namespace extvan

#endif
