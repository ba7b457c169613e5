#ifndef EXTVAN_RADICAL_HPP
#define EXTVAN_RADICAL_HPP

#include <algorithm>
#include <cstdint>

#include "extvan/basis_algebra.hpp"
#include "extvan/charpoly.hpp"
#include "extvan/fields.hpp"
#include "extvan/poly.hpp"

namespace extvan {

/* Radical computation and Wedderburn structure for basis algebras whose
 * radical is not known a priori (group algebras, file algebras). The
 * candidate radical comes from characteristic-coefficient forms in
 * characteristic p and from the trace form in characteristic zero; it is
 * then verified outright: two-sided ideal, nilpotent, and the quotient
 * decomposes as a product of full matrix algebras over the ground field.
 * Anything that fails verification is rejected as UnsupportedAlgebra,
 * never silently accepted. */

namespace detail {

template <class F>
Matrix<F> columns_from(const F& field, const std::vector<std::vector<typename F::Elem>>& vs,
                       std::size_t ambient) {
    Matrix<F> m(field, ambient, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t r = 0; r < ambient; ++r) m.at(r, c) = vs[c][r];
    return m;
}

}  // namespace detail

/* Candidate for the radical.
 * char p: the chain R_{-1} = A, R_i = {x in R_{i-1} : c_{p^i}(L_{xy}) = 0
 * for all y in R_{i-1}}, i up to log_p(dim); over the prime field these
 * conditions are linear and the chain ends at the radical.
 * char 0: the kernel of the trace form (x, y) -> tr(L_{xy}). */
template <class F>
std::vector<std::vector<typename F::Elem>> radical_candidate(const BasisAlgebra<F>& alg) {
    using Elem = typename F::Elem;
    const F& K = alg.field;
    const std::size_t n = alg.dim;

    std::vector<std::vector<Elem>> space;
    for (std::size_t i = 0; i < n; ++i) space.push_back(alg.basis_vec(i));

    const std::uint64_t p = K.spec().characteristic();
    std::vector<std::size_t> coeff_indices;
    if (p == 0) {
        coeff_indices = {1};
    } else {
        for (std::uint64_t m = 1; m <= n; m *= p) coeff_indices.push_back(static_cast<std::size_t>(m));
    }

    for (std::size_t ci : coeff_indices) {
        if (space.empty()) break;
        const std::size_t r = space.size();
        Matrix<F> cond(K, r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                auto prod = alg.mult(space[k], space[j]);
                auto cp = char_poly(alg.left_mult(prod));
                cond.at(j, k) = char_coeff<F>(cp, ci);
            }
        auto rk = rank_kernel(cond);
        std::vector<std::vector<Elem>> next;
        for (std::size_t c = 0; c < rk.kernel.cols(); ++c) {
            std::vector<Elem> v(n, K.zero());
            for (std::size_t k = 0; k < r; ++k) {
                const Elem& x = rk.kernel.at(k, c);
                if (K.is_zero(x)) continue;
                for (std::size_t t = 0; t < n; ++t) v[t] = K.add(v[t], K.mul(x, space[k][t]));
            }
            next.push_back(std::move(v));
        }
        space = std::move(next);
    }
    return space;
}

template <class F>
void verify_nilpotent_ideal(const BasisAlgebra<F>& alg, const Echelon<F>& rad) {
    using Vec = typename BasisAlgebra<F>::Vec;
    // two-sided ideal
    for (const auto& v : rad.rows())
        for (std::size_t b = 0; b < alg.dim; ++b) {
            Vec bv = alg.left_mult_basis(b).apply(v);
            if (!rad.contains(bv))
                raise(ErrorCode::UnsupportedAlgebra, "candidate radical is not a left ideal");
            Vec vb = alg.mult_vec_basis(v, b);
            if (!rad.contains(vb))
                raise(ErrorCode::UnsupportedAlgebra, "candidate radical is not a right ideal");
        }
    // nilpotent: J^{k+1} = J * J^k shrinks to zero
    std::vector<Vec> power = rad.rows();
    for (std::size_t step = 0; step <= alg.dim && !power.empty(); ++step) {
        Echelon<F> next(alg.field, alg.dim);
        for (const auto& u : rad.rows())
            for (const auto& w : power) next.add(alg.mult(u, w));
        if (next.dim() >= power.size() && step == alg.dim)
            raise(ErrorCode::UnsupportedAlgebra, "candidate radical is not nilpotent");
        if (next.dim() == 0) return;
        if (next.dim() >= power.size())
            raise(ErrorCode::UnsupportedAlgebra, "candidate radical is not nilpotent");
        power = next.rows();
    }
}

/* The quotient B = A/J with multiplication, for Wedderburn analysis. */
template <class F>
class QuotientAlg {
   public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    QuotientAlg(const BasisAlgebra<F>& alg, const Echelon<F>& rad)
        : field_(alg.field), rad_dim_(rad.dim()) {
        // basis of A = [J basis | lifts]; B coordinates are the tail block
        std::vector<Vec> lifts;
        Echelon<F> full = rad;
        for (std::size_t i = 0; i < alg.dim && full.dim() < alg.dim; ++i) {
            Vec v = alg.basis_vec(i);
            if (full.add(v)) lifts.push_back(v);
        }
        dim_ = lifts.size();
        Matrix<F> change(field_, alg.dim, alg.dim);
        std::size_t c = 0;
        for (const auto& v : rad.rows()) change.set_col(c++, v);
        for (const auto& v : lifts) change.set_col(c++, v);
        lifts_ = detail::columns_from(field_, lifts, alg.dim);
        solver_ = std::make_unique<LinearSolver<F>>(change);
        unit_ = reduce(alg.unit_vec());
        mult_table_.assign(dim_, std::vector<Vec>(dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                mult_table_[i][j] = reduce(alg.mult(lift(basis_vec(i)), lift(basis_vec(j))));
    }

    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }

    Vec basis_vec(std::size_t i) const {
        Vec v(dim_, field_.zero());
        v[i] = field_.one();
        return v;
    }

    Vec reduce(const Vec& a_coords) const {
        auto sol = solver_->solve(a_coords);
        if (!sol) raise_internal("quotient reduction failed");
        return Vec(sol->begin() + static_cast<std::ptrdiff_t>(rad_dim_), sol->end());
    }

    Vec lift(const Vec& b_coords) const { return lifts_.apply(b_coords); }

    Vec mult(const Vec& u, const Vec& v) const {
        Vec out(dim_, field_.zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (field_.is_zero(u[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (field_.is_zero(v[j])) continue;
                Elem c = field_.mul(u[i], v[j]);
                const Vec& t = mult_table_[i][j];
                for (std::size_t k = 0; k < dim_; ++k) out[k] = field_.add(out[k], field_.mul(c, t[k]));
            }
        }
        return out;
    }

    Matrix<F> left_mult(const Vec& u) const {
        Matrix<F> m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec col = mult(u, basis_vec(j));
            m.set_col(j, col);
        }
        return m;
    }

    // subspace e*B as column basis
    Echelon<F> left_ideal(const Vec& x) const {
        Echelon<F> e(field_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) e.add(mult(basis_vec(j), x));
        return e;
    }

    const F& field() const { return field_; }

   private:
    F field_;
    std::size_t rad_dim_, dim_ = 0;
    Matrix<F> lifts_;
    std::unique_ptr<LinearSolver<F>> solver_;
    Vec unit_;
    std::vector<std::vector<Vec>> mult_table_;
};

namespace detail {

// roots of a monic char poly that lie in the ground field
template <class F>
std::vector<typename F::Elem> field_roots(const F& field, const std::vector<typename F::Elem>& cp);

inline std::vector<PrimeField::Elem> field_roots_prime(const PrimeField& field,
                                                       const std::vector<PrimeField::Elem>& cp) {
    if (field.modulus() > 65536)
        raise(ErrorCode::UnsupportedAlgebra,
              "semisimple-quotient analysis not supported for primes above 65536");
    std::vector<PrimeField::Elem> roots;
    for (PrimeField::Elem x = 0; x < field.modulus(); ++x) {
        PrimeField::Elem v = field.zero();
        for (std::size_t i = cp.size(); i-- > 0;) v = field.add(field.mul(v, x), cp[i]);
        if (field.is_zero(v)) roots.push_back(x);
    }
    return roots;
}

inline std::vector<Rat> field_roots_rat(const std::vector<Rat>& cp) {
    // monic integer-normalized: rational roots p/q with q | lead, p | const
    Poly p(cp);
    if (p.is_zero()) raise_internal("zero characteristic polynomial");
    std::vector<Rat> roots;
    // clear denominators
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs()) {
        BigInt g = BigInt::gcd(lcm_den, c.den());
        lcm_den = (lcm_den / g) * c.den();
    }
    std::vector<BigInt> ic;
    for (const auto& c : p.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
    std::size_t lo = 0;
    while (lo < ic.size() && ic[lo].is_zero()) ++lo;
    if (lo > 0) roots.emplace_back(0);
    if (lo >= ic.size() - 1) return roots;
    BigInt c0 = ic[lo].abs(), clead = ic.back().abs();
    if (!c0.fits_int64() || !clead.fits_int64() || c0.to_int64() > (1LL << 40))
        raise(ErrorCode::UnsupportedAlgebra, "rational root search out of range");
    auto divisors = [](std::int64_t n) {
        std::vector<std::int64_t> out;
        for (std::int64_t d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                if (d != n / d) out.push_back(n / d);
            }
        return out;
    };
    for (std::int64_t pp : divisors(c0.to_int64()))
        for (std::int64_t qq : divisors(clead.to_int64()))
            for (int sgn : {1, -1}) {
                Rat cand(BigInt(sgn * pp), BigInt(qq));
                if (p.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

template <>
inline std::vector<PrimeField::Elem> field_roots<PrimeField>(
    const PrimeField& field, const std::vector<PrimeField::Elem>& cp) {
    return field_roots_prime(field, cp);
}

template <>
inline std::vector<Rat> field_roots<RationalField>(const RationalField&,
                                                   const std::vector<Rat>& cp) {
    return field_roots_rat(cp);
}

}  // namespace detail

template <class F>
struct WedderburnData {
    struct SimpleClass {
        std::vector<typename F::Elem> idempotent_in_a;  // lifted primitive idempotent
        std::size_t matrix_size = 1;                    // n_i of the block M_{n_i}(k)
    };
    std::vector<SimpleClass> classes;
};

/* Decomposes B = A/J into matrix-algebra blocks, producing one lifted
 * primitive idempotent per block. Throws UnsupportedAlgebra whenever the
 * quotient is not split semisimple over the ground field. */
template <class F>
WedderburnData<F> wedderburn_structure(const BasisAlgebra<F>& alg, const Echelon<F>& rad,
                                       std::uint64_t seed = 0x5eed) {
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;
    const F& K = alg.field;
    QuotientAlg<F> B(alg, rad);
    const std::size_t nB = B.dim();

    // center of B
    std::vector<Vec> center;
    {
        Matrix<F> cond(K, nB * nB, nB);
        for (std::size_t k = 0; k < nB; ++k) {
            Matrix<F> lk = B.left_mult(B.basis_vec(k));
            Matrix<F> rk(K, nB, nB);
            for (std::size_t j = 0; j < nB; ++j) rk.set_col(j, B.mult(B.basis_vec(j), B.basis_vec(k)));
            Matrix<F> diff = lk - rk;
            for (std::size_t r = 0; r < nB; ++r)
                for (std::size_t c = 0; c < nB; ++c) cond.at(k * nB + r, c) = diff.at(r, c);
        }
        auto rk = rank_kernel(cond);
        for (std::size_t c = 0; c < rk.kernel.cols(); ++c) center.push_back(rk.kernel.col(c));
    }

    // split the center into one-dimensional blocks by eigen-refinement
    std::vector<Vec> idems = {B.unit()};
    bool changed = true;
    auto corner_basis = [&](const Vec& e) {
        Echelon<F> sp(K, nB);
        for (const auto& z : center) sp.add(B.mult(e, z));
        return sp;
    };
    while (changed) {
        changed = false;
        std::vector<Vec> next;
        for (const auto& e : idems) {
            Echelon<F> sp = corner_basis(e);
            if (sp.dim() <= 1) {
                next.push_back(e);
                continue;
            }
            bool split_here = false;
            for (const auto& z : center) {
                Vec ez = B.mult(e, z);
                // matrix of multiplication by ez on the corner subspace
                auto basis = sp.rows();
                Matrix<F> basis_cols = detail::columns_from(K, basis, nB);
                LinearSolver<F> coords(basis_cols);
                Matrix<F> op(K, basis.size(), basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    auto img = B.mult(ez, basis[j]);
                    auto sol = coords.solve(img);
                    if (!sol)
                        raise(ErrorCode::UnsupportedAlgebra, "center corner is not closed under itself");
                    for (std::size_t r = 0; r < basis.size(); ++r) op.at(r, j) = (*sol)[r];
                }
                auto cp = char_poly(op);
                auto roots = detail::field_roots(K, cp);
                if (roots.size() < 2) continue;
                // the action must split: product of (op - root) vanishes
                Matrix<F> probe = Matrix<F>::identity(K, basis.size());
                for (const auto& lam : roots) {
                    Matrix<F> shifted = op;
                    for (std::size_t t = 0; t < basis.size(); ++t)
                        shifted.at(t, t) = K.sub(shifted.at(t, t), lam);
                    probe = probe * shifted;
                }
                if (!probe.is_zero()) continue;  // repeated roots; try another element
                // Lagrange idempotents in the corner algebra
                for (const auto& lam : roots) {
                    Vec eps = e;  // unit of the corner
                    Elem denom = K.one();
                    for (const auto& mu : roots) {
                        if (mu == lam) continue;
                        Vec shifted = ez;
                        for (std::size_t t = 0; t < nB; ++t)
                            shifted[t] = K.sub(shifted[t], K.mul(mu, e[t]));
                        eps = B.mult(eps, shifted);
                        denom = K.mul(denom, K.sub(lam, mu));
                    }
                    Elem dinv = K.inv(denom);
                    for (auto& t : eps) t = K.mul(t, dinv);
                    next.push_back(eps);
                }
                split_here = true;
                changed = true;
                break;
            }
            if (!split_here) {
                if (sp.dim() > 1)
                    raise(ErrorCode::UnsupportedAlgebra,
                          "semisimple quotient is not split over the ground field");
                next.push_back(e);
            }
        }
        idems = std::move(next);
    }

    // per block: verify matrix-algebra structure, find a primitive idempotent
    WedderburnData<F> data;
    std::size_t total = 0;
    for (const auto& e : idems) {
        Echelon<F> block(K, nB);
        for (std::size_t j = 0; j < nB; ++j) block.add(B.mult(e, B.mult(B.basis_vec(j), e)));
        const std::size_t bd = block.dim();
        std::size_t n_i = 0;
        while (n_i * n_i < bd) ++n_i;
        if (n_i * n_i != bd)
            raise(ErrorCode::UnsupportedAlgebra, "block dimension is not a perfect square");
        total += bd;

        Vec prim = e;
        if (n_i > 1) {
            auto block_basis = block.rows();
            // find an element generating a minimal left ideal (dimension n_i)
            auto ideal_dim = [&](const Vec& x) { return B.left_ideal(x).dim(); };
            Vec best = e;
            std::size_t best_dim = bd;
            auto consider = [&](const Vec& x) {
                std::size_t d = ideal_dim(x);
                if (d > 0 && d < best_dim) {
                    best = x;
                    best_dim = d;
                }
            };
            for (const auto& x : block_basis) consider(x);
            std::uint64_t state = seed;
            int guard = 0;
            while (best_dim > n_i && guard++ < 400) {
                // products inside the current minimal ideal, then random combos
                Echelon<F> li = B.left_ideal(best);
                for (const auto& y : li.rows()) {
                    consider(B.mult(y, best));
                    for (const auto& x : block_basis) consider(B.mult(e, B.mult(y, B.mult(x, e))));
                    if (best_dim == n_i) break;
                }
                if (best_dim == n_i) break;
                Vec rnd(nB, K.zero());
                for (const auto& x : block_basis) {
                    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                    Elem c = K.from_int(static_cast<std::int64_t>((state >> 33) % 7) - 3);
                    for (std::size_t t = 0; t < nB; ++t) rnd[t] = K.add(rnd[t], K.mul(c, x[t]));
                }
                consider(B.mult(e, B.mult(rnd, e)));
            }
            if (best_dim != n_i)
                raise(ErrorCode::UnsupportedAlgebra, "no minimal left ideal found in block");
            // solve for the idempotent generator of the minimal ideal: y*g = y on the ideal
            Echelon<F> li = B.left_ideal(best);
            auto li_basis = li.rows();
            Matrix<F> li_cols = detail::columns_from(K, li_basis, nB);
            Matrix<F> sys(K, nB * li_basis.size(), li_basis.size());
            std::vector<Elem> rhs(nB * li_basis.size(), K.zero());
            for (std::size_t yi = 0; yi < li_basis.size(); ++yi) {
                Matrix<F> ly = B.left_mult(li_basis[yi]);
                Matrix<F> img = ly * li_cols;  // columns: y * basis_g
                for (std::size_t r = 0; r < nB; ++r) {
                    for (std::size_t c = 0; c < li_basis.size(); ++c)
                        sys.at(yi * nB + r, c) = img.at(r, c);
                    rhs[yi * nB + r] = li_basis[yi][r];
                }
            }
            auto sol = solve(sys, rhs);
            if (!sol)
                raise(ErrorCode::UnsupportedAlgebra, "minimal left ideal has no idempotent generator");
            Vec g(nB, K.zero());
            for (std::size_t c = 0; c < li_basis.size(); ++c)
                for (std::size_t t = 0; t < nB; ++t)
                    g[t] = K.add(g[t], K.mul((*sol)[c], li_basis[c][t]));
            if (B.mult(g, g) != g)
                raise(ErrorCode::UnsupportedAlgebra, "idempotent solve failed in block");
            Echelon<F> corner(K, nB);
            for (std::size_t j = 0; j < nB; ++j)
                corner.add(B.mult(g, B.mult(B.basis_vec(j), g)));
            if (corner.dim() != 1)
                raise(ErrorCode::UnsupportedAlgebra, "block corner is not one-dimensional (division ring)");
            prim = g;
        }

        // lift to an idempotent of A: x <- 3x^2 - 2x^3 squares the error
        Vec x = B.lift(prim);
        bool lifted = false;
        for (int it = 0; it < 64; ++it) {
            Vec x2 = alg.mult(x, x);
            if (x2 == x) {
                lifted = true;
                break;
            }
            Vec x3 = alg.mult(x2, x);
            for (std::size_t t = 0; t < alg.dim; ++t) {
                Elem three = K.from_int(3), two = K.from_int(2);
                x[t] = K.sub(K.mul(three, x2[t]), K.mul(two, x3[t]));
            }
        }
        if (!lifted) raise_internal("idempotent lifting did not converge");
        if (B.reduce(x) != prim) raise_internal("idempotent lift changed its class");

        typename WedderburnData<F>::SimpleClass cls;
        cls.idempotent_in_a = x;
        cls.matrix_size = n_i;
        data.classes.push_back(std::move(cls));
    }
    if (total != nB)
        raise(ErrorCode::UnsupportedAlgebra, "blocks do not exhaust the semisimple quotient");
    return data;
}

/* ---- factories that need the radical machinery ---- */

template <class F>
std::shared_ptr<const BasisAlgebra<F>> make_group_algebra(
    const std::vector<std::vector<std::size_t>>& table, F field) {
    const std::size_t n = table.size();
    if (n == 0) raise(ErrorCode::NotAGroup, "empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n) raise(ErrorCode::NotAGroup, "multiplication table is not square");
        for (auto v : row)
            if (v >= n) raise(ErrorCode::NotAGroup, "table entry out of range");
    }
    std::size_t e = n;
    for (std::size_t cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            ok = table[cand][j] == j && table[j][cand] == j;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e == n) raise(ErrorCode::NotAGroup, "no identity element");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n; ++j) has_inverse = has_inverse || table[i][j] == e;
        if (!has_inverse) raise(ErrorCode::NotAGroup, "element without inverse");
    }
    if (n > 256) raise(ErrorCode::DimensionCap, "group order above 256");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    raise(ErrorCode::NotAGroup, "multiplication table is not associative");

    std::uint64_t p = field.spec().characteristic();
    if (p == 0 || n % p != 0)
        raise(ErrorCode::SemisimpleCase,
              "group algebra is semisimple: characteristic does not divide the group order");

    auto alg = std::make_shared<BasisAlgebra<F>>();
    alg->field = field;
    alg->kind = BasisAlgebra<F>::Kind::Group;
    alg->dim = n;
    alg->unit_index = e;
    alg->group_table = table;
    for (std::size_t i = 0; i < n; ++i) alg->basis_labels.push_back("g" + std::to_string(i));

    alg->radical_vectors = radical_candidate(*alg);
    Echelon<F> rad(field, n);
    for (const auto& v : alg->radical_vectors) rad.add(v);
    verify_nilpotent_ideal(*alg, rad);
    alg->finalize_radical();

    // all of G maps to 1: the augmentation
    typename BasisAlgebra<F>::Vec ones(n, field.one());
    alg->augmentation = {ones};

    if (alg->is_local()) {
        alg->proj_class_idempotents = {alg->unit_vec()};
    } else {
        WedderburnData<F> wd = wedderburn_structure(*alg, rad);
        for (auto& cls : wd.classes) alg->proj_class_idempotents.push_back(cls.idempotent_in_a);
    }
    return alg;
}

template <class F>
struct StructureConstantInput {
    std::size_t dim = 0;
    std::size_t unit_index = 0;
    std::vector<std::string> labels;
    // triples (i, j, k, coeff): b_i * b_j has coefficient coeff on b_k
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, typename F::Elem>> triples;
    std::vector<std::vector<typename F::Elem>> radical;  // optional spanning vectors
};

template <class F>
std::shared_ptr<const BasisAlgebra<F>> make_from_structure_constants(
    const StructureConstantInput<F>& in, F field) {
    if (in.dim == 0 || in.dim > 64)
        raise(ErrorCode::ConfigError, "structure-constant algebras support dimensions 1..64");
    if (in.unit_index >= in.dim) raise(ErrorCode::ConfigError, "unit index out of range");
    auto alg = std::make_shared<BasisAlgebra<F>>();
    alg->field = field;
    alg->kind = BasisAlgebra<F>::Kind::Table;
    alg->dim = in.dim;
    alg->unit_index = in.unit_index;
    alg->basis_labels = in.labels;
    if (alg->basis_labels.size() != in.dim) {
        alg->basis_labels.clear();
        for (std::size_t i = 0; i < in.dim; ++i) alg->basis_labels.push_back("b" + std::to_string(i));
    }
    alg->table.assign(in.dim, std::vector<typename BasisAlgebra<F>::SparseVec>(in.dim));
    for (const auto& [i, j, k, c] : in.triples) {
        if (i >= in.dim || j >= in.dim || k >= in.dim)
            raise(ErrorCode::ConfigError, "structure constant index out of range");
        if (!field.is_zero(c)) alg->table[i][j].push_back({k, c});
    }
    alg->verify_unit_and_associativity();

    if (!in.radical.empty()) {
        alg->radical_vectors = in.radical;
    } else {
        alg->radical_vectors = radical_candidate(*alg);
    }
    Echelon<F> rad(field, in.dim);
    for (const auto& v : alg->radical_vectors) rad.add(v);
    verify_nilpotent_ideal(*alg, rad);
    alg->finalize_radical();

    if (alg->is_local()) {
        alg->proj_class_idempotents = {alg->unit_vec()};
        // augmentation: the projection onto k*1 along J, checked multiplicative
        Matrix<F> change(field, in.dim, in.dim);
        change.set_col(0, alg->unit_vec());
        for (std::size_t c = 0; c < rad.dim(); ++c) change.set_col(c + 1, rad.rows()[c]);
        LinearSolver<F> ls(change);
        typename BasisAlgebra<F>::Vec row(in.dim, field.zero());
        for (std::size_t i = 0; i < in.dim; ++i) {
            auto sol = ls.solve(alg->basis_vec(i));
            if (!sol) raise_internal("local decomposition failed");
            row[i] = (*sol)[0];
        }
        alg->augmentation = {row};
    } else {
        WedderburnData<F> wd = wedderburn_structure(*alg, rad);
        for (auto& cls : wd.classes) alg->proj_class_idempotents.push_back(cls.idempotent_in_a);
    }
    return alg;
}

}  // namespace extvan

#endif
