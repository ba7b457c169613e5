#ifndef EXTVAN_MATRIX_HPP
#define EXTVAN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extvan/errors.hpp"

namespace extvan {

/* Dense matrix over an exact field F (PrimeField or RationalField).
 * Row-major. All reductions are classical Gauss-Jordan; the instances this
 * project meets are a few hundred rows at most. */
template <class F>
class Matrix {
   public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Elem> col(std::size_t c) const {
        std::vector<Elem> v(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    void set_col(std::size_t c, const std::vector<Elem>& v) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) raise_internal("matrix product shape mismatch");
        Matrix p(field_, rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& x = at(r, k);
                if (field_.is_zero(x)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c)
                    p.at(r, c) = field_.add(p.at(r, c), field_.mul(x, o.at(k, c)));
            }
        return p;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (v.size() != cols_) raise_internal("matrix apply shape mismatch");
        std::vector<Elem> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) {
            Elem s = field_.zero();
            for (std::size_t c = 0; c < cols_; ++c)
                if (!field_.is_zero(at(r, c))) s = field_.add(s, field_.mul(at(r, c), v[c]));
            out[r] = s;
        }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) raise_internal("matrix sum shape mismatch");
        Matrix s(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = field_.add(a_[i], o.a_[i]);
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) raise_internal("matrix diff shape mismatch");
        Matrix s(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = field_.sub(a_[i], o.a_[i]);
        return s;
    }

    Matrix scaled(const Elem& x) const {
        Matrix s(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = field_.mul(a_[i], x);
        return s;
    }

    // In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pr = r;
            while (pr < rows_ && field_.is_zero(at(pr, c))) ++pr;
            if (pr == rows_) continue;
            if (pr != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            Elem piv_inv = field_.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), piv_inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_.is_zero(at(i, c))) continue;
                Elem f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r == 0 ? "[" : " ";
            for (std::size_t c = 0; c < cols_; ++c) {
                s += field_.to_string(at(r, c));
                if (c + 1 < cols_) s += " ";
            }
            s += r + 1 == rows_ ? "]" : "\n";
        }
        return s;
    }

   private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    Matrix<F> kernel;  // columns form a basis of the null space
};

/* Rank and a canonical kernel basis (from the RREF free-column
 * parametrization, so independent of input row order). */
template <class F>
RankKernel<F> rank_kernel(const Matrix<F>& m) {
    const F& K = m.field();
    Matrix<F> r = m;
    std::vector<std::size_t> pivots = r.rref();
    RankKernel<F> out;
    out.rank = pivots.size();
    std::size_t nfree = m.cols() - pivots.size();
    out.kernel = Matrix<F>(K, m.cols(), nfree);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        out.kernel.at(c, k) = K.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.kernel.at(pivots[i], k) = K.neg(r.at(i, c));
        ++k;
    }
    return out;
}

template <class F>
std::size_t rank_of(const Matrix<F>& m) {
    Matrix<F> r = m;
    return r.rref().size();
}

/* One-shot factorization of A for repeated solves of A x = b.
 * Keeps T with T A = R (R reduced echelon), so each solve is a
 * multiply plus a consistency scan. */
template <class F>
class LinearSolver {
   public:
    using Elem = typename F::Elem;

    explicit LinearSolver(const Matrix<F>& a)
        : field_(a.field()), cols_(a.cols()), aug_(a.field(), a.rows(), a.cols() + a.rows()) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) aug_.at(r, c) = a.at(r, c);
            aug_.at(r, a.cols() + r) = field_.one();
        }
        // rref of the left block only
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < aug_.rows(); ++c) {
            std::size_t pr = r;
            while (pr < aug_.rows() && field_.is_zero(aug_.at(pr, c))) ++pr;
            if (pr == aug_.rows()) continue;
            if (pr != r)
                for (std::size_t j = 0; j < aug_.cols(); ++j) std::swap(aug_.at(pr, j), aug_.at(r, j));
            Elem piv_inv = field_.inv(aug_.at(r, c));
            for (std::size_t j = 0; j < aug_.cols(); ++j)
                aug_.at(r, j) = field_.mul(aug_.at(r, j), piv_inv);
            for (std::size_t i = 0; i < aug_.rows(); ++i) {
                if (i == r || field_.is_zero(aug_.at(i, c))) continue;
                Elem f = aug_.at(i, c);
                for (std::size_t j = 0; j < aug_.cols(); ++j)
                    aug_.at(i, j) = field_.sub(aug_.at(i, j), field_.mul(f, aug_.at(r, j)));
            }
            pivots_.push_back(c);
            ++r;
        }
    }

    std::size_t rank() const { return pivots_.size(); }

    // Least-structure solution (free variables zero), or nullopt if inconsistent.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const {
        std::vector<Elem> tb(aug_.rows(), field_.zero());
        for (std::size_t r = 0; r < aug_.rows(); ++r) {
            Elem s = field_.zero();
            for (std::size_t c = 0; c < b.size(); ++c) {
                const Elem& t = aug_.at(r, cols_ + c);
                if (!field_.is_zero(t)) s = field_.add(s, field_.mul(t, b[c]));
            }
            tb[r] = s;
        }
        for (std::size_t r = pivots_.size(); r < aug_.rows(); ++r)
            if (!field_.is_zero(tb[r])) return std::nullopt;
        std::vector<Elem> x(cols_, field_.zero());
        for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = tb[i];
        return x;
    }

   private:
    F field_;
    std::size_t cols_;
    Matrix<F> aug_;
    std::vector<std::size_t> pivots_;
};

template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
    return LinearSolver<F>(a).solve(b);
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) raise_internal("inverse of a non-square matrix");
    const F& K = m.field();
    LinearSolver<F> ls(m);
    if (ls.rank() != m.rows()) return std::nullopt;
    Matrix<F> inv(K, m.rows(), m.rows());
    for (std::size_t c = 0; c < m.rows(); ++c) {
        std::vector<typename F::Elem> e(m.rows(), K.zero());
        e[c] = K.one();
        auto x = ls.solve(e);
        if (!x) return std::nullopt;
        inv.set_col(c, *x);
    }
    return inv;
}

/* Incrementally maintained subspace in reduced echelon form.
 * Vectors are stored as rows. */
template <class F>
class Echelon {
   public:
    using Elem = typename F::Elem;

    explicit Echelon(F field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    // Residue of v modulo the subspace (zero iff contained).
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem& c = v[pivot_[i]];
            if (field_.is_zero(c)) continue;
            Elem f = c;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, rows_[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<Elem>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    // Adds v if independent; returns true when the dimension grew.
    bool add(const std::vector<Elem>& v) {
        std::vector<Elem> r = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && field_.is_zero(r[p])) ++p;
        if (p == ambient_) return false;
        Elem inv = field_.inv(r[p]);
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = field_.mul(r[j], inv);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem f = rows_[i][p];
            if (field_.is_zero(f)) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, r[j]));
        }
        std::size_t pos = 0;
        while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        pivot_.insert(pivot_.begin() + pos, p);
        return true;
    }

    void add_all(const Matrix<F>& cols) {
        for (std::size_t c = 0; c < cols.cols(); ++c) add(cols.col(c));
    }

    // Basis as matrix columns (echelonized, canonical for a given insertion set).
    Matrix<F> basis_cols() const {
        Matrix<F> b(field_, ambient_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) b.at(j, i) = rows_[i][j];
        return b;
    }

    const std::vector<std::vector<Elem>>& rows() const { return rows_; }

   private:
    F field_;
    std::size_t ambient_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivot_;
};

}  // namespace extvan

#endif
