#ifndef EXTVAN_VANISHING_HPP
#define EXTVAN_VANISHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "extvan/fields.hpp"
#include "extvan/graded_window.hpp"
#include "extvan/quasipoly.hpp"

namespace extvan {

/* Degrees of a generating set for the commutative even part of a graded
 * ring generated in the given degrees. In characteristic two the ring is
 * already commutative and the degrees pass through. Otherwise: even
 * degrees survive as given; products of distinct odd-degree pairs and
 * squares of odd-degree generators contribute their (deduplicated)
 * degrees. Squares of odd elements may vanish, so this is a superset and
 * can inflate the lcm; only the lcm is consumed downstream. */
std::vector<int> even_generator_degrees(const std::vector<int>& degrees,
                                        std::uint64_t characteristic);

template <class F>
struct RegularElementWitness {
    std::vector<typename F::Elem> coefficients;   // one per monomial
    std::vector<std::vector<int>> monomials;      // exponent vectors over the operators
    std::int64_t degree = 1;                      // d
    std::int64_t first_checked = 0;               // injectivity verified for n in
    std::int64_t last_checked = 0;                // [first_checked, last_checked]
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// all exponent vectors e with sum e_i * deg_i = d
inline void degree_d_monomials(const std::vector<std::int64_t>& degs, std::int64_t d,
                               std::vector<int>& cur, std::size_t i,
                               std::vector<std::vector<int>>& out) {
    if (i + 1 == degs.size()) {
        if (d % degs[i] == 0) {
            cur[i] = static_cast<int>(d / degs[i]);
            out.push_back(cur);
        }
        return;
    }
    for (std::int64_t e = 0; e * degs[i] <= d; ++e) {
        cur[i] = static_cast<int>(e);
        degree_d_monomials(degs, d - e * degs[i], cur, i + 1, out);
    }
    cur[i] = 0;
}

template <class F>
typename F::Elem random_elem(const F&, std::uint64_t bits);

template <>
inline PrimeField::Elem random_elem<PrimeField>(const PrimeField& f, std::uint64_t bits) {
    return bits % f.modulus();
}

template <>
inline RationalField::Elem random_elem<RationalField>(const RationalField&, std::uint64_t bits) {
    return Rat(static_cast<std::int64_t>(bits % 9) - 4);  // small box around zero
}

template <class F>
std::uint64_t candidate_space_size(const F& f, std::size_t n_monomials);

template <>
inline std::uint64_t candidate_space_size<PrimeField>(const PrimeField& f, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (total > 100000 / f.modulus()) return 1000000;  // saturate; only <=128 matters
        total *= f.modulus();
    }
    return total;
}

template <>
inline std::uint64_t candidate_space_size<RationalField>(const RationalField&, std::size_t) {
    return 1000000;  // infinite field: never enumerated exhaustively
}

}  // namespace detail

inline std::uint64_t space_base(const PrimeField& f) { return f.modulus(); }
inline std::uint64_t space_base(const RationalField&) { return 9; }

/* Searches for one element of degree d in the (commuting) operators whose
 * multiplication is injective on every checkable window piece. Candidates
 * are linear combinations of the degree-d operator monomials: exhaustive
 * when the coefficient space has at most 128 vectors, otherwise seeded
 * random trials. Returns the first witness found, or nullopt, which can
 * mean genuine non-injectivity, a too-small finite field, or a window
 * that starts before the Noetherian tail. */
template <class F>
std::optional<RegularElementWitness<F>> find_regular_element(const GradedWindow<F>& g,
                                                             std::int64_t d, int trials,
                                                             std::uint64_t seed = 0x76616e697368ULL) {
    if (g.operators.empty())
        raise(ErrorCode::ConfigError, "regular-element search needs at least one operator");
    std::vector<std::int64_t> degs;
    for (const auto& op : g.operators) degs.push_back(op.degree);
    std::vector<int> degs_int(degs.begin(), degs.end());
    if (d != lcm_degrees(degs_int))
        raise(ErrorCode::ConfigError, "target degree must be the lcm of the operator degrees");
    if (g.n1 - g.n0 + 1 <= 2 * d)
        raise(ErrorCode::InsufficientData, "window too short for regular-element search");

    std::vector<std::vector<int>> monomials;
    std::vector<int> cur(degs.size(), 0);
    detail::degree_d_monomials(degs, d, cur, 0, monomials);
    if (monomials.empty()) raise_internal("no monomials of degree lcm");

    const F field = g.operators[0].mats.at(0).field();

    // matrix of one monomial starting at degree n (operators applied in index order)
    auto monomial_matrix = [&](const std::vector<int>& expo, std::int64_t n) {
        Matrix<F> m = Matrix<F>::identity(field, static_cast<std::size_t>(g.piece_dim(n)));
        std::int64_t cur_deg = n;
        for (std::size_t i = 0; i < expo.size(); ++i)
            for (int rep = 0; rep < expo[i]; ++rep) {
                m = g.op_matrix(i, cur_deg) * m;
                cur_deg += g.operators[i].degree;
            }
        return m;
    };

    const std::int64_t first = g.n0 + d, last = g.n1 - d;
    // precompute per-degree monomial matrices
    std::vector<std::vector<Matrix<F>>> mono_mats(static_cast<std::size_t>(last - first + 1));
    for (std::int64_t n = first; n <= last; ++n)
        for (const auto& e : monomials)
            mono_mats[static_cast<std::size_t>(n - first)].push_back(monomial_matrix(e, n));

    auto try_candidate = [&](const std::vector<typename F::Elem>& lambda)
        -> std::optional<RegularElementWitness<F>> {
        bool any_nonzero = false;
        for (const auto& l : lambda) any_nonzero = any_nonzero || !field.is_zero(l);
        if (!any_nonzero) return std::nullopt;
        for (std::int64_t n = first; n <= last; ++n) {
            std::size_t cols = static_cast<std::size_t>(g.piece_dim(n));
            if (cols == 0) continue;
            Matrix<F> mx(field, static_cast<std::size_t>(g.piece_dim(n + d)), cols);
            for (std::size_t w = 0; w < monomials.size(); ++w) {
                if (field.is_zero(lambda[w])) continue;
                mx = mx + mono_mats[static_cast<std::size_t>(n - first)][w].scaled(lambda[w]);
            }
            if (rank_of(mx) != cols) return std::nullopt;
        }
        RegularElementWitness<F> wit;
        wit.coefficients = lambda;
        wit.monomials = monomials;
        wit.degree = d;
        wit.first_checked = first;
        wit.last_checked = last;
        return wit;
    };

    std::uint64_t space = detail::candidate_space_size(field, monomials.size());
    if (space <= 128) {
        for (std::uint64_t idx = 1; idx < space; ++idx) {
            std::uint64_t rem = idx;
            std::vector<typename F::Elem> lambda(monomials.size(), field.zero());
            for (std::size_t w = 0; w < monomials.size(); ++w) {
                lambda[w] = field.from_int(static_cast<std::int64_t>(rem % space_base(field)));
                rem /= space_base(field);
            }
            if (auto wit = try_candidate(lambda)) return wit;
        }
        return std::nullopt;
    }
    for (int t = 0; t < trials; ++t) {
        std::vector<typename F::Elem> lambda(monomials.size(), field.zero());
        for (std::size_t w = 0; w < monomials.size(); ++w)
            lambda[w] = detail::random_elem(field, detail::splitmix64(
                                                       seed + 0x10001ULL * static_cast<std::uint64_t>(t) + w));
        if (auto wit = try_candidate(lambda)) return wit;
    }
    return std::nullopt;
}

/* Everything the analysis pipeline produces for one dimension window. */
struct AnalysisResult {
    std::vector<int> acting_degrees;  // as supplied
    std::vector<int> even_degrees;    // after the even-part pass
    RationalGF gf;
    ReducedGF reduced;
    QuasiPolynomial qp;
    VanishingReport report;
};

/* The full quasi-polynomial branch: even-part degrees, d = lcm, fit,
 * reduce, interpolate, classify. Throws
 * NoetherianHypothesisViolatedOnWindow when the window does not fit the
 * denominator (guard coefficients fail to vanish). */
AnalysisResult analyze_series(const SeriesWindow& dims, const std::vector<int>& acting_degrees,
                              std::uint64_t characteristic, int guard = 8);

/* Branch-2 cross-check: a verified injectivity witness propagates
 * nonvanishing along each residue class it can reach. Upgrades the
 * report's provenance to `both` when every nonvanishing residue is backed
 * by a nonzero certified piece. */
template <class F>
void upgrade_provenance(AnalysisResult& res, const GradedWindow<F>& win,
                        const RegularElementWitness<F>& wit) {
    if (res.report.verdict != Verdict::PeriodicNonvanishing) return;
    for (std::int64_t j : res.report.nonvanishing_residues) {
        bool backed = false;
        for (std::int64_t n = std::max(res.report.m0, wit.first_checked); n <= wit.last_checked; ++n) {
            if (((n % res.report.period) + res.report.period) % res.report.period != j) continue;
            if (win.piece_dim(n) > 0) {
                backed = true;
                break;
            }
        }
        if (!backed) return;
    }
    res.report.provenance = Provenance::Both;
}

}  // namespace extvan

#endif
