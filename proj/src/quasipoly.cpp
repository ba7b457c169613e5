#include "extvan/quasipoly.hpp"

#include <algorithm>

#include "extvan/errors.hpp"
#include "extvan/fields.hpp"
#include "extvan/matrix.hpp"

namespace extvan {

bool QuasiPolynomial::all_zero() const {
    for (const auto& g : components)
        if (!g.is_zero()) return false;
    return true;
}

const char* verdict_name(Verdict v) {
    return v == Verdict::EventuallyZero ? "EventuallyZero" : "PeriodicNonvanishing";
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::QuasiPolynomial: return "quasi-polynomial";
        case Provenance::RegularElement: return "regular-element";
        case Provenance::Both: return "both";
    }
    return "?";
}

bool VanishingReport::residue_nonvanishing(std::int64_t n) const {
    std::int64_t j = ((n % period) + period) % period;
    return std::binary_search(nonvanishing_residues.begin(), nonvanishing_residues.end(), j);
}

QuasiPolynomial quasi_polynomial(const ReducedGF& red, std::int64_t d, const SeriesWindow& window) {
    if (d < 1) raise(ErrorCode::ConfigError, "period must be positive");
    QuasiPolynomial qp;
    qp.period = d;
    qp.components.assign(static_cast<std::size_t>(d), Poly());
    qp.valid_from = window.start + red.poly_part.degree() + 1;

    int mult = red.denominator.degree() > 0 ? max_root_multiplicity(red.denominator) : 0;
    if (mult == 0) {
        if (!red.numerator.is_zero()) raise_internal("constant denominator with nonzero numerator");
        return qp;  // pure polynomial part: every component is zero
    }

    RationalField Q;
    for (std::int64_t j = 0; j < d; ++j) {
        std::vector<std::int64_t> pts;
        for (std::int64_t n = std::max(qp.valid_from, window.start); n <= window.last_n(); ++n)
            if (((n % d) + d) % d == j) pts.push_back(n);
        if (static_cast<int>(pts.size()) < mult)
            raise(ErrorCode::InsufficientData,
                  "residue class " + std::to_string(j) + " mod " + std::to_string(d) + " has " +
                      std::to_string(pts.size()) + " usable points, needs " + std::to_string(mult));

        Matrix<RationalField> vand(Q, static_cast<std::size_t>(mult), static_cast<std::size_t>(mult));
        std::vector<Rat> rhs(static_cast<std::size_t>(mult));
        for (int r = 0; r < mult; ++r) {
            Rat x(pts[static_cast<std::size_t>(r)]);
            Rat pw(1);
            for (int c = 0; c < mult; ++c) {
                vand.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = pw;
                pw = pw * x;
            }
            rhs[static_cast<std::size_t>(r)] = Rat(window.at_n(pts[static_cast<std::size_t>(r)]));
        }
        auto sol = solve(vand, rhs);
        if (!sol) raise_internal("Vandermonde system unsolvable");
        Poly g(std::move(*sol));
        for (std::size_t k = static_cast<std::size_t>(mult); k < pts.size(); ++k) {
            std::int64_t n = pts[k];
            if (g.eval(Rat(n)) != Rat(window.at_n(n)))
                raise(ErrorCode::FitContradiction,
                      "interpolated component disagrees with the window at n = " + std::to_string(n));
        }
        qp.components[static_cast<std::size_t>(j)] = std::move(g);
    }
    return qp;
}

VanishingReport classify(const QuasiPolynomial& qp) {
    VanishingReport rep;
    rep.period = qp.period;
    rep.m0 = qp.valid_from;
    for (std::int64_t j = 0; j < qp.period; ++j) {
        const Poly& g = qp.components[static_cast<std::size_t>(j)];
        if (g.is_zero()) continue;
        rep.nonvanishing_residues.push_back(j);
        for (std::int64_t r : nonneg_integer_roots(g)) rep.m0 = std::max(rep.m0, r + 1);
    }
    rep.verdict = rep.nonvanishing_residues.empty() ? Verdict::EventuallyZero
                                                    : Verdict::PeriodicNonvanishing;
    rep.provenance = Provenance::QuasiPolynomial;

    rep.minimal_period = qp.period;
    for (std::int64_t cand = 1; cand < qp.period; ++cand) {
        if (qp.period % cand != 0) continue;
        bool ok = true;
        for (std::int64_t j = 0; ok && j < qp.period; ++j)
            ok = qp.components[static_cast<std::size_t>(j)] ==
                 qp.components[static_cast<std::size_t>((j + cand) % qp.period)];
        if (ok) {
            rep.minimal_period = cand;
            break;
        }
    }
    return rep;
}

VerifyResult verify_verdict(const VanishingReport& report, const SeriesWindow& holdout) {
    if (holdout.start < report.m0)
        raise(ErrorCode::InsufficientData, "holdout must start at or after m0 = " +
                                               std::to_string(report.m0));
    VerifyResult res;
    for (std::int64_t n = holdout.start; n <= holdout.last_n(); ++n) {
        bool expect_nonzero = report.residue_nonvanishing(n);
        bool actual_nonzero = holdout.at_n(n) != 0;
        if (expect_nonzero != actual_nonzero) {
            res.pass = false;
            res.counterexample_n = n;
            res.detail = "at n = " + std::to_string(n) + " expected " +
                         (expect_nonzero ? "nonzero" : "zero") + ", window has " +
                         std::to_string(holdout.at_n(n));
            return res;
        }
    }
    return res;
}

}  // namespace extvan
