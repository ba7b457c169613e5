#ifndef EXTVAN_QUASIPOLY_HPP
#define EXTVAN_QUASIPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extvan/genfun.hpp"

namespace extvan {

/* Eventual description of a rational-series coefficient stream: one
 * polynomial per residue class mod `period`, valid from `valid_from` on.
 * Components are indexed by the global residue n mod period. */
struct QuasiPolynomial {
    std::int64_t period = 1;
    std::vector<Poly> components;
    std::int64_t valid_from = 0;

    const Poly& component(std::int64_t n) const {
        std::int64_t j = ((n % period) + period) % period;
        return components[static_cast<std::size_t>(j)];
    }
    Rat eval(std::int64_t n) const { return component(n).eval(Rat(n)); }
    bool all_zero() const;
};

/* Per-residue exact interpolation. d is the announced period (the lcm of
 * the acting generator degrees, fixed even when the reduced denominator
 * would allow less). The window must carry, in every residue class,
 * at least as many usable points as the maximal root multiplicity of the
 * reduced denominator; remaining points validate the fit. */
QuasiPolynomial quasi_polynomial(const ReducedGF& red, std::int64_t d, const SeriesWindow& window);

enum class Verdict { EventuallyZero, PeriodicNonvanishing };
enum class Provenance { QuasiPolynomial, RegularElement, Both };

const char* verdict_name(Verdict v);
const char* provenance_name(Provenance p);

struct VanishingReport {
    Verdict verdict = Verdict::EventuallyZero;
    std::int64_t period = 1;                          // d
    std::vector<std::int64_t> nonvanishing_residues;  // sorted, subset of 0..d-1
    std::int64_t m0 = 0;
    Provenance provenance = Provenance::QuasiPolynomial;
    std::int64_t minimal_period = 1;  // supplementary: least period of the components
    std::string note;

    bool residue_nonvanishing(std::int64_t n) const;
};

/* m0 is the least index >= valid_from beyond every nonnegative integer
 * root of every nonzero component; past it the zero pattern is exactly
 * the complement of nonvanishing_residues. Integer roots suffice because
 * the components take integer values at integer arguments. */
VanishingReport classify(const QuasiPolynomial& qp);

struct VerifyResult {
    bool pass = true;
    std::optional<std::int64_t> counterexample_n;
    std::string detail;
};

// Checks the holdout's zero pattern against the report. Holdout must start at or after m0.
VerifyResult verify_verdict(const VanishingReport& report, const SeriesWindow& holdout);

}  // namespace extvan

#endif
