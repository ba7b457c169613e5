#ifndef EXTVAN_GENFUN_HPP
#define EXTVAN_GENFUN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "extvan/poly.hpp"
#include "extvan/series.hpp"

namespace extvan {

std::int64_t lcm_degrees(const std::vector<int>& degrees);

/* numerator / prod_i (1 - z^{d_i}), numerator with integer coefficients. */
struct RationalGF {
    Poly numerator;
    std::vector<int> denominator_degrees;

    Poly denominator_poly() const;
};

/* u(z) + p(z)/q(z) with deg p < deg q, gcd(p, q) = 1, q(0) = 1 and q an
 * exact divisor of the expanded denominator, so all roots of q are roots
 * of unity of order dividing lcm(d_i). */
struct ReducedGF {
    Poly poly_part;    // u
    Poly numerator;    // p
    Poly denominator;  // q
};

/* Recover the numerator from a coefficient window by multiplying through
 * by the denominator. The product must die out: its last `guard`
 * in-window coefficients are required to vanish, otherwise the window is
 * not (visibly) a rational series with this denominator and the result is
 * nullopt. The fit works in window-local exponents; callers track the
 * window's global start. */
std::optional<RationalGF> fit_numerator(const SeriesWindow& window, const std::vector<int>& degrees,
                                        int guard = 8);

ReducedGF reduce_gf(const RationalGF& gf);

}  // namespace extvan

#endif
