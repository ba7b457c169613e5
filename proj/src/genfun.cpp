#include "extvan/genfun.hpp"

#include <numeric>

#include "extvan/errors.hpp"

namespace extvan {

std::int64_t lcm_degrees(const std::vector<int>& degrees) {
    if (degrees.empty()) raise(ErrorCode::EmptyDegrees, "lcm of an empty degree list");
    std::int64_t l = 1;
    for (int d : degrees) {
        if (d < 1) raise(ErrorCode::ConfigError, "degrees must be positive");
        l = std::lcm(l, static_cast<std::int64_t>(d));
    }
    return l;
}

Poly RationalGF::denominator_poly() const {
    Poly den = Poly::constant(Rat(1));
    for (int d : denominator_degrees) den = den * Poly::one_minus_power(d);
    return den;
}

std::optional<RationalGF> fit_numerator(const SeriesWindow& window, const std::vector<int>& degrees,
                                        int guard) {
    if (degrees.empty()) raise(ErrorCode::EmptyDegrees, "fit_numerator needs denominator degrees");
    if (guard < 4) raise(ErrorCode::ConfigError, "guard must be at least 4");
    std::int64_t total = 0;
    for (int d : degrees) {
        if (d < 1) raise(ErrorCode::ConfigError, "degrees must be positive");
        total += d;
    }
    const std::int64_t len = window.length();
    if (len < total + guard)
        raise(ErrorCode::InsufficientData,
              "window of length " + std::to_string(len) + " too short for degree sum " +
                  std::to_string(total) + " with guard " + std::to_string(guard));

    RationalGF gf;
    gf.denominator_degrees = degrees;
    Poly den = gf.denominator_poly();

    // product = window * denominator, exact on in-window exponents
    std::vector<std::int64_t> prod(static_cast<std::size_t>(len), 0);
    for (std::int64_t i = 0; i < len; ++i) {
        std::int64_t s = 0;
        for (int k = 0; k <= den.degree() && k <= i; ++k) {
            Rat dk = den.coeff(k);
            if (dk.is_zero()) continue;
            s = checked_add(s, checked_mul(dk.num().to_int64(),
                                           window.terms[static_cast<std::size_t>(i - k)]));
        }
        prod[static_cast<std::size_t>(i)] = s;
    }
    for (std::int64_t i = len - guard; i < len; ++i)
        if (prod[static_cast<std::size_t>(i)] != 0) return std::nullopt;

    prod.resize(static_cast<std::size_t>(len - guard));
    gf.numerator = Poly::from_int_coeffs(prod);

    // round trip against the expansion oracle
    SeriesWindow check = series_expand(gf.numerator, degrees, len);
    if (check.terms != window.terms)
        raise_internal("fit_numerator round trip failed");
    return gf;
}

ReducedGF reduce_gf(const RationalGF& gf) {
    Poly den = gf.denominator_poly();
    PolyDivMod dm = poly_divmod(gf.numerator, den);
    ReducedGF red;
    red.poly_part = dm.quot;
    if (dm.rem.is_zero()) {
        red.numerator = Poly();
        red.denominator = Poly::constant(Rat(1));
    } else {
        Poly g = poly_gcd(dm.rem, den);
        // normalize the cancelled factor at z=0 so q keeps q(0)=1
        Rat g0 = g.coeff(0);
        if (g0.is_zero()) raise_internal("reduce_gf: gcd vanishes at 0");
        g = g.scaled(g0.inverse());
        red.numerator = poly_exact_div(dm.rem, g);
        red.denominator = poly_exact_div(den, g);
    }
    if (!red.poly_part.has_integer_coeffs() || !red.numerator.has_integer_coeffs() ||
        !red.denominator.has_integer_coeffs())
        raise_internal("reduce_gf: reduction left the integers");
    if (red.numerator.degree() >= red.denominator.degree() && !red.numerator.is_zero())
        raise_internal("reduce_gf: fraction not proper");
    return red;
}

}  // namespace extvan
