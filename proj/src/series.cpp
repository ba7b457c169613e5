#include "extvan/series.hpp"

#include "extvan/errors.hpp"

namespace extvan {

bool SeriesWindow::all_zero() const {
    for (auto t : terms)
        if (t != 0) return false;
    return true;
}

bool SeriesWindow::all_nonnegative() const {
    for (auto t : terms)
        if (t < 0) return false;
    return true;
}

SeriesWindow SeriesWindow::suffix_from(std::int64_t n) const {
    if (n < start || n > start + length()) raise_internal("suffix_from out of range");
    SeriesWindow w;
    w.start = n;
    w.terms.assign(terms.begin() + static_cast<std::ptrdiff_t>(n - start), terms.end());
    return w;
}

SeriesWindow SeriesWindow::prefix_len(std::int64_t len) const {
    if (len < 0 || len > length()) raise_internal("prefix_len out of range");
    SeriesWindow w;
    w.start = start;
    w.terms.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(len));
    return w;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        raise(ErrorCode::OverflowGuard, "series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        raise(ErrorCode::OverflowGuard, "series coefficient overflow");
    return r;
}

SeriesWindow series_expand(const Poly& numerator, const std::vector<int>& denominator_degrees,
                           std::int64_t n_terms) {
    if (n_terms < 1) raise(ErrorCode::InsufficientData, "series_expand needs n_terms >= 1");
    if (!numerator.has_integer_coeffs())
        raise_internal("series_expand expects an integer numerator");
    Poly den = Poly::constant(Rat(1));
    for (int d : denominator_degrees) {
        if (d < 1) raise(ErrorCode::ConfigError, "denominator degrees must be positive");
        den = den * Poly::one_minus_power(d);
    }
    SeriesWindow out;
    out.start = 0;
    out.terms.assign(static_cast<std::size_t>(n_terms), 0);
    // den has constant term 1; s_n = g_n - sum_{k>=1} den_k * s_{n-k}
    for (std::int64_t n = 0; n < n_terms; ++n) {
        std::int64_t s = 0;
        Rat g = numerator.coeff(static_cast<int>(n));
        if (!g.is_zero()) {
            if (!g.num().fits_int64()) raise(ErrorCode::OverflowGuard, "numerator coefficient overflow");
            s = g.num().to_int64();
        }
        for (int k = 1; k <= den.degree() && k <= n; ++k) {
            Rat dk = den.coeff(k);
            if (dk.is_zero()) continue;
            std::int64_t d = dk.num().to_int64();
            s = checked_add(s, checked_mul(-d, out.terms[static_cast<std::size_t>(n - k)]));
        }
        out.terms[static_cast<std::size_t>(n)] = s;
    }
    return out;
}

}  // namespace extvan
