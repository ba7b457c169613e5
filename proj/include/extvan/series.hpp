#ifndef EXTVAN_SERIES_HPP
#define EXTVAN_SERIES_HPP

#include <cstdint>
#include <vector>

#include "extvan/poly.hpp"

namespace extvan {

/* A finite run of power-series coefficients: terms[i] is the coefficient
 * of z^(start+i). Dimension windows are nonnegative; the generic series
 * machinery also carries signed intermediates, so the sign constraint is
 * checked by consumers that mean "dimensions". */
struct SeriesWindow {
    std::int64_t start = 0;
    std::vector<std::int64_t> terms;

    std::int64_t length() const { return static_cast<std::int64_t>(terms.size()); }
    std::int64_t last_n() const { return start + length() - 1; }
    std::int64_t at_n(std::int64_t n) const { return terms[static_cast<std::size_t>(n - start)]; }
    bool all_zero() const;
    bool all_nonnegative() const;

    SeriesWindow suffix_from(std::int64_t n) const;
    SeriesWindow prefix_len(std::int64_t len) const;
    bool operator==(const SeriesWindow& o) const { return start == o.start && terms == o.terms; }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/* First n_terms coefficients of numerator / prod_i (1 - z^{d_i}), by the
 * linear recurrence the denominator defines. This is the brute-force
 * oracle every fitting operation is checked against. */
SeriesWindow series_expand(const Poly& numerator, const std::vector<int>& denominator_degrees,
                           std::int64_t n_terms);

}  // namespace extvan

#endif
