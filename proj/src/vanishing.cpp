#include "extvan/vanishing.hpp"

#include <algorithm>
#include <set>

namespace extvan {

std::vector<int> even_generator_degrees(const std::vector<int>& degrees,
                                        std::uint64_t characteristic) {
    if (degrees.empty()) raise(ErrorCode::EmptyDegrees, "no generator degrees given");
    for (int d : degrees)
        if (d < 1) raise(ErrorCode::ConfigError, "generator degrees must be positive");
    if (characteristic == 2) return degrees;

    std::vector<int> out;
    std::vector<int> odd;
    for (int d : degrees) {
        if (d % 2 == 0)
            out.push_back(d);
        else
            odd.push_back(d);
    }
    std::set<int> pair_sums, squares;
    for (std::size_t i = 0; i < odd.size(); ++i) {
        squares.insert(2 * odd[i]);
        for (std::size_t j = i + 1; j < odd.size(); ++j) pair_sums.insert(odd[i] + odd[j]);
    }
    out.insert(out.end(), pair_sums.begin(), pair_sums.end());
    out.insert(out.end(), squares.begin(), squares.end());
    std::sort(out.begin(), out.end());
    if (out.empty())
        raise(ErrorCode::ConfigError,
              "no even-degree generators derivable from the given degrees");
    return out;
}

AnalysisResult analyze_series(const SeriesWindow& dims, const std::vector<int>& acting_degrees,
                              std::uint64_t characteristic, int guard) {
    if (!dims.all_nonnegative())
        raise(ErrorCode::ConfigError, "dimension window has negative entries");

    AnalysisResult res;
    res.acting_degrees = acting_degrees;
    res.even_degrees = even_generator_degrees(acting_degrees, characteristic);
    std::int64_t d = lcm_degrees(res.even_degrees);

    if (dims.all_zero()) {
        // nothing to fit; the zero module vanishes from the window start on
        res.gf = RationalGF{Poly(), res.even_degrees};
        res.reduced = ReducedGF{Poly(), Poly(), Poly::constant(Rat(1))};
        res.qp.period = d;
        res.qp.components.assign(static_cast<std::size_t>(d), Poly());
        res.qp.valid_from = dims.start;
        res.report = classify(res.qp);
        res.report.note = "all-zero window; fit bypassed";
        return res;
    }

    auto gf = fit_numerator(dims, res.even_degrees, guard);
    if (!gf)
        raise(ErrorCode::NoetherianHypothesisViolatedOnWindow,
              "window is not a rational series with denominator degrees of the acting ring "
              "(trailing guard coefficients do not vanish)");
    res.gf = std::move(*gf);
    res.reduced = reduce_gf(res.gf);
    res.qp = quasi_polynomial(res.reduced, d, dims);
    res.report = classify(res.qp);
    if (characteristic != 2) {
        bool any_odd = false;
        for (int deg : acting_degrees) any_odd = any_odd || (deg % 2 != 0);
        if (any_odd)
            res.report.note =
                "even-part degrees include squares of odd generators; d may be inflated";
    }
    return res;
}

}  // namespace extvan
