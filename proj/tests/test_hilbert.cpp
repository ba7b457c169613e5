#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extvan/genfun.hpp"
#include "extvan/quasipoly.hpp"
#include "extvan/vanishing.hpp"

using namespace extvan;

namespace {

SeriesWindow window_of(std::vector<std::int64_t> terms, std::int64_t start = 0) {
    SeriesWindow w;
    w.start = start;
    w.terms = std::move(terms);
    return w;
}

}  // namespace

TEST_CASE("lcm_degrees") {
    CHECK(lcm_degrees({1, 2, 3}) == 6);
    CHECK(lcm_degrees({1, 2, 3, 4, 5, 6, 7}) == 420);
    CHECK(lcm_degrees({2, 2}) == 2);
    CHECK_THROWS_AS(lcm_degrees({}), Error);
}

TEST_CASE("fit_numerator frozen examples") {
    auto gf = fit_numerator(window_of(std::vector<std::int64_t>(20, 1)), {2});
    REQUIRE(gf.has_value());
    CHECK(gf->numerator == Poly::from_int_coeffs({1, 1}));

    std::vector<std::int64_t> ramp;
    for (int i = 1; i <= 21; ++i) ramp.push_back(i);
    auto gf2 = fit_numerator(window_of(ramp), {2, 2});
    REQUIRE(gf2.has_value());
    CHECK(gf2->numerator == Poly::from_int_coeffs({1, 2, 1}));

    std::vector<std::int64_t> period3;
    for (int i = 0; i < 20; ++i) period3.push_back(i % 3 == 0 ? 1 : 0);
    CHECK(!fit_numerator(window_of(period3), {2}).has_value());
}

TEST_CASE("fit_numerator preconditions") {
    CHECK_THROWS_AS(fit_numerator(window_of({1, 1, 1}), {2}), Error);        // too short
    CHECK_THROWS_AS(fit_numerator(window_of(std::vector<std::int64_t>(20, 1)), {}), Error);
    CHECK_THROWS_AS(fit_numerator(window_of(std::vector<std::int64_t>(20, 1)), {2}, 2), Error);
}

TEST_CASE("reduce_gf frozen examples") {
    ReducedGF r = reduce_gf(RationalGF{Poly::from_int_coeffs({1, 1}), {2}});
    CHECK(r.poly_part.is_zero());
    CHECK(r.numerator == Poly::from_int_coeffs({1}));
    CHECK(r.denominator == Poly::from_int_coeffs({1, -1}));

    ReducedGF r2 = reduce_gf(RationalGF{Poly::from_int_coeffs({1, 0, -1}), {2}});
    CHECK(r2.poly_part == Poly::from_int_coeffs({1}));
    CHECK(r2.numerator.is_zero());
    CHECK(r2.denominator == Poly::from_int_coeffs({1}));

    ReducedGF r3 = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {1, 2}});
    CHECK(r3.poly_part.is_zero());
    CHECK(r3.numerator == Poly::from_int_coeffs({1}));
    CHECK(r3.denominator == Poly::one_minus_power(1) * Poly::one_minus_power(2));
}

TEST_CASE("reduce_gf invariants on random inputs") {
    std::mt19937_64 rng(555);
    for (int it = 0; it < 100; ++it) {
        std::vector<std::int64_t> num(static_cast<std::size_t>(rng() % 9) + 1);
        for (auto& x : num) x = static_cast<std::int64_t>(rng() % 7) - 3;
        Poly n = Poly::from_int_coeffs(num);
        if (n.is_zero()) continue;
        std::vector<int> degs;
        for (std::size_t i = 0, k = rng() % 3 + 1; i < k; ++i)
            degs.push_back(static_cast<int>(rng() % 4) + 1);
        RationalGF gf{n, degs};
        ReducedGF red = reduce_gf(gf);
        Poly den = gf.denominator_poly();
        // u*D + p*(D/q) = numerator, i.e. the identity n/D = u + p/q
        Poly cofactor = poly_exact_div(den, red.denominator);
        CHECK(red.poly_part * den + red.numerator * cofactor == n);
        if (!red.numerator.is_zero())
            CHECK(poly_gcd(red.numerator, red.denominator) == Poly::from_int_coeffs({1}));
        CHECK(red.denominator.coeff(0) == Rat(1));
        CHECK(red.numerator.degree() < red.denominator.degree() + (red.numerator.is_zero() ? 1 : 0));
    }
}

TEST_CASE("quasi_polynomial frozen examples") {
    // 1/(1-z) read with period 2: both components constant 1
    auto w = series_expand(Poly::from_int_coeffs({1}), {1}, 20);
    ReducedGF red = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {1}});
    QuasiPolynomial qp = quasi_polynomial(red, 2, w);
    CHECK(qp.components[0] == Poly::from_int_coeffs({1}));
    CHECK(qp.components[1] == Poly::from_int_coeffs({1}));
    CHECK(qp.valid_from == 0);

    // 1/(1-z^2): even component 1, odd component 0
    auto w2 = series_expand(Poly::from_int_coeffs({1}), {2}, 20);
    ReducedGF red2 = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {2}});
    QuasiPolynomial qp2 = quasi_polynomial(red2, 2, w2);
    CHECK(qp2.components[0] == Poly::from_int_coeffs({1}));
    CHECK(qp2.components[1].is_zero());

    // 1/(1-z)^2: both components n+1
    auto w3 = series_expand(Poly::from_int_coeffs({1}), {1, 1}, 20);
    ReducedGF red3 = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {1, 1}});
    QuasiPolynomial qp3 = quasi_polynomial(red3, 2, w3);
    CHECK(qp3.components[0] == Poly::from_int_coeffs({1, 1}));
    CHECK(qp3.components[1] == Poly::from_int_coeffs({1, 1}));
}

TEST_CASE("quasi_polynomial validation detects inconsistent windows") {
    auto w = series_expand(Poly::from_int_coeffs({1}), {1}, 20);
    w.terms[17] = 5;  // corrupt one validation point
    ReducedGF red = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {1}});
    CHECK_THROWS_AS(quasi_polynomial(red, 1, w), Error);
}

TEST_CASE("classify frozen examples") {
    QuasiPolynomial zero;
    zero.period = 2;
    zero.components = {Poly(), Poly()};
    zero.valid_from = 3;
    VanishingReport r = classify(zero);
    CHECK(r.verdict == Verdict::EventuallyZero);
    CHECK(r.nonvanishing_residues.empty());
    CHECK(r.m0 == 3);

    QuasiPolynomial evens;
    evens.period = 2;
    evens.components = {Poly::from_int_coeffs({1}), Poly()};
    evens.valid_from = 0;
    VanishingReport r2 = classify(evens);
    CHECK(r2.verdict == Verdict::PeriodicNonvanishing);
    CHECK(r2.nonvanishing_residues == std::vector<std::int64_t>{0});
    CHECK(r2.m0 == 0);

    QuasiPolynomial synth;
    synth.period = 1;
    synth.components = {Poly::from_int_coeffs({-5, 1})};  // n - 5
    synth.valid_from = 0;
    VanishingReport r3 = classify(synth);
    CHECK(r3.nonvanishing_residues == std::vector<std::int64_t>{0});
    CHECK(r3.m0 == 6);
}

TEST_CASE("verify_verdict frozen examples") {
    VanishingReport rep;
    rep.verdict = Verdict::PeriodicNonvanishing;
    rep.period = 2;
    rep.nonvanishing_residues = {0};
    rep.m0 = 0;
    CHECK(verify_verdict(rep, window_of({1, 0, 1, 0, 1})).pass);
    auto bad = verify_verdict(rep, window_of({1, 0, 0, 0}));
    CHECK(!bad.pass);
    CHECK(bad.counterexample_n == 2);

    VanishingReport ez;
    ez.verdict = Verdict::EventuallyZero;
    ez.period = 1;
    ez.m0 = 3;
    CHECK(verify_verdict(ez, window_of({0, 0, 0, 0}, 3)).pass);
    CHECK_THROWS_AS(verify_verdict(ez, window_of({0}, 1)), Error);
}

TEST_CASE("minimal period is reported separately") {
    auto w = series_expand(Poly::from_int_coeffs({1}), {1}, 24);
    ReducedGF red = reduce_gf(RationalGF{Poly::from_int_coeffs({1}), {1}});
    QuasiPolynomial qp = quasi_polynomial(red, 6, w);
    VanishingReport rep = classify(qp);
    CHECK(rep.period == 6);
    CHECK(rep.minimal_period == 1);
}

namespace {

struct RandomGF {
    RationalGF gf;
    SeriesWindow expansion;
};

// seeded generator of rational series with nonnegative expansions
std::vector<RandomGF> random_nonneg_gfs(std::size_t count, std::int64_t terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RandomGF> out;
    int attempts = 0;
    while (out.size() < count && attempts < 200000) {
        ++attempts;
        std::vector<std::int64_t> num(static_cast<std::size_t>(rng() % 9) + 1);
        for (auto& x : num) x = static_cast<std::int64_t>(rng() % 7) - 3;
        Poly n = Poly::from_int_coeffs(num);
        if (n.is_zero()) continue;
        std::vector<int> degs;
        for (std::size_t i = 0, k = rng() % 3 + 1; i < k; ++i)
            degs.push_back(static_cast<int>(rng() % 4) + 1);
        SeriesWindow w = series_expand(n, degs, terms);
        if (!w.all_nonnegative()) continue;
        out.push_back(RandomGF{RationalGF{n, degs}, w});
    }
    return out;
}

}  // namespace

TEST_CASE("round trip: fit recovers the generating function and predicts the tail") {
    auto cases = random_nonneg_gfs(120, 60, 20240601);
    REQUIRE(cases.size() == 120);
    for (const auto& rc : cases) {
        SeriesWindow head = rc.expansion.prefix_len(40);
        auto fitted = fit_numerator(head, rc.gf.denominator_degrees);
        REQUIRE(fitted.has_value());
        CHECK(fitted->numerator == rc.gf.numerator);

        std::int64_t d = lcm_degrees(rc.gf.denominator_degrees);
        QuasiPolynomial qp = quasi_polynomial(reduce_gf(*fitted), d, head);
        VanishingReport rep = classify(qp);
        // exact prediction of the held-out tail, values and zero pattern
        for (std::int64_t n = 40; n < 60; ++n) {
            CAPTURE(n);
            CHECK(qp.eval(n) == Rat(rc.expansion.at_n(n)));
        }
        if (rep.m0 <= 40) {
            auto vr = verify_verdict(rep, rc.expansion.suffix_from(std::max<std::int64_t>(40, rep.m0)));
            CHECK(vr.pass);
        }
    }
}

TEST_CASE("holdout prediction from two thirds of a window") {
    auto cases = random_nonneg_gfs(40, 60, 77777);
    for (const auto& rc : cases) {
        SeriesWindow head = rc.expansion.prefix_len(40);
        auto fitted = fit_numerator(head, rc.gf.denominator_degrees, 6);
        if (!fitted) continue;  // numerator too long for the shorter guard
        std::int64_t d = lcm_degrees(rc.gf.denominator_degrees);
        QuasiPolynomial qp;
        try {
            qp = quasi_polynomial(reduce_gf(*fitted), d, head);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InsufficientData) continue;
            throw;
        }
        for (std::int64_t n = 40; n < 60; ++n)
            CHECK((qp.eval(n) == Rat(rc.expansion.at_n(n))));
    }
}

TEST_CASE("even_generator_degrees") {
    CHECK(even_generator_degrees({1, 2, 3}, 2) == std::vector<int>{1, 2, 3});
    CHECK(even_generator_degrees({2, 2}, 3) == std::vector<int>{2, 2});
    CHECK(even_generator_degrees({1, 1}, 3) == std::vector<int>{2, 2});
    CHECK(even_generator_degrees({1, 2}, 5) == std::vector<int>{2, 2});
    CHECK(even_generator_degrees({3}, 5) == std::vector<int>{6});
    CHECK_THROWS_AS(even_generator_degrees({}, 2), Error);
}

TEST_CASE("analyze_series frozen examples") {
    AnalysisResult all_ones = analyze_series(series_expand(Poly::from_int_coeffs({1}), {1}, 40), {2}, 2);
    CHECK(all_ones.report.verdict == Verdict::PeriodicNonvanishing);
    CHECK(all_ones.report.period == 2);
    CHECK(all_ones.report.nonvanishing_residues == std::vector<std::int64_t>{0, 1});

    std::vector<std::int64_t> proj(30, 0);
    proj[0] = 1;
    AnalysisResult pr = analyze_series(window_of(proj), {2}, 2);
    CHECK(pr.report.verdict == Verdict::EventuallyZero);
    CHECK(pr.report.m0 == 1);

    std::vector<std::int64_t> ramp;
    for (int i = 1; i <= 40; ++i) ramp.push_back(i);
    AnalysisResult rm = analyze_series(window_of(ramp), {1, 1}, 2);
    CHECK(rm.report.period == 1);
    CHECK(rm.report.nonvanishing_residues == std::vector<std::int64_t>{0});
}

TEST_CASE("analyze_series rejects non-rational windows") {
    std::vector<std::int64_t> fib{1, 1};
    while (fib.size() < 45) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (std::vector<int> degs : {std::vector<int>{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}) {
        CHECK_THROWS_WITH_AS(analyze_series(window_of(fib), degs, 2),
                             doctest::Contains("NoetherianHypothesisViolatedOnWindow"), Error);
    }
}

TEST_CASE("analyze_series all-zero bypass") {
    AnalysisResult res = analyze_series(window_of(std::vector<std::int64_t>(12, 0), 4), {2}, 2);
    CHECK(res.report.verdict == Verdict::EventuallyZero);
    CHECK(res.report.m0 == 4);
}

TEST_CASE("analyze verdict is stable under discarding a prefix") {
    auto full = series_expand(Poly::from_int_coeffs({1, 0, 1}), {1, 2}, 50);
    AnalysisResult base = analyze_series(full, {1, 2}, 2);
    for (std::int64_t shift = 1; shift <= 5; ++shift) {
        AnalysisResult sh = analyze_series(full.suffix_from(shift), {1, 2}, 2);
        CHECK(sh.report.verdict == base.report.verdict);
        CHECK(sh.report.period == base.report.period);
        CHECK(sh.report.nonvanishing_residues == base.report.nonvanishing_residues);
    }
}

TEST_CASE("scaling a window by a positive constant does not change the report") {
    auto w = series_expand(Poly::from_int_coeffs({1, 1}), {2, 3}, 48);
    REQUIRE(w.all_nonnegative());
    AnalysisResult base = analyze_series(w, {2, 3}, 2);
    SeriesWindow scaled = w;
    for (auto& t : scaled.terms) t *= 3;
    AnalysisResult sc = analyze_series(scaled, {2, 3}, 2);
    CHECK(sc.report.verdict == base.report.verdict);
    CHECK(sc.report.period == base.report.period);
    CHECK(sc.report.nonvanishing_residues == base.report.nonvanishing_residues);
    CHECK(sc.report.m0 == base.report.m0);
}
