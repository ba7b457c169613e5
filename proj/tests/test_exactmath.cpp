#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "extvan/bigint.hpp"
#include "extvan/fields.hpp"
#include "extvan/matrix.hpp"
#include "extvan/poly.hpp"
#include "extvan/rational.hpp"
#include "extvan/series.hpp"

using namespace extvan;

TEST_CASE("bigint arithmetic agrees with int64 on small operands") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 500; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(std::gcd(a, b)));
    }
}

TEST_CASE("bigint divmod round trip on large operands") {
    std::mt19937_64 rng(99);
    auto random_big = [&](int limbs) {
        BigInt v(1);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(static_cast<std::int64_t>(rng() % 1000000000 + 1)) +
                BigInt(static_cast<std::int64_t>(rng() % 1000000000));
        return rng() % 2 ? v : -v;
    };
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_big(4), b = random_big(2);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint decimal string round trip") {
    const char* values[] = {"0", "-1", "123456789012345678901234567890",
                            "-99999999999999999999999999"};
    for (auto s : values) CHECK(BigInt::from_string(s).to_string() == s);
}

TEST_CASE("bigint isqrt") {
    for (std::int64_t n : {0LL, 1LL, 2LL, 3LL, 4LL, 15LL, 16LL, 17LL, 1000000LL, 999999999999LL}) {
        BigInt s = BigInt::isqrt(BigInt(n));
        CHECK(s * s <= BigInt(n));
        CHECK((s + BigInt(1)) * (s + BigInt(1)) > BigInt(n));
    }
    BigInt big = BigInt::from_string("123456789123456789123456789");
    BigInt s = BigInt::isqrt(big * big);
    CHECK(s == big);
}

TEST_CASE("rationals stay reduced with positive denominators") {
    Rat a(BigInt(6), BigInt(-4));
    CHECK(a.num() == BigInt(-3));
    CHECK(a.den() == BigInt(2));
    CHECK((a + Rat(BigInt(3), BigInt(2))).is_zero());
    CHECK(Rat(BigInt(1), BigInt(3)) + Rat(BigInt(1), BigInt(6)) == Rat(BigInt(1), BigInt(2)));
    CHECK(Rat::from_string("-10/15") == Rat(BigInt(-2), BigInt(3)));
    CHECK(Rat(BigInt(7), BigInt(7)).is_one());
}

TEST_CASE("prime field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    for (std::uint64_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
    CHECK(f5.from_int(-7) == 3);
    CHECK_THROWS_AS(PrimeField(6), Error);
    PrimeField f2(2);
    CHECK(f2.from_int(-1) == 1);
}

TEST_CASE("rank_kernel on the frozen examples") {
    PrimeField f2(2), f3(3);
    auto id2 = Matrix<PrimeField>::identity(f2, 2);
    auto rk = rank_kernel(id2);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.cols() == 0);

    Matrix<PrimeField> z(f3, 1, 1);
    auto rkz = rank_kernel(z);
    CHECK(rkz.rank == 0);
    CHECK(rkz.kernel.cols() == 1);
    CHECK(rkz.kernel.at(0, 0) == 1);

    // [[1,1],[1,1]] over F2: rank 1, kernel spanned by (1,1)
    Matrix<PrimeField> ones(f2, 2, 2);
    ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
    auto rko = rank_kernel(ones);
    CHECK(rko.rank == 1);
    REQUIRE(rko.kernel.cols() == 1);
    CHECK(rko.kernel.at(0, 0) == 1);
    CHECK(rko.kernel.at(1, 0) == 1);
}

TEST_CASE("kernel vectors are killed and rank-nullity holds on random matrices") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 60; ++it) {
        PrimeField f(it % 2 ? 3 : 5);
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix<PrimeField> m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng() % f.modulus();
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel.cols() == cols);
        for (std::size_t k = 0; k < rk.kernel.cols(); ++k) {
            auto v = m.apply(rk.kernel.col(k));
            for (auto x : v) CHECK(x == 0);
        }
        CHECK(rank_of(m) == rank_of(m.transpose()));
    }
}

TEST_CASE("rank_kernel result is independent of row order") {
    PrimeField f3(3);
    Matrix<PrimeField> m(f3, 3, 4);
    std::uint64_t vals[3][4] = {{1, 2, 0, 1}, {2, 1, 1, 0}, {0, 0, 2, 2}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = vals[r][c];
    auto base = rank_kernel(m);
    std::size_t perms[][3] = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
    for (auto& p : perms) {
        Matrix<PrimeField> mp(f3, 3, 4);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c) mp.at(r, c) = vals[p[r]][c];
        auto rk = rank_kernel(mp);
        CHECK(rk.rank == base.rank);
        CHECK(rk.kernel == base.kernel);
    }
}

TEST_CASE("linear solver") {
    RationalField Q;
    Matrix<RationalField> a(Q, 2, 2);
    a.at(0, 0) = Rat(2);
    a.at(0, 1) = Rat(1);
    a.at(1, 0) = Rat(1);
    a.at(1, 1) = Rat(3);
    auto x = solve(a, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));

    Matrix<RationalField> sing(Q, 2, 1);
    sing.at(0, 0) = Rat(1);
    sing.at(1, 0) = Rat(1);
    CHECK(!solve(sing, {Rat(1), Rat(2)}).has_value());
    CHECK(solve(sing, {Rat(2), Rat(2)}).has_value());
}

TEST_CASE("echelon subspace bookkeeping") {
    PrimeField f2(2);
    Echelon<PrimeField> e(f2, 3);
    CHECK(e.add({1, 1, 0}));
    CHECK(e.add({0, 1, 1}));
    CHECK(!e.add({1, 0, 1}));  // sum of the first two
    CHECK(e.dim() == 2);
    CHECK(e.contains({1, 0, 1}));
    CHECK(!e.contains({1, 0, 0}));
}

TEST_CASE("poly_divmod frozen examples") {
    // (1 + z^2) / (1 - z): quot = -(z+1), rem = 2
    Poly a = Poly::from_int_coeffs({1, 0, 1});
    Poly b = Poly::from_int_coeffs({1, -1});
    auto dm = poly_divmod(a, b);
    CHECK(dm.quot == Poly::from_int_coeffs({-1, -1}));
    CHECK(dm.rem == Poly::from_int_coeffs({2}));

    Poly z = Poly::from_int_coeffs({0, 1});
    auto dm2 = poly_divmod(z, z);
    CHECK(dm2.quot == Poly::from_int_coeffs({1}));
    CHECK(dm2.rem.is_zero());

    auto dm3 = poly_divmod(Poly::from_int_coeffs({1}), Poly::from_int_coeffs({1, 0, -1}));
    CHECK(dm3.quot.is_zero());
    CHECK(dm3.rem == Poly::from_int_coeffs({1}));

    CHECK_THROWS_AS(poly_divmod(a, Poly()), Error);
}

TEST_CASE("poly_divmod round trip on random inputs") {
    std::mt19937_64 rng(777);
    auto random_poly = [&](int maxdeg) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % 11) - 5;
        return Poly::from_int_coeffs(c);
    };
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(8), b = random_poly(5);
        if (b.is_zero()) continue;
        auto dm = poly_divmod(a, b);
        CHECK(dm.quot * b + dm.rem == a);
        CHECK(dm.rem.degree() < b.degree());
    }
}

TEST_CASE("poly_gcd frozen examples") {
    Poly f = Poly::from_int_coeffs({1, 0, -1});     // 1 - z^2
    Poly g = Poly::from_int_coeffs({1, 0, 0, -1});  // 1 - z^3
    Poly d = poly_gcd(f, g);
    CHECK(d == Poly::from_int_coeffs({-1, 1}));  // monic form of 1 - z

    CHECK(poly_gcd(f, Poly()) == f.monic());
    CHECK(poly_gcd(Poly::from_int_coeffs({1, 1}), Poly::from_int_coeffs({1, -1})) ==
          Poly::from_int_coeffs({1}));
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), Error);
}

TEST_CASE("poly_gcd divides both arguments") {
    std::mt19937_64 rng(31337);
    auto random_poly = [&](int maxdeg) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % 7) - 3;
        return Poly::from_int_coeffs(c);
    };
    for (int it = 0; it < 100; ++it) {
        Poly f = random_poly(6), g = random_poly(6);
        if (f.is_zero() && g.is_zero()) continue;
        Poly d = poly_gcd(f, g);
        if (!f.is_zero()) CHECK(poly_divmod(f, d).rem.is_zero());
        if (!g.is_zero()) CHECK(poly_divmod(g, d).rem.is_zero());
        // common factor test: gcd(f*h, g*h) is divisible by h
        Poly h = random_poly(3);
        if (h.is_zero() || (f.is_zero() && g.is_zero())) continue;
        if ((f * h).is_zero() && (g * h).is_zero()) continue;
        Poly d2 = poly_gcd(f * h, g * h);
        CHECK(poly_divmod(d2, h.monic()).rem.is_zero());
    }
}

TEST_CASE("max_root_multiplicity") {
    CHECK(max_root_multiplicity(Poly::from_int_coeffs({1, -1})) == 1);
    Poly sq = Poly::from_int_coeffs({1, -1}) * Poly::from_int_coeffs({1, -1});
    CHECK(max_root_multiplicity(sq) == 2);
    Poly mix = Poly::one_minus_power(1) * Poly::one_minus_power(2) * Poly::one_minus_power(3);
    CHECK(max_root_multiplicity(mix) == 3);  // root 1 appears in every factor
    CHECK(max_root_multiplicity(Poly::from_int_coeffs({5})) == 0);
}

TEST_CASE("nonneg_integer_roots") {
    // (y - 5)
    CHECK(nonneg_integer_roots(Poly::from_int_coeffs({-5, 1})) == std::vector<std::int64_t>{5});
    // (y - 2)(y - 7) = 14 - 9y + y^2
    CHECK(nonneg_integer_roots(Poly::from_int_coeffs({14, -9, 1})) ==
          std::vector<std::int64_t>{2, 7});
    // y(y - 3)(y - 4) = -12y? expand: y^3 -7y^2 +12y
    CHECK(nonneg_integer_roots(Poly::from_int_coeffs({0, 12, -7, 1})) ==
          std::vector<std::int64_t>{0, 3, 4});
    // no integer roots
    CHECK(nonneg_integer_roots(Poly::from_int_coeffs({1, 0, 1})).empty());
    // rational coefficients: (y - 6)/3
    CHECK(nonneg_integer_roots(Poly({Rat(BigInt(-2), BigInt(1)), Rat(BigInt(1), BigInt(3))})) ==
          std::vector<std::int64_t>{6});
}

TEST_CASE("series_expand frozen examples") {
    SeriesWindow s = series_expand(Poly::from_int_coeffs({1}), {1}, 5);
    CHECK(s.terms == std::vector<std::int64_t>{1, 1, 1, 1, 1});

    // partitions into parts of sizes 1 and 2
    SeriesWindow p = series_expand(Poly::from_int_coeffs({1}), {1, 2}, 6);
    CHECK(p.terms == std::vector<std::int64_t>{1, 1, 2, 2, 3, 3});

    // (1+z)/(1-z^2) = 1/(1-z)
    SeriesWindow q = series_expand(Poly::from_int_coeffs({1, 1}), {2}, 4);
    CHECK(q.terms == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("series_expand matches naive polynomial long multiplication") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::int64_t> num(static_cast<std::size_t>(rng() % 6) + 1);
        for (auto& x : num) x = static_cast<std::int64_t>(rng() % 7) - 3;
        std::vector<int> degs;
        for (std::size_t i = 0, n = rng() % 3 + 1; i < n; ++i)
            degs.push_back(static_cast<int>(rng() % 4) + 1);
        const int len = 30;
        SeriesWindow got = series_expand(Poly::from_int_coeffs(num), degs, len);

        // independent: expand each geometric factor by brute convolution
        std::vector<std::int64_t> acc(len, 0);
        for (std::size_t i = 0; i < num.size() && i < len; ++i) acc[i] = num[i];
        for (int d : degs) {
            std::vector<std::int64_t> nxt(len, 0);
            for (int i = 0; i < len; ++i) {
                if (acc[i] == 0) continue;
                for (int k = 0; i + k * d < len; ++k) nxt[i + k * d] += acc[i];
            }
            acc = nxt;
        }
        CHECK(got.terms == acc);
    }
}

TEST_CASE("determinism: repeated runs produce identical values") {
    Poly num = Poly::from_int_coeffs({2, -1, 3});
    auto a = series_expand(num, {1, 2, 3}, 40);
    auto b = series_expand(num, {1, 2, 3}, 40);
    CHECK(a == b);
    Matrix<PrimeField> m(PrimeField(5), 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = (i * 2 + j * 3) % 5;
    CHECK(rank_kernel(m).kernel == rank_kernel(m).kernel);
}
