#ifndef EXTVAN_POLY_HPP
#define EXTVAN_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "extvan/rational.hpp"

namespace extvan {

/* Univariate polynomial with exact rational coefficients, lowest degree
 * first, never a trailing zero coefficient. The zero polynomial has an
 * empty coefficient list and degree -1. */
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { prune(); }
    static Poly constant(Rat v);
    static Poly from_int_coeffs(const std::vector<std::int64_t>& coeffs);
    // 1 - z^d
    static Poly one_minus_power(int d);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat() : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat() : c_.back(); }

    bool has_integer_coeffs() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& x) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    // leading coefficient made 1 (zero polynomial stays zero)
    Poly monic() const;

    std::string to_string(const std::string& var = "z") const;

   private:
    std::vector<Rat> c_;
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

struct PolyDivMod {
    Poly quot, rem;
};

// Euclidean division: a = quot*b + rem, deg(rem) < deg(b). b must be nonzero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; errors if both arguments are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient; raises internally if b does not divide a.
Poly poly_exact_div(const Poly& a, const Poly& b);

// Max multiplicity among the roots, via the repeated-gcd chain.
int max_root_multiplicity(const Poly& p);

/* Nonnegative integer roots of a polynomial with rational coefficients.
 * Degrees <= 2 are solved in closed form; higher degrees fall back to the
 * rational root theorem on the cleared-denominator polynomial. */
std::vector<std::int64_t> nonneg_integer_roots(const Poly& p);

}  // namespace extvan

#endif
