#ifndef EXTVAN_FIELDS_HPP
#define EXTVAN_FIELDS_HPP

#include <cstdint>
#include <string>

#include "extvan/errors.hpp"
#include "extvan/rational.hpp"

namespace extvan {

/* Runtime description of the ground field: F_p for a prime p, or Q.
 * All arithmetic in this project is exact; there is no floating point. */
struct FieldSpec {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

    // 0 for Q
    std::uint64_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

/* Field objects below satisfy the interface Matrix<F> expects:
 * type Elem plus exact add/sub/mul/div/neg/inv, constants, predicates,
 * conversion from small integers, and printing. They are small values and
 * get copied freely. */

class PrimeField {
   public:
    using Elem = std::uint64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p))
            raise(ErrorCode::ConfigError, "field modulus must be a prime < 2^31");
    }

    std::uint64_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    Elem from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_rat(const Rat& r) const {
        Elem n = r.num().reduce_mod_u64(p_);
        if (r.num().is_negative()) n = neg(n);
        Elem d = r.den().reduce_mod_u64(p_);
        if (d == 0) raise(ErrorCode::ConfigError, "rational has no image in F_p (denominator divisible by p)");
        return mul(n, inv(d));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) raise_internal("inverse of zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

   private:
    std::uint64_t p_;
};

class RationalField {
   public:
    using Elem = Rat;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Rat(); }
    Elem one() const { return Rat(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }

    Elem from_int(std::int64_t v) const { return Rat(v); }
    Elem from_rat(const Rat& r) const { return r; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return a.inverse(); }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    std::string to_string(const Elem& a) const { return a.to_string(); }
    bool operator==(const RationalField&) const { return true; }
};

}  // namespace extvan

#endif
