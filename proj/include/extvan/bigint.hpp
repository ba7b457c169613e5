#ifndef EXTVAN_BIGINT_HPP
#define EXTVAN_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace extvan {

/* Arbitrary-precision signed integer, sign + base-2^32 magnitude.
 * Everything in this project that outgrows int64 is small by bignum
 * standards (interpolation nodes, Euclidean remainder chains), so the
 * schoolbook algorithms are fine. */
class BigInt {
   public:
    BigInt() : sign_(0) {}
    BigInt(std::int64_t v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const BigInt& o) const { return cmp(*this, o) != 0; }
    bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    static BigInt isqrt(const BigInt& n);   // floor(sqrt), n >= 0

    bool is_even() const;
    bool fits_int64() const;
    std::int64_t to_int64() const;  // requires fits_int64()
    std::string to_string() const;

    std::uint64_t reduce_mod_u64(std::uint64_t m) const;  // |this| mod m

   private:
    int sign_;                        // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zero limb

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace extvan

#endif
