#ifndef EXTVAN_RATIONAL_HPP
#define EXTVAN_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include "extvan/bigint.hpp"

namespace extvan {

/* Exact rational number. Always reduced, denominator always positive. */
class Rat {
   public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t v) : num_(v), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d);
    static Rat from_string(const std::string& s);  // "a" or "a/b"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat inverse() const;

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;

    std::string to_string() const;

   private:
    BigInt num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rat& v);

}  // namespace extvan

#endif
