#include "extvan/rational.hpp"

#include <ostream>

#include "extvan/errors.hpp"

namespace extvan {

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) raise_internal("rational with zero denominator");
    normalize();
}

void Rat::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt::from_string(s));
    return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) raise_internal("rational division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::inverse() const {
    if (is_zero()) raise_internal("inverse of zero");
    return Rat(den_, num_);
}

bool Rat::operator<(const Rat& o) const { return (num_ * o.den_) < (o.num_ * den_); }

std::string Rat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.to_string(); }

}  // namespace extvan
