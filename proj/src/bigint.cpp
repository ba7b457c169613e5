#include "extvan/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "extvan/errors.hpp"

namespace extvan {

BigInt::BigInt(std::int64_t v) : sign_(0) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v) : 0ULL - static_cast<std::uint64_t>(v);
    while (m) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) raise(ErrorCode::ConfigError, "empty integer literal");
    std::size_t i = 0;
    int sg = 1;
    if (s[0] == '+' || s[0] == '-') {
        sg = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    if (i == s.size()) raise(ErrorCode::ConfigError, "bare sign is not an integer");
    BigInt r;
    const BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            raise(ErrorCode::ConfigError, "bad digit in integer literal: " + s);
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) raise_internal("divmod_mag by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= shift ? (v[i] << shift) : v[i];
            if (shift) out[i + 1] = v[i] >> (32 - shift);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<std::uint32_t> u = shl(a), v = shl(b);
    std::size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= (1ULL << 32) ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= (1ULL << 32)) break;
        }
        // multiply-subtract, add back if we overshot
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            borrow = 0;
            if (t < 0) {
                t += (1LL << 32);
                borrow = 1;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) -
                         borrow;
        if (t < 0) {
            t += (1LL << 32);
            u[j + n] = static_cast<std::uint32_t>(t);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            u[j + n] = static_cast<std::uint32_t>(u[j + n] + c2);
        } else {
            u[j + n] = static_cast<std::uint32_t>(t);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    if (shift) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] >>= shift;
            if (i + 1 < u.size()) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) raise_internal("BigInt division by zero");
    BigInt qq, rr;
    divmod_mag(a.mag_, b.mag_, qq.mag_, rr.mag_);
    qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
    qq.trim();
    rr.trim();
    q = qq;
    r = rr;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) raise_internal("isqrt of negative");
    if (n.is_zero()) return BigInt();
    if (n.fits_int64()) {
        std::int64_t v = n.to_int64();
        std::int64_t x = static_cast<std::int64_t>(std::max(1.0, std::floor(std::sqrt(static_cast<double>(v)))));
        while (x > 0 && x > v / x) --x;
        while ((x + 1) <= v / (x + 1)) ++x;
        return BigInt(x);
    }
    // Newton iteration on bignums
    BigInt x = n, two(2);
    BigInt y = (x + BigInt(1)) / two;
    while (y < x) {
        x = y;
        y = (x + n / x) / two;
    }
    return x;
}

bool BigInt::is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t m = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) raise(ErrorCode::OverflowGuard, "BigInt does not fit in 64 bits");
    std::uint64_t m = 0;
    if (mag_.size() > 0) m |= mag_[0];
    if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint64_t BigInt::reduce_mod_u64(std::uint64_t modulus) const {
    if (modulus == 0) raise_internal("mod 0");
    std::uint64_t r = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        // r = (r*2^32 + limb) mod modulus; modulus < 2^32 in all callers
        r = ((r << 32) | mag_[i]) % modulus;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace extvan
