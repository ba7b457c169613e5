#include "extvan/poly.hpp"

#include <algorithm>

#include "extvan/errors.hpp"

namespace extvan {

Poly Poly::constant(Rat v) {
    if (v.is_zero()) return Poly();
    return Poly(std::vector<Rat>{std::move(v)});
}

Poly Poly::from_int_coeffs(const std::vector<std::int64_t>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly Poly::one_minus_power(int d) {
    if (d < 1) raise_internal("one_minus_power needs d >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    c[0] = Rat(1);
    c[static_cast<std::size_t>(d)] = Rat(-1);
    return Poly(std::move(c));
}

bool Poly::has_integer_coeffs() const {
    for (const auto& x : c_)
        if (!x.is_integer()) return false;
    return true;
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& x) const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * x;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat v;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<std::int64_t>(i));
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(leading().inverse());
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !c_[i].is_one()) s += c_[i].to_string();
        if (i > 0) {
            if (!c_[i].is_one()) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) raise(ErrorCode::DivisionByZeroPoly, "polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    Rat lead_inv = b.leading().inverse();
    std::vector<Rat> quot;
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat());
    for (int d = a.degree(); d >= db; --d) {
        Rat& top = rem[static_cast<std::size_t>(d)];
        if (top.is_zero()) continue;
        Rat q = top * lead_inv;
        quot[static_cast<std::size_t>(d - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(d - db + j)] -= q * b.coeff(j);
    }
    return PolyDivMod{Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) raise(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).rem;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    PolyDivMod d = poly_divmod(a, b);
    if (!d.rem.is_zero()) raise_internal("poly_exact_div: remainder is nonzero");
    return d.quot;
}

int max_root_multiplicity(const Poly& p) {
    if (p.is_zero()) raise_internal("max_root_multiplicity of zero polynomial");
    Poly g = p;
    int m = 0;
    while (g.degree() > 0) {
        g = poly_gcd(g, g.derivative());
        ++m;
    }
    return m;
}

namespace {

// p with denominators cleared, content not removed (roots unchanged)
std::vector<BigInt> integer_model(const Poly& p) {
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs()) {
        BigInt g = BigInt::gcd(lcm_den, c.den());
        lcm_den = (lcm_den / g) * c.den();
    }
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (lcm_den / c.den()));
    return out;
}

BigInt eval_int(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt v;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

}  // namespace

std::vector<std::int64_t> nonneg_integer_roots(const Poly& p) {
    std::vector<std::int64_t> roots;
    if (p.is_zero()) raise_internal("integer roots of the zero polynomial");
    if (p.degree() == 0) return roots;

    std::vector<BigInt> c = integer_model(p);
    // strip root 0
    std::size_t shift = 0;
    while (shift < c.size() && c[shift].is_zero()) ++shift;
    if (shift > 0) {
        roots.push_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (c.size() <= 1) return roots;

    if (c.size() == 2) {  // c0 + c1 x
        BigInt q, r;
        BigInt::divmod(-c[0], c[1], q, r);
        if (r.is_zero() && q.sign() > 0) roots.push_back(q.to_int64());
    } else if (c.size() == 3) {  // c0 + c1 x + c2 x^2
        BigInt disc = c[1] * c[1] - BigInt(4) * c[2] * c[0];
        if (disc.sign() >= 0) {
            BigInt s = BigInt::isqrt(disc);
            if (s * s == disc) {
                for (int sgn : {-1, 1}) {
                    BigInt numer = -c[1] + (sgn > 0 ? s : -s);
                    BigInt q, r;
                    BigInt::divmod(numer, BigInt(2) * c[2], q, r);
                    if (r.is_zero() && q.sign() > 0 &&
                        (roots.empty() || roots.back() != q.to_int64()))
                        roots.push_back(q.to_int64());
                }
            }
        }
    } else {
        // rational root theorem: positive integer roots divide the constant term
        BigInt c0 = c[0].abs();
        const std::int64_t kTrialCap = 2000000;
        if (!c0.fits_int64() || c0.to_int64() > kTrialCap * kTrialCap)
            raise(ErrorCode::OverflowGuard, "integer-root search: constant term too large");
        std::int64_t n0 = c0.to_int64();
        std::vector<std::int64_t> divs;
        for (std::int64_t d = 1; d * d <= n0; ++d) {
            if (n0 % d) continue;
            divs.push_back(d);
            if (d != n0 / d) divs.push_back(n0 / d);
        }
        std::sort(divs.begin(), divs.end());
        for (auto d : divs)
            if (eval_int(c, BigInt(d)).is_zero()) roots.push_back(d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace extvan
