#include "extvan/fields.hpp"

namespace extvan {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p))
        raise(ErrorCode::ConfigError, "field modulus must be a prime < 2^31, got " + std::to_string(p));
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
    if (kind == Kind::Rationals) return "Q";
    return "F" + std::to_string(p);
}

}  // namespace extvan
