#pragma once

#include <cstdint>
#include <vector>

namespace polarcheck {

/// Coordinate vector over GF(q): one reduced entry (0 <= v[i] < q) per byte.
using Vec = std::vector<uint8_t>;

/// Arithmetic in the prime field GF(q).  q must be a prime below 256;
/// q = 2 and q = 3 are the orders this project actually exercises.
/// All arithmetic is exact, there is no rounding anywhere in the system.
class PrimeField {
public:
    /// Throws std::invalid_argument unless q is a prime in [2, 255].
    explicit PrimeField(unsigned q);

    unsigned q() const { return q_; }

    uint8_t add(uint8_t a, uint8_t b) const {
        unsigned s = unsigned(a) + b;
        return uint8_t(s >= q_ ? s - q_ : s);
    }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t neg(uint8_t a) const { return uint8_t(a ? q_ - a : 0); }
    uint8_t mul(uint8_t a, uint8_t b) const { return uint8_t(unsigned(a) * b % q_); }

    /// Multiplicative inverse; throws std::invalid_argument on 0.
    uint8_t inv(uint8_t a) const;

    /// Reduces an arbitrary integer into [0, q).
    uint8_t reduce(long long v) const {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return uint8_t(r);
    }

    bool operator==(const PrimeField&) const = default;

private:
    unsigned q_;
};

/// Dot product over GF(q); both vectors must have the same length.
uint8_t dot(const PrimeField& f, const Vec& a, const Vec& b);

}  // namespace polarcheck
