#include "polarcheck/gf.hpp"

#include <stdexcept>

namespace polarcheck {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(unsigned q) : q_(q) {
    if (q < 2 || q > 255 || !is_prime(q)) {
        throw std::invalid_argument("PrimeField: q must be a prime in [2, 255], got " +
                                    std::to_string(q));
    }
}

uint8_t PrimeField::inv(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("PrimeField::inv: 0 has no inverse");
    // Fermat: a^(q-2) mod q.  q is tiny, a simple square-and-multiply is plenty.
    unsigned result = 1, base = a, e = q_ - 2;
    while (e) {
        if (e & 1) result = result * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return uint8_t(result);
}

uint8_t dot(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    unsigned acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += unsigned(a[i]) * b[i];
    return uint8_t(acc % f.q());
}

}  // namespace polarcheck
