#pragma once

// Shared helpers for the unit tests: seeded generators and set-based
// brute-force oracles that stay independent of the RREF code paths.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "polarcheck/subspace.hpp"

namespace testutil {

using polarcheck::Subspace;
using polarcheck::Vec;

inline Vec random_vec(std::mt19937_64& rng, unsigned d, unsigned q) {
    Vec v(d);
    for (unsigned i = 0; i < d; ++i) v[i] = uint8_t(rng() % q);
    return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, unsigned d, unsigned q,
                                unsigned max_rows) {
    std::vector<Vec> rows;
    unsigned count = unsigned(rng() % (max_rows + 1));
    for (unsigned i = 0; i < count; ++i) rows.push_back(random_vec(rng, d, q));
    return polarcheck::rref(rows, d, q);
}

/// Every vector of the span, computed by closing a set under addition and
/// scaling; no row reduction involved.
inline std::set<Vec> span_set(const std::vector<Vec>& gens, unsigned d, unsigned q) {
    polarcheck::PrimeField f(q);
    std::set<Vec> out{Vec(d, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> cur(out.begin(), out.end());
        for (const Vec& v : cur) {
            for (const Vec& g : gens) {
                for (unsigned c = 1; c < q; ++c) {
                    Vec w(d);
                    for (unsigned i = 0; i < d; ++i) w[i] = f.add(v[i], f.mul(uint8_t(c), g[i]));
                    if (out.insert(w).second) grew = true;
                }
            }
        }
    }
    return out;
}

inline std::set<Vec> subspace_set(const Subspace& s) {
    std::vector<Vec> gens;
    for (unsigned i = 0; i < s.vdim(); ++i) gens.push_back(s.row(i));
    return span_set(gens, s.ambient_dim(), s.field_order());
}

inline uint64_t pow_u64(uint64_t base, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace testutil
