#pragma once

// Internal helpers: GF(2) subspace rows packed one uint64_t per row
// (requires ambient dim <= 64), used by the pairwise graph builders.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "polarcheck/subspace.hpp"

namespace polarcheck::detail {

inline uint64_t pack_gf2_row(const uint8_t* row, unsigned d) {
    uint64_t w = 0;
    for (unsigned j = 0; j < d; ++j) w |= uint64_t(row[j] & 1) << j;
    return w;
}

struct PackedGf2List {
    int rows_per_item = 0;
    std::vector<uint64_t> words;

    const uint64_t* item(size_t i) const { return words.data() + i * rows_per_item; }

    static PackedGf2List pack(std::span<const Subspace> subs) {
        PackedGf2List out;
        if (subs.empty()) return out;
        out.rows_per_item = int(subs[0].vdim());
        out.words.reserve(subs.size() * out.rows_per_item);
        for (const Subspace& s : subs) {
            for (unsigned r = 0; r < s.vdim(); ++r) {
                out.words.push_back(pack_gf2_row(s.row_data(r), s.ambient_dim()));
            }
        }
        return out;
    }
};

// Rank of packed rows; destroys the buffer.
inline int rank_gf2_rows(uint64_t* rows, int n) {
    uint64_t basis[64] = {0};
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        uint64_t v = rows[i];
        while (v) {
            int b = std::countr_zero(v);
            if (basis[b]) {
                v ^= basis[b];
            } else {
                basis[b] = v;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

// vdim of the intersection of two packed subspaces.
inline int interdim_gf2(const uint64_t* a, int ka, const uint64_t* b, int kb) {
    uint64_t buf[128];
    for (int i = 0; i < ka; ++i) buf[i] = a[i];
    for (int i = 0; i < kb; ++i) buf[ka + i] = b[i];
    return ka + kb - rank_gf2_rows(buf, ka + kb);
}

}  // namespace polarcheck::detail
