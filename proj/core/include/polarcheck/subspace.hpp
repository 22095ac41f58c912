#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "polarcheck/gf.hpp"

namespace polarcheck {

/// A linear subspace of GF(q)^d, stored as its reduced row-echelon basis.
/// The RREF matrix is canonical: two Subspace values describe the same
/// subspace exactly when they compare equal, and lexicographic order on the
/// stored bytes is the canonical order used for stable IDs everywhere.
///
/// vdim() == 0 is the zero subspace (a first-class value; it is what the
/// geometry calls two "disjoint" subspaces' intersection).
///
/// All dimensions in this project are vector-space dimensions.
/// Instances are immutable after construction and safe to share across threads.
class Subspace {
public:
    Subspace() = default;  // zero subspace of GF(2)^0

    static Subspace zero(unsigned ambient_dim, unsigned q);
    static Subspace full(unsigned ambient_dim, unsigned q);

    unsigned ambient_dim() const { return d_; }
    unsigned field_order() const { return q_; }
    unsigned vdim() const { return k_; }
    bool is_zero() const { return k_ == 0; }

    uint8_t at(unsigned row, unsigned col) const { return rows_[size_t(row) * d_ + col]; }
    const uint8_t* row_data(unsigned row) const { return rows_.data() + size_t(row) * d_; }
    Vec row(unsigned row) const {
        return Vec(row_data(row), row_data(row) + d_);
    }
    /// Raw row-major RREF bytes; used for hashing and canonical ordering.
    const std::vector<uint8_t>& bytes() const { return rows_; }

    /// The vector sum(coeffs[i] * basis row i); coeffs.size() == vdim().
    Vec combination(const Vec& coeffs) const;

    bool operator==(const Subspace&) const = default;

    /// Canonical order: by ambient dim, then field, then vdim, then RREF bytes.
    bool operator<(const Subspace& o) const;

private:
    uint16_t d_ = 0;
    uint16_t q_ = 2;
    uint16_t k_ = 0;
    std::vector<uint8_t> rows_;  // k_ x d_, row-major, reduced row-echelon form

    friend Subspace rref(std::span<const Vec> rows, unsigned d, unsigned q);
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

/// Canonical span of the given rows.  Idempotent and span-invariant: row
/// order and row scaling do not change the output.
/// Throws std::invalid_argument on mismatched row lengths.
Subspace rref(std::span<const Vec> rows, unsigned d, unsigned q);

/// Smallest subspace containing both arguments.
Subspace sum(const Subspace& a, const Subspace& b);

/// Set-theoretic intersection (Zassenhaus).
Subspace intersect(const Subspace& a, const Subspace& b);

/// vdim(a Intersect b) without building the subspace; this is the hot path
/// for all pairwise graph scans.  GF(2) rows are bit-packed into machine
/// words internally (d <= 64); other fields run byte elimination.
int intersection_dim(const Subspace& a, const Subspace& b);

/// Exact membership of a vector, by reduction against the RREF basis.
bool contains(const Subspace& a, const Vec& v);

/// True when b is a subspace of a.
bool contains_sub(const Subspace& a, const Subspace& b);

/// All q^vdim vectors of the subspace (coefficient odometer order).
std::vector<Vec> all_vectors(const Subspace& s);

/// All 1-dimensional subspaces of s, canonically sorted.
std::vector<Subspace> points_of(const Subspace& s);

/// All vdim-r subspaces of s, canonically sorted.
std::vector<Subspace> subspaces_of(const Subspace& s, unsigned r);

/// Calls fn once for every k x d RREF matrix over GF(q), i.e. once per
/// element of the Grassmannian of k-subspaces of GF(q)^d.  The matrix is
/// handed over as row-major bytes.  Enumeration order is deterministic but
/// not canonical; sort the results if canonical IDs are needed.
void for_each_rref_matrix(unsigned k, unsigned d, unsigned q,
                          const std::function<void(const std::vector<uint8_t>&)>& fn);

/// Number of k-subspaces of GF(q)^d (Gaussian binomial).  Used as the
/// independent counting oracle against enumeration.
uint64_t gaussian_binomial(unsigned d, unsigned k, unsigned q);

/// Text format, used for fixtures and CLI I/O:
///   header line "d=<ambient> q=<q>", then one line per basis row with
///   coordinates as digits separated by spaces.
std::string to_text(const Subspace& s);

/// Parses the text format.  Rows are re-canonicalized, so any generating
/// set is accepted.  Throws std::invalid_argument on malformed input.
Subspace subspace_from_text(std::string_view text);

}  // namespace polarcheck
