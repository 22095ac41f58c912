#pragma once

#include "polarcheck/forms.hpp"

namespace polarcheck {

/// A frame: n hyperbolic pairs of singular points spanning the whole space.
/// Representative vectors (x_i, y_i) satisfy gram(x_i, y_i) == 1, and every
/// other pair of frame vectors pairs to zero; equivalently the 2n points
/// are pairwise collinear except exactly the n designated pairs.
class Frame {
public:
    unsigned pair_count() const { return unsigned(pairs_.size()); }
    const Vec& x(unsigned i) const { return pairs_[i].first; }
    const Vec& y(unsigned i) const { return pairs_[i].second; }
    Subspace x_point(unsigned i) const;
    Subspace y_point(unsigned i) const;

    /// All 2n representative vectors, pair by pair.
    std::vector<Vec> vectors() const;

    unsigned ambient_dim() const { return d_; }
    unsigned field_order() const { return q_; }

private:
    friend Frame make_frame(const Form& form, std::vector<std::pair<Vec, Vec>> pairs);
    uint16_t d_ = 0;
    uint16_t q_ = 2;
    std::vector<std::pair<Vec, Vec>> pairs_;
};

/// Total check of the frame contract (singularity, pairing pattern, span).
bool frame_valid(const Form& form, const Frame& frame);

/// The frame of the standard basis vectors; deterministic.
Frame standard_frame(const Form& form);

/// A frame whose representative vectors span both a and b: a subset of the
/// frame vectors is a basis of a and another subset is a basis of b.
/// Deterministic given (a, b).  Throws std::invalid_argument unless both
/// inputs are totally singular.
Frame frame_through(const Form& form, const Subspace& a, const Subspace& b);

/// A maximal totally singular u with p <= u and u Intersect s == p Intersect s
/// (so u is "opposite" to s in the dual polar space whenever p and s are
/// disjoint).  p must be totally singular and s maximal totally singular.
Subspace opposite_extension(const Form& form, const Subspace& p, const Subspace& s);

}  // namespace polarcheck
