#pragma once

#include "polarcheck/subspace.hpp"

namespace polarcheck {

enum class FormKind { Symplectic, Quadratic };

/// A non-degenerate form of maximal Witt index n on GF(q)^{2n}: either an
/// alternating bilinear form or a hyperbolic quadratic form together with
/// its polar (bilinearized) form.
///
/// The fixed standard coordinates pair basis vectors (e_{2i}, e_{2i+1}),
/// i = 0..n-1, as hyperbolic pairs: the symplectic Gram matrix is block
/// diagonal with blocks [[0,1],[-1,0]], and the quadratic form is
/// Q(v) = sum v_{2i} v_{2i+1}.  Every non-degenerate form of full Witt
/// index over GF(q) is equivalent to one of these.
class Form {
public:
    static Form symplectic(unsigned witt_index, unsigned q);
    static Form hyperbolic_quadric(unsigned witt_index, unsigned q);

    /// General constructor.  gram is the d x d bilinear (for Quadratic: the
    /// polarization) matrix; quad holds upper-triangular coefficients of Q
    /// and must be empty for Symplectic kind.  Validates alternation /
    /// polarization identity and non-degeneracy; throws std::invalid_argument.
    Form(FormKind kind, unsigned q, unsigned d, std::vector<uint8_t> gram,
         std::vector<uint8_t> quad);

    FormKind kind() const { return kind_; }
    const PrimeField& field() const { return f_; }
    unsigned dim() const { return d_; }
    unsigned witt_index() const { return d_ / 2; }

    uint8_t gram_at(unsigned i, unsigned j) const { return gram_[size_t(i) * d_ + j]; }

    /// The bilinear pairing u^T G v.
    uint8_t bilinear(const Vec& u, const Vec& v) const;

    /// Q(v); throws std::logic_error for symplectic forms.
    uint8_t quadratic(const Vec& v) const;

    /// The functional row G v, so that bilinear(u, v) == dot(u, gram_image(v)).
    Vec gram_image(const Vec& v) const;

    /// Singular vectors carry the polar space's points: Q(v) == 0 for
    /// quadratic forms; every vector for symplectic ones.
    bool vector_singular(const Vec& v) const;

    /// True when the form vanishes identically on S.  A basis check
    /// suffices: pairwise gram values zero, plus Q zero on basis rows for
    /// quadratic kind.
    bool totally_singular(const Subspace& s) const;

    /// All vectors orthogonal to every vector of X under the gram pairing.
    /// vdim(perp(X)) == d - vdim(X) by non-degeneracy.
    Subspace perp(const Subspace& x) const;

    /// Collinearity of singular points: the joining line is totally
    /// singular.  Reflexive.  Throws std::invalid_argument unless both
    /// inputs are singular points (vdim 1).
    bool points_collinear(const Subspace& p, const Subspace& r) const;

private:
    FormKind kind_;
    PrimeField f_;
    uint16_t d_;
    std::vector<uint8_t> gram_;  // d x d
    std::vector<uint8_t> quad_;  // d x d upper triangular, Quadratic only
};

}  // namespace polarcheck
