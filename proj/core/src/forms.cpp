#include "polarcheck/forms.hpp"

#include <stdexcept>

namespace polarcheck {

namespace {

unsigned matrix_rank(const std::vector<uint8_t>& m, unsigned d, const PrimeField& f) {
    std::vector<Vec> rows;
    for (unsigned i = 0; i < d; ++i) {
        rows.emplace_back(m.begin() + size_t(i) * d, m.begin() + size_t(i + 1) * d);
    }
    return rref(rows, d, f.q()).vdim();
}

}  // namespace

Form::Form(FormKind kind, unsigned q, unsigned d, std::vector<uint8_t> gram,
           std::vector<uint8_t> quad)
    : kind_(kind), f_(q), d_(uint16_t(d)), gram_(std::move(gram)), quad_(std::move(quad)) {
    if (d == 0 || d % 2 != 0) throw std::invalid_argument("Form: dimension must be even");
    if (gram_.size() != size_t(d) * d) throw std::invalid_argument("Form: gram size");
    if (kind_ == FormKind::Symplectic) {
        if (!quad_.empty()) throw std::invalid_argument("Form: symplectic form has no Q");
        for (unsigned i = 0; i < d; ++i) {
            if (gram_at(i, i) != 0) throw std::invalid_argument("Form: gram not alternating");
            for (unsigned j = 0; j < d; ++j) {
                if (gram_at(i, j) != f_.neg(gram_at(j, i))) {
                    throw std::invalid_argument("Form: gram not alternating");
                }
            }
        }
    } else {
        if (quad_.size() != size_t(d) * d) throw std::invalid_argument("Form: quad size");
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned j = 0; j < i; ++j) {
                if (quad_[size_t(i) * d + j] != 0) {
                    throw std::invalid_argument("Form: quad must be upper triangular");
                }
            }
        }
        // gram must be the polarization of Q: gram = C + C^T.
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned j = 0; j < d; ++j) {
                uint8_t want = f_.add(quad_[size_t(i) * d + j], quad_[size_t(j) * d + i]);
                if (gram_at(i, j) != want) {
                    throw std::invalid_argument("Form: gram is not the polarization of quad");
                }
            }
        }
    }
    if (matrix_rank(gram_, d, f_) != d) {
        throw std::invalid_argument("Form: degenerate gram matrix");
    }
}

Form Form::symplectic(unsigned witt_index, unsigned q) {
    const unsigned d = 2 * witt_index;
    PrimeField f(q);
    std::vector<uint8_t> gram(size_t(d) * d, 0);
    for (unsigned i = 0; i < witt_index; ++i) {
        gram[size_t(2 * i) * d + (2 * i + 1)] = 1;
        gram[size_t(2 * i + 1) * d + (2 * i)] = f.neg(1);
    }
    return Form(FormKind::Symplectic, q, d, std::move(gram), {});
}

Form Form::hyperbolic_quadric(unsigned witt_index, unsigned q) {
    const unsigned d = 2 * witt_index;
    PrimeField f(q);
    std::vector<uint8_t> quad(size_t(d) * d, 0);
    std::vector<uint8_t> gram(size_t(d) * d, 0);
    for (unsigned i = 0; i < witt_index; ++i) {
        quad[size_t(2 * i) * d + (2 * i + 1)] = 1;
        gram[size_t(2 * i) * d + (2 * i + 1)] = 1;
        gram[size_t(2 * i + 1) * d + (2 * i)] = 1;
    }
    return Form(FormKind::Quadratic, q, d, std::move(gram), std::move(quad));
}

uint8_t Form::bilinear(const Vec& u, const Vec& v) const {
    if (u.size() != d_ || v.size() != d_) {
        throw std::invalid_argument("Form::bilinear: vector length != dim");
    }
    unsigned acc = 0;
    for (unsigned i = 0; i < d_; ++i) {
        if (u[i] == 0) continue;
        unsigned row = 0;
        for (unsigned j = 0; j < d_; ++j) row += unsigned(gram_at(i, j)) * v[j];
        acc += unsigned(u[i]) * (row % f_.q());
    }
    return uint8_t(acc % f_.q());
}

uint8_t Form::quadratic(const Vec& v) const {
    if (kind_ != FormKind::Quadratic) {
        throw std::logic_error("Form::quadratic: not a quadratic form");
    }
    if (v.size() != d_) throw std::invalid_argument("Form::quadratic: vector length != dim");
    unsigned acc = 0;
    for (unsigned i = 0; i < d_; ++i) {
        if (v[i] == 0) continue;
        for (unsigned j = i; j < d_; ++j) {
            acc += unsigned(quad_[size_t(i) * d_ + j]) * v[i] * v[j] % f_.q();
        }
    }
    return uint8_t(acc % f_.q());
}

Vec Form::gram_image(const Vec& v) const {
    if (v.size() != d_) throw std::invalid_argument("Form::gram_image: vector length != dim");
    Vec out(d_, 0);
    for (unsigned i = 0; i < d_; ++i) {
        unsigned acc = 0;
        for (unsigned j = 0; j < d_; ++j) acc += unsigned(gram_at(i, j)) * v[j];
        out[i] = uint8_t(acc % f_.q());
    }
    return out;
}

bool Form::vector_singular(const Vec& v) const {
    if (kind_ == FormKind::Symplectic) return true;
    return quadratic(v) == 0;
}

bool Form::totally_singular(const Subspace& s) const {
    if (s.ambient_dim() != d_ || s.field_order() != f_.q()) {
        throw std::invalid_argument("Form::totally_singular: space mismatch");
    }
    for (unsigned i = 0; i < s.vdim(); ++i) {
        Vec ri = s.row(i);
        if (kind_ == FormKind::Quadratic && quadratic(ri) != 0) return false;
        for (unsigned j = i; j < s.vdim(); ++j) {
            if (bilinear(ri, s.row(j)) != 0) return false;
        }
    }
    return true;
}

Subspace Form::perp(const Subspace& x) const {
    if (x.ambient_dim() != d_ || x.field_order() != f_.q()) {
        throw std::invalid_argument("Form::perp: space mismatch");
    }
    if (x.is_zero()) return Subspace::full(d_, f_.q());
    // Null space of the constraint matrix whose rows are G * (basis row).
    std::vector<Vec> constraints;
    for (unsigned i = 0; i < x.vdim(); ++i) constraints.push_back(gram_image(x.row(i)));
    Subspace c = rref(constraints, d_, f_.q());
    // Standard free-column construction of the kernel basis from RREF.
    std::vector<unsigned> pivots;
    std::vector<bool> is_piv(d_, false);
    for (unsigned i = 0; i < c.vdim(); ++i) {
        unsigned p = 0;
        while (c.at(i, p) == 0) ++p;
        pivots.push_back(p);
        is_piv[p] = true;
    }
    std::vector<Vec> kernel;
    for (unsigned free = 0; free < d_; ++free) {
        if (is_piv[free]) continue;
        Vec v(d_, 0);
        v[free] = 1;
        for (unsigned i = 0; i < c.vdim(); ++i) v[pivots[i]] = f_.neg(c.at(i, free));
        kernel.push_back(std::move(v));
    }
    return rref(kernel, d_, f_.q());
}

bool Form::points_collinear(const Subspace& p, const Subspace& r) const {
    if (p.vdim() != 1 || r.vdim() != 1) {
        throw std::invalid_argument("points_collinear: inputs must be points (vdim 1)");
    }
    if (!totally_singular(p) || !totally_singular(r)) {
        throw std::invalid_argument("points_collinear: inputs must be singular points");
    }
    if (p == r) return true;
    // Both points singular, so the spanned line is totally singular exactly
    // when the gram pairing of representatives vanishes.
    return bilinear(p.row(0), r.row(0)) == 0;
}

}  // namespace polarcheck
