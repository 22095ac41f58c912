#include "polarcheck/frames.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace polarcheck {

Subspace Frame::x_point(unsigned i) const {
    std::vector<Vec> one{pairs_[i].first};
    return rref(one, d_, q_);
}

Subspace Frame::y_point(unsigned i) const {
    std::vector<Vec> one{pairs_[i].second};
    return rref(one, d_, q_);
}

std::vector<Vec> Frame::vectors() const {
    std::vector<Vec> out;
    out.reserve(2 * pairs_.size());
    for (const auto& [x, y] : pairs_) {
        out.push_back(x);
        out.push_back(y);
    }
    return out;
}

Frame make_frame(const Form& form, std::vector<std::pair<Vec, Vec>> pairs) {
    Frame fr;
    fr.d_ = uint16_t(form.dim());
    fr.q_ = uint16_t(form.field().q());
    fr.pairs_ = std::move(pairs);
    return fr;
}

bool frame_valid(const Form& form, const Frame& frame) {
    const unsigned n = form.witt_index(), d = form.dim();
    if (frame.pair_count() != n) return false;
    std::vector<Vec> all = frame.vectors();
    for (const Vec& v : all) {
        if (v.size() != d) return false;
        if (std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; })) return false;
        if (!form.vector_singular(v)) return false;
    }
    // Pairing pattern: 1 inside a designated pair, 0 everywhere else.
    for (unsigned i = 0; i < 2 * n; ++i) {
        for (unsigned j = i + 1; j < 2 * n; ++j) {
            uint8_t want = (j == i + 1 && i % 2 == 0) ? 1 : 0;
            if (form.bilinear(all[i], all[j]) != want) return false;
        }
    }
    return rref(all, d, form.field().q()).vdim() == d;
}

Frame standard_frame(const Form& form) {
    const unsigned n = form.witt_index(), d = form.dim();
    std::vector<std::pair<Vec, Vec>> pairs;
    for (unsigned i = 0; i < n; ++i) {
        Vec x(d, 0), y(d, 0);
        x[2 * i] = 1;
        y[2 * i + 1] = 1;
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return make_frame(form, std::move(pairs));
}

namespace {

// uT * G, the functional row of the constraint bilinear(u, z) == rhs on z.
Vec gram_row(const Form& form, const Vec& u) {
    const unsigned d = form.dim();
    Vec out(d, 0);
    const PrimeField& f = form.field();
    for (unsigned j = 0; j < d; ++j) {
        unsigned acc = 0;
        for (unsigned i = 0; i < d; ++i) acc += unsigned(u[i]) * form.gram_at(i, j);
        out[j] = uint8_t(acc % f.q());
    }
    return out;
}

// Vectors among super's canonical basis rows that extend a basis of sub to
// a basis of super; deterministic.
std::vector<Vec> extend_basis(const Subspace& sub, const Subspace& super) {
    std::vector<Vec> ext;
    Subspace cur = sub;
    for (unsigned i = 0; i < super.vdim(); ++i) {
        Vec r = super.row(i);
        if (contains(cur, r)) continue;
        ext.push_back(r);
        std::vector<Vec> rows{r};
        cur = sum(cur, rref(rows, super.ambient_dim(), super.field_order()));
    }
    if (cur.vdim() != super.vdim()) throw std::logic_error("extend_basis: sub not inside super");
    return ext;
}

struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

// Solves the linear system rows * z == rhs.  Throws std::runtime_error when
// inconsistent (cannot happen for independent constraint vectors under a
// non-degenerate form).
AffineSolution solve_affine(const std::vector<Vec>& rows, const Vec& rhs, unsigned d,
                            const PrimeField& f) {
    std::vector<Vec> aug;
    aug.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        Vec a = rows[i];
        a.push_back(rhs[i]);
        aug.push_back(std::move(a));
    }
    Subspace red = rref(aug, d + 1, f.q());
    std::vector<unsigned> pivots;
    std::vector<bool> is_piv(d, false);
    for (unsigned i = 0; i < red.vdim(); ++i) {
        unsigned p = 0;
        while (red.at(i, p) == 0) ++p;
        if (p == d) throw std::runtime_error("solve_affine: inconsistent system");
        pivots.push_back(p);
        is_piv[p] = true;
    }
    AffineSolution sol;
    sol.particular.assign(d, 0);
    for (unsigned i = 0; i < red.vdim(); ++i) sol.particular[pivots[i]] = red.at(i, d);
    for (unsigned free = 0; free < d; ++free) {
        if (is_piv[free]) continue;
        Vec k(d, 0);
        k[free] = 1;
        for (unsigned i = 0; i < red.vdim(); ++i) k[pivots[i]] = f.neg(red.at(i, free));
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

// First solution (coefficient odometer order) of the affine system that is
// singular; for symplectic forms every solution is.
Vec find_singular_solution(const Form& form, const std::vector<Vec>& rows, const Vec& rhs) {
    const PrimeField& f = form.field();
    AffineSolution sol = solve_affine(rows, rhs, form.dim(), f);
    if (form.kind() == FormKind::Symplectic) return sol.particular;
    Vec coeffs(sol.kernel.size(), 0);
    while (true) {
        Vec z = sol.particular;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            for (unsigned j = 0; j < z.size(); ++j) {
                z[j] = f.add(z[j], f.mul(coeffs[i], sol.kernel[i][j]));
            }
        }
        if (form.quadratic(z) == 0) return z;
        size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == f.q()) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
    }
    throw std::runtime_error("frame construction: no singular partner in solution space");
}

// Partner of v: pairs to 1 with v, to 0 with everything in ortho, singular.
Vec hyperbolic_partner(const Form& form, const Vec& v, const std::vector<Vec>& ortho) {
    std::vector<Vec> rows;
    Vec rhs;
    for (const Vec& u : ortho) {
        rows.push_back(gram_row(form, u));
        rhs.push_back(0);
    }
    rows.push_back(gram_row(form, v));
    rhs.push_back(1);
    return find_singular_solution(form, rows, rhs);
}

// Inverse of an r x r matrix over GF(q); throws std::runtime_error when singular.
std::vector<Vec> invert_matrix(std::vector<Vec> m, const PrimeField& f) {
    const unsigned r = unsigned(m.size());
    std::vector<Vec> aug;
    for (unsigned i = 0; i < r; ++i) {
        Vec row = m[i];
        row.resize(2 * r, 0);
        row[r + i] = 1;
        aug.push_back(std::move(row));
    }
    Subspace red = rref(aug, 2 * r, f.q());
    if (red.vdim() != r) throw std::runtime_error("invert_matrix: singular matrix");
    std::vector<Vec> inv(r, Vec(r, 0));
    for (unsigned i = 0; i < r; ++i) {
        unsigned p = 0;
        while (red.at(i, p) == 0) ++p;
        if (p >= r) throw std::runtime_error("invert_matrix: singular matrix");
        for (unsigned j = 0; j < r; ++j) inv[p][j] = red.at(i, r + j);
    }
    return inv;
}

Subspace span_of(const std::vector<Vec>& rows, unsigned d, unsigned q) {
    return rref(rows, d, q);
}

}  // namespace

Frame frame_through(const Form& form, const Subspace& a, const Subspace& b) {
    if (!form.totally_singular(a) || !form.totally_singular(b)) {
        throw std::invalid_argument("frame_through: inputs must be totally singular");
    }
    const unsigned d = form.dim(), n = form.witt_index(), q = form.field().q();
    const PrimeField& f = form.field();

    // Split off the parts of a and b that pair trivially with the other
    // side; the complements carry a non-degenerate pairing of rank r.
    Subspace a0 = intersect(a, form.perp(b));
    Subspace b0 = intersect(b, form.perp(a));
    Subspace c = intersect(a, b);
    const unsigned r = a.vdim() - a0.vdim();
    if (r != b.vdim() - b0.vdim()) throw std::logic_error("frame_through: pairing rank mismatch");

    std::vector<Vec> u = extend_basis(a0, a);
    std::vector<Vec> w = extend_basis(b0, b);

    // Normalize w into the dual basis of u under the pairing.
    std::vector<std::pair<Vec, Vec>> pairs;
    if (r > 0) {
        std::vector<Vec> m(r, Vec(r, 0));
        for (unsigned i = 0; i < r; ++i) {
            for (unsigned j = 0; j < r; ++j) m[i][j] = form.bilinear(u[i], w[j]);
        }
        std::vector<Vec> t = invert_matrix(std::move(m), f);
        for (unsigned j = 0; j < r; ++j) {
            Vec wj(d, 0);
            for (unsigned l = 0; l < r; ++l) {
                if (t[l][j] == 0) continue;
                for (unsigned col = 0; col < d; ++col) {
                    wj[col] = f.add(wj[col], f.mul(t[l][j], w[l][col]));
                }
            }
            pairs.emplace_back(u[j], std::move(wj));
        }
    }

    // a0 + b0 is totally singular; pair its basis chain (c, then a-part,
    // then b-part) with partners found by solving the pairing constraints.
    std::vector<Vec> dbasis;
    for (unsigned i = 0; i < c.vdim(); ++i) dbasis.push_back(c.row(i));
    for (const Vec& v : extend_basis(c, a0)) dbasis.push_back(v);
    for (const Vec& v : extend_basis(c, b0)) dbasis.push_back(v);

    for (size_t idx = 0; idx < dbasis.size(); ++idx) {
        std::vector<Vec> ortho;
        for (size_t j = 0; j < dbasis.size(); ++j) {
            if (j != idx) ortho.push_back(dbasis[j]);
        }
        for (const auto& [x, y] : pairs) {
            ortho.push_back(x);
            ortho.push_back(y);
        }
        Vec z = hyperbolic_partner(form, dbasis[idx], ortho);
        pairs.emplace_back(dbasis[idx], std::move(z));
    }

    // Complete with hyperbolic pairs of the residual space.
    while (pairs.size() < n) {
        std::vector<Vec> used;
        for (const auto& [x, y] : pairs) {
            used.push_back(x);
            used.push_back(y);
        }
        Subspace residual = form.perp(span_of(used, d, q));
        Vec v;
        for (const Subspace& p : points_of(residual)) {
            if (form.vector_singular(p.row(0))) {
                v = p.row(0);
                break;
            }
        }
        if (v.empty()) throw std::runtime_error("frame_through: no singular point in residual");
        Vec z = hyperbolic_partner(form, v, used);
        pairs.emplace_back(std::move(v), std::move(z));
    }

    Frame fr = make_frame(form, std::move(pairs));
    if (!frame_valid(form, fr)) throw std::runtime_error("frame_through: invalid frame built");

    // Postcondition: frame vectors span both inputs.
    std::vector<Vec> aspan, bspan;
    for (unsigned i = 0; i < c.vdim(); ++i) {
        aspan.push_back(c.row(i));
        bspan.push_back(c.row(i));
    }
    for (const Vec& v : extend_basis(c, a0)) aspan.push_back(v);
    for (const Vec& v : extend_basis(c, b0)) bspan.push_back(v);
    for (unsigned i = 0; i < r; ++i) {
        aspan.push_back(fr.x(i));
        bspan.push_back(fr.y(i));
    }
    if (span_of(aspan, d, q) != a || span_of(bspan, d, q) != b) {
        throw std::runtime_error("frame_through: span postcondition failed");
    }
    return fr;
}

namespace {

// Depth-first fallback: extend p to a maximal totally singular subspace
// whose intersection with s stays p Intersect s.
std::optional<Subspace> extend_dfs(const Form& form, const std::vector<Subspace>& points,
                                   const Subspace& cur, const Subspace& s,
                                   const Subspace& target) {
    if (cur.vdim() == form.witt_index()) return cur;
    for (const Subspace& p : points) {
        Vec rep = p.row(0);
        if (contains(cur, rep)) continue;
        bool orth = true;
        for (unsigned i = 0; i < cur.vdim() && orth; ++i) {
            orth = form.bilinear(cur.row(i), rep) == 0;
        }
        if (!orth) continue;
        Subspace next = sum(cur, p);
        if (intersect(next, s) != target) continue;
        if (auto found = extend_dfs(form, points, next, s, target)) return found;
    }
    return std::nullopt;
}

}  // namespace

Subspace opposite_extension(const Form& form, const Subspace& p, const Subspace& s) {
    if (!form.totally_singular(p) || !form.totally_singular(s)) {
        throw std::invalid_argument("opposite_extension: inputs must be totally singular");
    }
    if (s.vdim() != form.witt_index()) {
        throw std::invalid_argument("opposite_extension: s must be maximal");
    }
    const Subspace target = intersect(p, s);

    // Primary route: a frame through (p, s) contains exactly one vector of
    // each pair inside s; taking the partner of every s-vector, overridden
    // by p's own vectors, spans the wanted maximal.
    Frame fr = frame_through(form, p, s);
    std::vector<Vec> rows;
    bool structure_ok = true;
    for (unsigned i = 0; i < fr.pair_count(); ++i) {
        const Vec &x = fr.x(i), &y = fr.y(i);
        bool xs = contains(s, x), ys = contains(s, y);
        if (xs == ys) {
            structure_ok = false;
            break;
        }
        bool xp = contains(p, x), yp = contains(p, y);
        if (xp) {
            rows.push_back(x);
        } else if (yp) {
            rows.push_back(y);
        } else {
            rows.push_back(xs ? y : x);
        }
    }
    if (structure_ok) {
        Subspace u = rref(rows, form.dim(), form.field().q());
        if (u.vdim() == form.witt_index() && form.totally_singular(u) && contains_sub(u, p) &&
            intersect(u, s) == target) {
            return u;
        }
    }

    // Fallback: bounded depth-first extension over singular points.
    std::vector<Subspace> points;
    for (const Subspace& pt : points_of(Subspace::full(form.dim(), form.field().q()))) {
        if (form.vector_singular(pt.row(0))) points.push_back(pt);
    }
    if (auto found = extend_dfs(form, points, p, s, target)) return *found;
    throw std::runtime_error("opposite_extension: no admissible extension found");
}

}  // namespace polarcheck
