#include "polarcheck/polar_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "packed.hpp"

namespace polarcheck {

namespace {

// Enumerates all normalized vectors (first nonzero coordinate == 1) of
// GF(q)^d in lexicographic coordinate order.
std::vector<Vec> normalized_vectors(unsigned d, unsigned q) {
    std::vector<Vec> out;
    Vec v(d, 0);
    while (true) {
        unsigned i = 0;
        while (i < d && ++v[i] == q) v[i++] = 0;
        if (i == d) break;
        unsigned first = 0;
        while (first < d && v[first] == 0) ++first;
        if (v[first] == 1) out.push_back(v);
    }
    return out;
}

struct WordsHash {
    size_t operator()(const std::vector<uint64_t>& w) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Canonical packed form over GF(2): fully reduced rows sorted by pivot.
// Inserting a vector keeps the representation canonical, which makes the
// level-by-level enumeration a pure hash-set scan.
bool packed_insert(std::vector<uint64_t>& rows, uint64_t v) {
    for (uint64_t r : rows) {
        uint64_t piv = r & -r;
        if (v & piv) v ^= r;
    }
    if (v == 0) return false;
    uint64_t piv = v & -v;
    for (uint64_t& r : rows) {
        if (r & piv) r ^= v;
    }
    rows.insert(std::upper_bound(rows.begin(), rows.end(), v,
                                 [](uint64_t a, uint64_t b) { return (a & -a) < (b & -b); }),
                v);
    return true;
}

// GF(2) fast path of the level enumeration.
std::vector<Subspace> enumerate_maximals_gf2(const Form& form,
                                             const std::vector<Subspace>& points) {
    const unsigned d = form.dim(), n = form.witt_index();
    const size_t npts = points.size();
    std::vector<uint64_t> pt_word(npts), pt_gram(npts);
    for (size_t i = 0; i < npts; ++i) {
        pt_word[i] = detail::pack_gf2_row(points[i].row_data(0), d);
        pt_gram[i] = detail::pack_gf2_row(form.gram_image(points[i].row(0)).data(), d);
    }

    std::vector<std::vector<uint64_t>> level;
    level.reserve(npts);
    for (size_t i = 0; i < npts; ++i) level.push_back({pt_word[i]});

    for (unsigned k = 2; k <= n; ++k) {
        std::unordered_set<std::vector<uint64_t>, WordsHash> next;
        for (const auto& rows : level) {
            for (size_t p = 0; p < npts; ++p) {
                // p must pair to zero with every basis row of the subspace.
                bool orth = true;
                for (uint64_t r : rows) {
                    if (std::popcount(r & pt_gram[p]) & 1) {
                        orth = false;
                        break;
                    }
                }
                if (!orth) continue;
                std::vector<uint64_t> ext = rows;
                if (!packed_insert(ext, pt_word[p])) continue;  // p already inside
                next.insert(std::move(ext));
            }
        }
        level.assign(next.begin(), next.end());
    }

    std::vector<Subspace> out;
    out.reserve(level.size());
    for (const auto& rows : level) {
        std::vector<Vec> basis;
        for (uint64_t w : rows) {
            Vec row(d, 0);
            for (unsigned j = 0; j < d; ++j) row[j] = uint8_t((w >> j) & 1);
            basis.push_back(std::move(row));
        }
        out.push_back(rref(basis, d, 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Generic byte path, used for q > 2.
std::vector<Subspace> enumerate_maximals_generic(const Form& form,
                                                 const std::vector<Subspace>& points) {
    const unsigned d = form.dim(), n = form.witt_index();
    std::vector<Vec> pt_rep, pt_gram;
    for (const Subspace& p : points) {
        pt_rep.push_back(p.row(0));
        pt_gram.push_back(form.gram_image(p.row(0)));
    }

    std::vector<Subspace> level = points;
    const PrimeField& f = form.field();
    for (unsigned k = 2; k <= n; ++k) {
        std::unordered_set<Subspace, SubspaceHash> next;
        for (const Subspace& s : level) {
            for (size_t p = 0; p < points.size(); ++p) {
                bool orth = true;
                for (unsigned r = 0; r < s.vdim() && orth; ++r) {
                    unsigned acc = 0;
                    const uint8_t* row = s.row_data(r);
                    for (unsigned j = 0; j < d; ++j) acc += unsigned(row[j]) * pt_gram[p][j];
                    orth = acc % f.q() == 0;
                }
                if (!orth) continue;
                if (contains(s, pt_rep[p])) continue;
                next.insert(sum(s, points[p]));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Subspace> out(level.begin(), level.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const char* to_string(PolarType t) {
    return t == PolarType::Cn ? "Cn" : "Dn";
}

const Subspace& PolarSpace::maximal(int id) const {
    if (id < 0 || id >= maximal_count()) {
        throw std::out_of_range("PolarSpace::maximal: bad ID " + std::to_string(id));
    }
    return maximals_[size_t(id)];
}

int PolarSpace::maximal_id(const Subspace& m) const {
    auto it = maximal_ids_.find(m);
    return it == maximal_ids_.end() ? -1 : it->second;
}

uint64_t PolarSpace::expected_maximal_count(FormKind kind, unsigned n, unsigned q) {
    uint64_t count = 1;
    for (unsigned i = kind == FormKind::Symplectic ? 1 : 0;
         i <= (kind == FormKind::Symplectic ? n : n - 1); ++i) {
        uint64_t p = 1;
        for (unsigned j = 0; j < i; ++j) p *= q;
        count *= p + 1;
    }
    return count;
}

uint64_t PolarSpace::expected_point_count(FormKind kind, unsigned n, unsigned q) {
    auto qpow = [&](unsigned e) {
        uint64_t p = 1;
        for (unsigned i = 0; i < e; ++i) p *= q;
        return p;
    };
    if (kind == FormKind::Symplectic) return (qpow(2 * n) - 1) / (q - 1);
    return (qpow(n - 1) + 1) * (qpow(n) - 1) / (q - 1);
}

PolarSpace PolarSpace::build(Form form, const BuildOptions& options) {
    const unsigned d = form.dim(), n = form.witt_index(), q = form.field().q();
    uint64_t expected = expected_maximal_count(form.kind(), n, q);
    if (expected > options.max_maximals) {
        throw std::runtime_error("PolarSpace: space has " + std::to_string(expected) +
                                 " maximal singular subspaces, over the budget of " +
                                 std::to_string(options.max_maximals));
    }

    PolarSpace ps(std::move(form));
    const Form& fm = ps.form_;

    for (const Vec& v : normalized_vectors(d, q)) {
        if (!fm.vector_singular(v)) continue;
        std::vector<Vec> one{v};
        ps.points_.push_back(rref(one, d, q));
    }
    std::sort(ps.points_.begin(), ps.points_.end());

    ps.maximals_ = q == 2 ? enumerate_maximals_gf2(fm, ps.points_)
                          : enumerate_maximals_generic(fm, ps.points_);

    if (ps.maximals_.size() != expected) {
        throw std::runtime_error("PolarSpace: enumeration found " +
                                 std::to_string(ps.maximals_.size()) + " maximals, expected " +
                                 std::to_string(expected));
    }
    for (const Subspace& m : ps.maximals_) {
        if (m.vdim() != n) throw std::runtime_error("PolarSpace: maximal with wrong dimension");
    }
    for (int i = 0; i < ps.maximal_count(); ++i) ps.maximal_ids_.emplace(ps.maximals_[i], i);

    // C_n / D_n dichotomy: count maximals through every next-to-maximal
    // singular subspace; the count must be uniform (2 for D_n, >= 3 for C_n).
    std::unordered_map<Subspace, unsigned, SubspaceHash> through;
    for (const Subspace& m : ps.maximals_) {
        for (const Subspace& h : subspaces_of(m, n - 1)) ++through[h];
    }
    unsigned count = 0;
    for (const auto& [sub, c] : through) {
        if (count == 0) count = c;
        if (c != count) {
            throw std::runtime_error("PolarSpace: non-uniform maximal count through "
                                     "next-to-maximal subspaces (form bug)");
        }
    }
    if (count < 2) throw std::runtime_error("PolarSpace: degenerate incidence");
    ps.through_next_to_max_ = count;
    ps.type_ = count == 2 ? PolarType::Dn : PolarType::Cn;
    return ps;
}

}  // namespace polarcheck
