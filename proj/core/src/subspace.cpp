#include "polarcheck/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polarcheck {

namespace {

// In-place Gauss-Jordan elimination on a row-major byte matrix.
// Returns the rank r; afterwards rows [0, r) are the RREF basis with pivots
// in strictly increasing column order, which is exactly the canonical form.
unsigned rref_in_place(std::vector<uint8_t>& m, unsigned nrows, unsigned ncols,
                       const PrimeField& f) {
    unsigned r = 0;
    for (unsigned c = 0; c < ncols && r < nrows; ++c) {
        unsigned piv = r;
        while (piv < nrows && m[size_t(piv) * ncols + c] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != r) {
            std::swap_ranges(m.begin() + size_t(piv) * ncols,
                             m.begin() + size_t(piv + 1) * ncols,
                             m.begin() + size_t(r) * ncols);
        }
        uint8_t lead = m[size_t(r) * ncols + c];
        if (lead != 1) {
            uint8_t s = f.inv(lead);
            for (unsigned j = c; j < ncols; ++j) {
                uint8_t& x = m[size_t(r) * ncols + j];
                x = f.mul(x, s);
            }
        }
        for (unsigned i = 0; i < nrows; ++i) {
            if (i == r) continue;
            uint8_t factor = m[size_t(i) * ncols + c];
            if (factor == 0) continue;
            for (unsigned j = c; j < ncols; ++j) {
                uint8_t& x = m[size_t(i) * ncols + j];
                x = f.sub(x, f.mul(factor, m[size_t(r) * ncols + j]));
            }
        }
        ++r;
    }
    return r;
}

// Rank of n bit-packed GF(2) rows; destroys the buffer.
int rank_gf2(uint64_t* rows, int n) {
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

uint64_t pack_row_gf2(const uint8_t* row, unsigned d) {
    uint64_t w = 0;
    for (unsigned j = 0; j < d; ++j) {
        w |= uint64_t(row[j] & 1) << j;
    }
    return w;
}

int rank_bytes(std::vector<uint8_t> m, unsigned nrows, unsigned ncols, const PrimeField& f) {
    return int(rref_in_place(m, nrows, ncols, f));
}

void check_compatible(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim() || a.field_order() != b.field_order()) {
        throw std::invalid_argument(std::string(op) + ": ambient space mismatch");
    }
}

}  // namespace

Subspace Subspace::zero(unsigned ambient_dim, unsigned q) {
    return rref({}, ambient_dim, q);
}

Subspace Subspace::full(unsigned ambient_dim, unsigned q) {
    std::vector<Vec> rows;
    for (unsigned i = 0; i < ambient_dim; ++i) {
        Vec e(ambient_dim, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return rref(rows, ambient_dim, q);
}

Vec Subspace::combination(const Vec& coeffs) const {
    if (coeffs.size() != k_) throw std::invalid_argument("combination: coefficient count");
    PrimeField f(q_);
    Vec v(d_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (coeffs[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j) {
            v[j] = f.add(v[j], f.mul(coeffs[i], at(i, j)));
        }
    }
    return v;
}

bool Subspace::operator<(const Subspace& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    if (q_ != o.q_) return q_ < o.q_;
    if (k_ != o.k_) return k_ < o.k_;
    return rows_ < o.rows_;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    // FNV-1a over the canonical bytes plus the shape.
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(uint8_t(s.ambient_dim()));
    mix(uint8_t(s.field_order()));
    mix(uint8_t(s.vdim()));
    for (uint8_t b : s.bytes()) mix(b);
    return h;
}

Subspace rref(std::span<const Vec> rows, unsigned d, unsigned q) {
    PrimeField f(q);
    std::vector<uint8_t> m;
    m.reserve(rows.size() * d);
    for (const Vec& r : rows) {
        if (r.size() != d) throw std::invalid_argument("rref: row length != ambient dim");
        for (uint8_t x : r) {
            if (x >= q) throw std::invalid_argument("rref: entry not reduced mod q");
        }
        m.insert(m.end(), r.begin(), r.end());
    }
    unsigned rank = rref_in_place(m, unsigned(rows.size()), d, f);
    Subspace s;
    s.d_ = uint16_t(d);
    s.q_ = uint16_t(q);
    s.k_ = uint16_t(rank);
    s.rows_.assign(m.begin(), m.begin() + size_t(rank) * d);
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_compatible(a, b, "sum");
    std::vector<Vec> rows;
    rows.reserve(a.vdim() + b.vdim());
    for (unsigned i = 0; i < a.vdim(); ++i) rows.push_back(a.row(i));
    for (unsigned i = 0; i < b.vdim(); ++i) rows.push_back(b.row(i));
    return rref(rows, a.ambient_dim(), a.field_order());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_compatible(a, b, "intersect");
    const unsigned d = a.ambient_dim(), q = a.field_order();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(d, q);

    // Zassenhaus: reduce [A|A; B|0]; rows whose left half vanished have a
    // right half inside both spaces, and together they span the intersection.
    PrimeField f(q);
    const unsigned nrows = a.vdim() + b.vdim();
    std::vector<uint8_t> m(size_t(nrows) * 2 * d, 0);
    for (unsigned i = 0; i < a.vdim(); ++i) {
        for (unsigned j = 0; j < d; ++j) {
            m[size_t(i) * 2 * d + j] = a.at(i, j);
            m[size_t(i) * 2 * d + d + j] = a.at(i, j);
        }
    }
    for (unsigned i = 0; i < b.vdim(); ++i) {
        for (unsigned j = 0; j < d; ++j) {
            m[size_t(a.vdim() + i) * 2 * d + j] = b.at(i, j);
        }
    }
    unsigned rank = rref_in_place(m, nrows, 2 * d, f);
    std::vector<Vec> inter_rows;
    for (unsigned i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (unsigned j = 0; j < d && left_zero; ++j) {
            left_zero = m[size_t(i) * 2 * d + j] == 0;
        }
        if (left_zero) {
            inter_rows.emplace_back(m.begin() + size_t(i) * 2 * d + d,
                                    m.begin() + size_t(i + 1) * 2 * d);
        }
    }
    return rref(inter_rows, d, q);
}

int intersection_dim(const Subspace& a, const Subspace& b) {
    check_compatible(a, b, "intersection_dim");
    const int ka = int(a.vdim()), kb = int(b.vdim());
    if (ka == 0 || kb == 0) return 0;
    const unsigned d = a.ambient_dim();
    int rank;
    if (a.field_order() == 2 && d <= 64) {
        uint64_t buf[128];
        for (int i = 0; i < ka; ++i) buf[i] = pack_row_gf2(a.row_data(i), d);
        for (int i = 0; i < kb; ++i) buf[ka + i] = pack_row_gf2(b.row_data(i), d);
        rank = rank_gf2(buf, ka + kb);
    } else {
        PrimeField f(a.field_order());
        std::vector<uint8_t> m;
        m.reserve(size_t(ka + kb) * d);
        m.insert(m.end(), a.bytes().begin(), a.bytes().end());
        m.insert(m.end(), b.bytes().begin(), b.bytes().end());
        rank = rank_bytes(std::move(m), ka + kb, d, f);
    }
    return ka + kb - rank;
}

bool contains(const Subspace& a, const Vec& v) {
    if (v.size() != a.ambient_dim()) {
        throw std::invalid_argument("contains: vector length != ambient dim");
    }
    PrimeField f(a.field_order());
    Vec w = v;
    // One pass suffices: basis rows are RREF with leading 1s.
    for (unsigned i = 0; i < a.vdim(); ++i) {
        unsigned piv = 0;
        while (piv < a.ambient_dim() && a.at(i, piv) == 0) ++piv;
        uint8_t c = w[piv];
        if (c == 0) continue;
        for (unsigned j = piv; j < a.ambient_dim(); ++j) {
            w[j] = f.sub(w[j], f.mul(c, a.at(i, j)));
        }
    }
    return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool contains_sub(const Subspace& a, const Subspace& b) {
    check_compatible(a, b, "contains_sub");
    for (unsigned i = 0; i < b.vdim(); ++i) {
        if (!contains(a, b.row(i))) return false;
    }
    return true;
}

std::vector<Vec> all_vectors(const Subspace& s) {
    const unsigned q = s.field_order(), k = s.vdim();
    std::vector<Vec> out;
    Vec coeffs(k, 0);
    while (true) {
        out.push_back(s.combination(coeffs));
        unsigned i = 0;
        while (i < k && ++coeffs[i] == q) coeffs[i++] = 0;
        if (i == k) break;
    }
    return out;
}

std::vector<Subspace> points_of(const Subspace& s) {
    std::vector<Subspace> pts;
    for (const Vec& v : all_vectors(s)) {
        bool zero = std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
        if (zero) continue;
        std::vector<Vec> one{v};
        pts.push_back(rref(one, s.ambient_dim(), s.field_order()));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Subspace> subspaces_of(const Subspace& s, unsigned r) {
    if (r > s.vdim()) return {};
    std::vector<Subspace> out;
    // Enumerate r-subspaces of the coefficient space GF(q)^vdim and push
    // them through the basis.
    for_each_rref_matrix(r, s.vdim(), s.field_order(),
                         [&](const std::vector<uint8_t>& coeff_rows) {
                             std::vector<Vec> rows;
                             rows.reserve(r);
                             for (unsigned i = 0; i < r; ++i) {
                                 Vec c(coeff_rows.begin() + size_t(i) * s.vdim(),
                                       coeff_rows.begin() + size_t(i + 1) * s.vdim());
                                 rows.push_back(s.combination(c));
                             }
                             out.push_back(rref(rows, s.ambient_dim(), s.field_order()));
                         });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_rref_matrix(unsigned k, unsigned d, unsigned q,
                          const std::function<void(const std::vector<uint8_t>&)>& fn) {
    if (k > d) return;
    if (k == 0) {
        fn(std::vector<uint8_t>{});
        return;
    }
    // Pivot columns as an increasing k-subset of columns; remaining entries
    // (right of each pivot, outside later pivot columns) run a free odometer.
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    std::vector<uint8_t> m(size_t(k) * d);
    while (true) {
        std::vector<std::pair<unsigned, unsigned>> free_cells;
        std::fill(m.begin(), m.end(), 0);
        std::vector<bool> is_piv(d, false);
        for (unsigned i = 0; i < k; ++i) is_piv[piv[i]] = true;
        for (unsigned i = 0; i < k; ++i) {
            m[size_t(i) * d + piv[i]] = 1;
            for (unsigned j = piv[i] + 1; j < d; ++j) {
                if (!is_piv[j]) free_cells.emplace_back(i, j);
            }
        }
        std::vector<uint8_t> vals(free_cells.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_cells.size(); ++t) {
                m[size_t(free_cells[t].first) * d + free_cells[t].second] = vals[t];
            }
            fn(m);
            size_t t = 0;
            while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
            if (t == vals.size()) break;
        }
        // next pivot subset in lexicographic order
        int i = int(k) - 1;
        while (i >= 0 && piv[i] == d - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (unsigned j = unsigned(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

uint64_t gaussian_binomial(unsigned d, unsigned k, unsigned q) {
    if (k > d) return 0;
    // Product formula (q^d - 1)(q^{d-1} - 1).../(q^k - 1)... evaluated as an
    // exact integer by cancelling one factor at a time.
    __uint128_t result = 1;
    auto qpow = [&](unsigned e) {
        __uint128_t p = 1;
        for (unsigned i = 0; i < e; ++i) p *= q;
        return p;
    };
    for (unsigned i = 0; i < k; ++i) {
        result *= qpow(d - i) - 1;
        result /= qpow(i + 1) - 1;
    }
    return uint64_t(result);
}

std::string to_text(const Subspace& s) {
    std::ostringstream os;
    os << "d=" << s.ambient_dim() << " q=" << s.field_order() << "\n";
    for (unsigned i = 0; i < s.vdim(); ++i) {
        for (unsigned j = 0; j < s.ambient_dim(); ++j) {
            if (j) os << ' ';
            os << unsigned(s.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

Subspace subspace_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("subspace text: empty input");
    unsigned d = 0, q = 0;
    if (sscanf(header.c_str(), "d=%u q=%u", &d, &q) != 2) {
        throw std::invalid_argument("subspace text: bad header '" + header + "'");
    }
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Vec row;
        unsigned x;
        while (ls >> x) {
            if (x >= q) throw std::invalid_argument("subspace text: entry >= q");
            row.push_back(uint8_t(x));
        }
        if (!ls.eof()) throw std::invalid_argument("subspace text: non-numeric entry");
        if (row.size() != d) throw std::invalid_argument("subspace text: row length != d");
        rows.push_back(std::move(row));
    }
    return rref(rows, d, q);
}

}  // namespace polarcheck
