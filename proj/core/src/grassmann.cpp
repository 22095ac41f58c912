#include "polarcheck/grassmann.hpp"

#include <stdexcept>

#include "packed.hpp"
#include "parallel.hpp"

namespace polarcheck {

GrassmannGraph GrassmannGraph::build(unsigned d, unsigned k, unsigned q, int threads,
                                     uint64_t max_vertices) {
    if (!(1 < k && k < d - 1)) {
        throw std::invalid_argument("GrassmannGraph: requires 1 < k < d-1 (got k=" +
                                    std::to_string(k) + ", d=" + std::to_string(d) + ")");
    }
    uint64_t expected = gaussian_binomial(d, k, q);
    if (expected > max_vertices) {
        throw std::runtime_error("GrassmannGraph: " + std::to_string(expected) +
                                 " vertices, over the budget of " + std::to_string(max_vertices));
    }

    GrassmannGraph g;
    g.d_ = d;
    g.k_ = k;
    g.q_ = q;
    for_each_rref_matrix(k, d, q, [&](const std::vector<uint8_t>& m) {
        std::vector<Vec> rows;
        rows.reserve(k);
        for (unsigned i = 0; i < k; ++i) {
            rows.emplace_back(m.begin() + size_t(i) * d, m.begin() + size_t(i + 1) * d);
        }
        g.verts_.push_back(rref(rows, d, q));
    });
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
    if (g.verts_.size() != expected) {
        throw std::runtime_error("GrassmannGraph: enumeration does not match the Gaussian "
                                 "binomial count");
    }
    for (int i = 0; i < g.size(); ++i) g.ids_.emplace(g.verts_[size_t(i)], i);

    const size_t count = g.verts_.size();
    g.inter_.assign(count * count, 0);
    const bool packed = q == 2 && d <= 64;
    detail::PackedGf2List plist;
    if (packed) plist = detail::PackedGf2List::pack(g.verts_);
    detail::parallel_for(0, int64_t(count), threads, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            g.inter_[size_t(i) * count + size_t(i)] = int8_t(k);
            for (size_t j = size_t(i) + 1; j < count; ++j) {
                int dim = packed ? detail::interdim_gf2(plist.item(size_t(i)), int(k),
                                                        plist.item(j), int(k))
                                 : intersection_dim(g.verts_[size_t(i)], g.verts_[j]);
                g.inter_[size_t(i) * count + j] = int8_t(dim);
            }
        }
    });
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = 0; j < i; ++j) g.inter_[i * count + j] = g.inter_[j * count + i];
    }

    g.adj_.assign(count, {});
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = 0; j < count; ++j) {
            if (i != j && g.inter_[i * count + j] == int8_t(k - 1)) {
                g.adj_[i].push_back(int32_t(j));
            }
        }
    }
    return g;
}

int GrassmannGraph::vertex_id(const Subspace& s) const {
    auto it = ids_.find(s);
    return it == ids_.end() ? -1 : it->second;
}

}  // namespace polarcheck
