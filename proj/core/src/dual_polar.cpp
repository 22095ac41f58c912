#include "polarcheck/dual_polar.hpp"

#include <stdexcept>

#include "packed.hpp"
#include "parallel.hpp"

namespace polarcheck {

DualPolarSpace::DualPolarSpace(const PolarSpace& ps, int threads) : ps_(ps) {
    const size_t count = size_t(ps.maximal_count());
    const unsigned n = ps.rank();
    inter_.assign(count * count, 0);

    const bool packed = ps.form().field().q() == 2 && ps.form().dim() <= 64;
    detail::PackedGf2List plist;
    if (packed) plist = detail::PackedGf2List::pack(ps.maximals());

    detail::parallel_for(0, int64_t(count), threads, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            inter_[size_t(i) * count + size_t(i)] = int8_t(n);
            for (size_t j = size_t(i) + 1; j < count; ++j) {
                int dim = packed ? detail::interdim_gf2(plist.item(size_t(i)), int(n),
                                                        plist.item(j), int(n))
                                 : intersection_dim(ps.maximals()[size_t(i)], ps.maximals()[j]);
                inter_[size_t(i) * count + j] = int8_t(dim);
            }
        }
    });
    // Mirror the upper triangle.
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = 0; j < i; ++j) inter_[i * count + j] = inter_[j * count + i];
    }

    adj_.assign(count, {});
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = 0; j < count; ++j) {
            if (i != j && inter_[i * count + j] == int8_t(n - 1)) {
                adj_[i].push_back(int32_t(j));
            }
        }
    }

    // Lines: pencil of maximals through each next-to-maximal subspace.
    std::unordered_map<Subspace, std::vector<int32_t>, SubspaceHash> pencil;
    for (int id = 0; id < int(count); ++id) {
        for (const Subspace& h : subspaces_of(ps.maximals()[size_t(id)], n - 1)) {
            pencil[h].push_back(id);
        }
    }
    lines_.assign(pencil.begin(), pencil.end());
    std::sort(lines_.begin(), lines_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < int(lines_.size()); ++i) line_index_.emplace(lines_[size_t(i)].first, i);
}

const std::vector<int32_t>& DualPolarSpace::line(const Subspace& m) const {
    if (m.vdim() != rank() - 1) {
        throw std::invalid_argument("DualPolarSpace::line: subspace must have vdim n-1");
    }
    if (!ps_.form().totally_singular(m)) {
        throw std::invalid_argument("DualPolarSpace::line: subspace must be totally singular");
    }
    auto it = line_index_.find(m);
    if (it == line_index_.end()) {
        throw std::invalid_argument("DualPolarSpace::line: subspace not in the line index");
    }
    return lines_[size_t(it->second)].second;
}

}  // namespace polarcheck
