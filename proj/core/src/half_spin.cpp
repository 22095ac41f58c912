#include "polarcheck/half_spin.hpp"

#include <atomic>
#include <stdexcept>

#include "packed.hpp"
#include "parallel.hpp"

namespace polarcheck {

bool HalfSpinSpace::contains_id(int global_id) const {
    return global_id >= 0 && size_t(global_id) < local_of_global_.size() &&
           local_of_global_[size_t(global_id)] >= 0;
}

int HalfSpinSpace::local_index(int global_id) const {
    if (!contains_id(global_id)) {
        throw std::invalid_argument("HalfSpinSpace: ID " + std::to_string(global_id) +
                                    " is outside family " + delta_);
    }
    return local_of_global_[size_t(global_id)];
}

int HalfSpinSpace::intersection_vdim(int s_id, int u_id) const {
    return intersection_vdim_local(local_index(s_id), local_index(u_id));
}

bool HalfSpinSpace::collinear(int s_id, int u_id) const {
    if (s_id == u_id) {
        local_index(s_id);  // still validate membership
        return false;
    }
    return intersection_vdim(s_id, u_id) == int(rank()) - 2;
}

int HalfSpinSpace::distance(int s_id, int u_id) const {
    int a = local_index(s_id), b = local_index(u_id);
    return bfs_distances(adj_, a)[size_t(b)];
}

bool HalfSpinSpace::opposite(int s_id, int u_id) const {
    return opposite_local(local_index(s_id), local_index(u_id));
}

const std::vector<int32_t>& HalfSpinSpace::line(const Subspace& m) const {
    if (m.vdim() != rank() - 2) {
        throw std::invalid_argument("HalfSpinSpace::line: subspace must have vdim n-2");
    }
    if (!ps_.form().totally_singular(m)) {
        throw std::invalid_argument("HalfSpinSpace::line: subspace must be totally singular");
    }
    auto it = line_index_.find(m);
    if (it == line_index_.end()) {
        throw std::invalid_argument("HalfSpinSpace::line: subspace not in the line index");
    }
    return lines_[size_t(it->second)].second;
}

std::vector<int32_t> HalfSpinSpace::bfs_from(int s_id) const {
    return bfs_distances(adj_, local_index(s_id));
}

void HalfSpinSpace::finish(int threads) {
    (void)threads;
    const size_t m = members_.size();
    const unsigned n = rank();

    adj_.assign(m, {});
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            if (a != b && inter_[a * m + b] == int8_t(n - 2)) adj_[a].push_back(int32_t(b));
        }
    }

    std::unordered_map<Subspace, std::vector<int32_t>, SubspaceHash> pencil;
    for (int32_t id : members_) {
        for (const Subspace& h : subspaces_of(ps_.maximals()[size_t(id)], n - 2)) {
            pencil[h].push_back(id);
        }
    }
    lines_.assign(pencil.begin(), pencil.end());
    std::sort(lines_.begin(), lines_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < int(lines_.size()); ++i) line_index_.emplace(lines_[size_t(i)].first, i);
}

std::pair<HalfSpinSpace, HalfSpinSpace> split_families(const PolarSpace& ps, int threads) {
    if (ps.type() != PolarType::Dn) {
        throw std::invalid_argument("split_families: polar space must be of type Dn");
    }
    const size_t count = size_t(ps.maximal_count());
    const unsigned n = ps.rank();
    if (count == 0) throw std::invalid_argument("split_families: empty space");

    const bool packed = ps.form().field().q() == 2 && ps.form().dim() <= 64;
    detail::PackedGf2List plist;
    if (packed) plist = detail::PackedGf2List::pack(ps.maximals());
    auto interdim = [&](size_t i, size_t j) {
        return packed
                   ? detail::interdim_gf2(plist.item(i), int(n), plist.item(j), int(n))
                   : intersection_dim(ps.maximals()[i], ps.maximals()[j]);
    };

    // Assign families by distance parity relative to the anchor (ID 0).
    std::vector<uint8_t> parity(count, 0);
    for (size_t i = 1; i < count; ++i) parity[i] = uint8_t((n - unsigned(interdim(0, i))) % 2);

    HalfSpinSpace plus(ps), minus(ps);
    plus.delta_ = '+';
    minus.delta_ = '-';
    plus.local_of_global_.assign(count, -1);
    minus.local_of_global_.assign(count, -1);
    for (size_t i = 0; i < count; ++i) {
        HalfSpinSpace& fam = parity[i] == 0 ? plus : minus;
        fam.local_of_global_[i] = int32_t(fam.members_.size());
        fam.members_.push_back(int32_t(i));
    }

    // Verify the parity rule on every pair: even distance within a family,
    // odd across.  That proves the anchor-based split is well defined.
    // Same-family intersection dimensions are harvested into the local
    // matrices along the way.
    const size_t mp = plus.members_.size(), mm = minus.members_.size();
    plus.inter_.assign(mp * mp, 0);
    minus.inter_.assign(mm * mm, 0);
    for (size_t i = 0; i < mp; ++i) plus.inter_[i * mp + i] = int8_t(n);
    for (size_t i = 0; i < mm; ++i) minus.inter_[i * mm + i] = int8_t(n);

    std::atomic<bool> parity_ok{true};
    detail::parallel_for(0, int64_t(count), threads, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            for (size_t j = size_t(i) + 1; j < count; ++j) {
                int dim = interdim(size_t(i), j);
                unsigned dist = n - unsigned(dim);
                bool same_family = parity[size_t(i)] == parity[j];
                if (same_family != (dist % 2 == 0)) parity_ok.store(false);
                if (!same_family) continue;
                HalfSpinSpace& fam = parity[size_t(i)] == 0 ? plus : minus;
                size_t a = size_t(fam.local_of_global_[size_t(i)]);
                size_t b = size_t(fam.local_of_global_[j]);
                size_t width = fam.members_.size();
                fam.inter_[a * width + b] = int8_t(dim);
                fam.inter_[b * width + a] = int8_t(dim);
            }
        }
    });
    if (!parity_ok.load()) {
        throw std::runtime_error("split_families: distance parity is not family-invariant");
    }
    if (plus.members_.size() != minus.members_.size()) {
        throw std::runtime_error("split_families: families have different sizes");
    }

    plus.finish(threads);
    minus.finish(threads);
    return {std::move(plus), std::move(minus)};
}

}  // namespace polarcheck
