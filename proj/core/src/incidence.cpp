#include "polarcheck/incidence.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace polarcheck {

IncidenceGeometry ambient_incidence(const PolarSpace& ps) {
    IncidenceGeometry g;
    g.points = int(ps.points().size());
    std::unordered_map<Subspace, int, SubspaceHash> point_id;
    for (int i = 0; i < g.points; ++i) point_id.emplace(ps.points()[size_t(i)], i);

    // Totally singular lines, deduplicated through their canonical form.
    std::set<Subspace> seen;
    const Form& form = ps.form();
    for (int i = 0; i < g.points; ++i) {
        const Subspace& p = ps.points()[size_t(i)];
        for (int j = i + 1; j < g.points; ++j) {
            const Subspace& r = ps.points()[size_t(j)];
            if (form.bilinear(p.row(0), r.row(0)) != 0) continue;
            seen.insert(sum(p, r));
        }
    }
    for (const Subspace& line : seen) {
        std::vector<int32_t> ids;
        for (const Subspace& pt : points_of(line)) ids.push_back(point_id.at(pt));
        std::sort(ids.begin(), ids.end());
        g.lines.push_back(std::move(ids));
    }
    return g;
}

IncidenceGeometry dual_polar_incidence(const DualPolarSpace& dps) {
    IncidenceGeometry g;
    g.points = dps.size();
    for (const auto& [m, ids] : dps.lines()) g.lines.push_back(ids);
    return g;
}

IncidenceGeometry half_spin_incidence(const HalfSpinSpace& hss) {
    IncidenceGeometry g;
    g.points = hss.member_count();
    for (const auto& [m, ids] : hss.lines()) {
        std::vector<int32_t> local;
        local.reserve(ids.size());
        for (int32_t id : ids) local.push_back(hss.local_index(id));
        std::sort(local.begin(), local.end());
        g.lines.push_back(std::move(local));
    }
    return g;
}

namespace {

using Bitset = std::vector<uint64_t>;

Bitset make_bitset(int n) {
    return Bitset(size_t((n + 63) / 64), 0);
}
void set_bit(Bitset& b, int i) {
    b[size_t(i) / 64] |= uint64_t(1) << (i % 64);
}
bool get_bit(const Bitset& b, int i) {
    return (b[size_t(i) / 64] >> (i % 64)) & 1;
}
bool is_subset(const Bitset& a, const Bitset& b) {
    for (size_t w = 0; w < a.size(); ++w) {
        if (a[w] & ~b[w]) return false;
    }
    return true;
}

struct PairLineIndex {
    // line through a pair of collinear points, or -1
    std::vector<int32_t> idx;
    int points;
    bool unique = true;

    PairLineIndex(const IncidenceGeometry& g) : points(g.points) {
        idx.assign(size_t(points) * points, -1);
        for (int32_t l = 0; l < int32_t(g.lines.size()); ++l) {
            const auto& line = g.lines[size_t(l)];
            for (size_t a = 0; a < line.size(); ++a) {
                for (size_t b = a + 1; b < line.size(); ++b) {
                    int32_t& cell = idx[size_t(line[a]) * points + line[b]];
                    if (cell >= 0 && cell != l) unique = false;
                    cell = l;
                    idx[size_t(line[b]) * points + line[a]] = l;
                }
            }
        }
    }
    int32_t line_of(int a, int b) const { return idx[size_t(a) * points + b]; }
};

std::vector<Bitset> collinearity_bitsets(const IncidenceGeometry& g) {
    std::vector<Bitset> adj(size_t(g.points), make_bitset(g.points));
    for (const auto& line : g.lines) {
        for (size_t a = 0; a < line.size(); ++a) {
            for (size_t b = 0; b < line.size(); ++b) {
                if (a != b) set_bit(adj[size_t(line[a])], line[b]);
            }
        }
    }
    return adj;
}

}  // namespace

PolarAxiomsReport check_polar_axioms(const IncidenceGeometry& g) {
    PolarAxiomsReport rep;
    PairLineIndex pli(g);
    rep.partial_linear = pli.unique;

    std::vector<bool> on_line(size_t(g.points), false);
    rep.lines_have_3_points = true;
    for (const auto& line : g.lines) {
        if (line.size() < 3) rep.lines_have_3_points = false;
        for (int32_t p : line) on_line[size_t(p)] = true;
    }
    rep.every_point_on_a_line =
        std::all_of(on_line.begin(), on_line.end(), [](bool b) { return b; });

    auto adj = collinearity_bitsets(g);

    // Buekenhout-Shult: every point sees one or all points of every line.
    rep.buekenhout_shult = true;
    for (int p = 0; p < g.points && rep.buekenhout_shult; ++p) {
        for (const auto& line : g.lines) {
            int seen = 0;
            bool member = false;
            for (int32_t x : line) {
                if (x == p) {
                    member = true;
                    break;
                }
                if (get_bit(adj[size_t(p)], x)) ++seen;
            }
            if (member) continue;
            if (seen != 1 && seen != int(line.size())) {
                rep.buekenhout_shult = false;
                break;
            }
        }
    }

    rep.nondegenerate = true;
    for (int p = 0; p < g.points; ++p) {
        bool has_noncollinear = false;
        for (int r = 0; r < g.points; ++r) {
            if (r != p && !get_bit(adj[size_t(p)], r)) {
                has_noncollinear = true;
                break;
            }
        }
        if (!has_noncollinear) {
            rep.nondegenerate = false;
            break;
        }
    }

    rep.pass = rep.partial_linear && rep.every_point_on_a_line && rep.lines_have_3_points &&
               rep.buekenhout_shult && rep.nondegenerate;
    return rep;
}

LinearSpaceReport check_linear_space(const IncidenceGeometry& g) {
    LinearSpaceReport rep;
    rep.points = g.points;
    rep.lines = int(g.lines.size());
    rep.uniform_line_size = true;
    for (const auto& line : g.lines) {
        if (rep.line_size == 0) rep.line_size = int(line.size());
        if (int(line.size()) != rep.line_size) rep.uniform_line_size = false;
    }
    PairLineIndex pli(g);
    rep.every_pair_on_unique_line = pli.unique;
    for (int a = 0; a < g.points && rep.every_pair_on_unique_line; ++a) {
        for (int b = a + 1; b < g.points; ++b) {
            if (pli.line_of(a, b) < 0) {
                rep.every_pair_on_unique_line = false;
                break;
            }
        }
    }
    rep.pass = rep.uniform_line_size && rep.every_pair_on_unique_line;
    return rep;
}

AbstractClassification classify_abstract(const IncidenceGeometry& g) {
    AbstractClassification out;
    PairLineIndex pli(g);
    if (!pli.unique) return out;
    auto adj = collinearity_bitsets(g);

    struct Sub {
        std::vector<int32_t> pts;  // sorted
        Bitset bits;
    };

    // Closure of a point set under joining lines.
    auto close = [&](std::vector<int32_t> pts, Bitset bits) -> std::optional<Sub> {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int32_t> cur = pts;
            for (size_t a = 0; a < cur.size(); ++a) {
                for (size_t b = a + 1; b < cur.size(); ++b) {
                    int32_t l = pli.line_of(cur[a], cur[b]);
                    if (l < 0) return std::nullopt;  // pair not collinear
                    for (int32_t x : g.lines[size_t(l)]) {
                        if (!get_bit(bits, x)) {
                            set_bit(bits, x);
                            pts.push_back(x);
                            grew = true;
                        }
                    }
                }
            }
        }
        std::sort(pts.begin(), pts.end());
        return Sub{std::move(pts), std::move(bits)};
    };

    // Levels of singular subspaces: points, lines, planes, ...
    std::vector<Sub> level;
    for (const auto& line : g.lines) {
        Bitset bits = make_bitset(g.points);
        for (int32_t p : line) set_bit(bits, p);
        level.push_back(Sub{line, std::move(bits)});
    }
    unsigned rank = 2;
    std::vector<Sub> prev;
    while (true) {
        std::map<std::vector<int32_t>, Bitset> next;
        bool any_extends = false, all_extend = true;
        for (const Sub& s : level) {
            Bitset common = adj[size_t(s.pts[0])];
            for (size_t i = 1; i < s.pts.size(); ++i) {
                for (size_t w = 0; w < common.size(); ++w) {
                    common[w] &= adj[size_t(s.pts[i])][w];
                }
            }
            bool extended = false;
            for (int c = 0; c < g.points; ++c) {
                if (!get_bit(common, c) || get_bit(s.bits, c)) continue;
                Bitset bits = s.bits;
                set_bit(bits, c);
                std::vector<int32_t> pts = s.pts;
                pts.push_back(c);
                auto closed = close(std::move(pts), std::move(bits));
                if (!closed) continue;
                // The closure must stay a clique to be singular.
                bool clique = true;
                for (size_t a = 0; a < closed->pts.size() && clique; ++a) {
                    for (size_t b = a + 1; b < closed->pts.size(); ++b) {
                        if (!get_bit(adj[size_t(closed->pts[a])], closed->pts[b])) {
                            clique = false;
                            break;
                        }
                    }
                }
                if (!clique) continue;
                extended = true;
                next.emplace(closed->pts, closed->bits);
            }
            any_extends |= extended;
            all_extend &= extended;
        }
        if (!any_extends) break;
        if (!all_extend) return out;  // maximal subspaces of mixed rank
        prev = std::move(level);
        level.clear();
        for (auto& [pts, bits] : next) level.push_back(Sub{pts, bits});
        ++rank;
    }

    out.rank = rank;
    out.maximal_count = level.size();
    if (prev.empty()) return out;
    out.uniform_next_to_max = true;
    unsigned count = 0;
    for (const Sub& y : prev) {
        unsigned c = 0;
        for (const Sub& m : level) {
            if (is_subset(y.bits, m.bits)) ++c;
        }
        if (count == 0) count = c;
        if (c != count) out.uniform_next_to_max = false;
    }
    out.through_next_to_max = count;
    if (out.uniform_next_to_max && count >= 2) {
        out.valid = true;
        out.type = count == 2 ? PolarType::Dn : PolarType::Cn;
    }
    return out;
}

}  // namespace polarcheck
