#include "polarcheck/graph.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace polarcheck {

std::vector<int32_t> bfs_distances(const AdjacencyList& adj, int src) {
    if (src < 0 || size_t(src) >= adj.size()) throw std::out_of_range("bfs: bad source");
    std::vector<int32_t> dist(adj.size(), -1);
    std::vector<int32_t> frontier{src};
    dist[src] = 0;
    int32_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<int32_t> next;
        for (int32_t v : frontier) {
            for (int32_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = depth;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

bool is_connected(const AdjacencyList& adj) {
    if (adj.empty()) return true;
    auto dist = bfs_distances(adj, 0);
    return std::none_of(dist.begin(), dist.end(), [](int32_t d) { return d < 0; });
}

int graph_diameter(const AdjacencyList& adj, int threads) {
    if (adj.empty()) return 0;
    std::atomic<int> diameter{0};
    std::atomic<bool> disconnected{false};
    detail::parallel_for(0, int64_t(adj.size()), threads, [&](int64_t lo, int64_t hi) {
        int local = 0;
        for (int64_t v = lo; v < hi; ++v) {
            for (int32_t d : bfs_distances(adj, int(v))) {
                if (d < 0) disconnected.store(true);
                local = std::max(local, int(d));
            }
        }
        int seen = diameter.load();
        while (local > seen && !diameter.compare_exchange_weak(seen, local)) {
        }
    });
    if (disconnected.load()) throw std::runtime_error("graph_diameter: graph not connected");
    return diameter.load();
}

namespace {

int32_t label_of(std::span<const int32_t> labels, size_t v) {
    return labels.empty() ? int32_t(v) : labels[v];
}

}  // namespace

std::string to_dot(const AdjacencyList& adj, std::span<const int32_t> labels) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (size_t v = 0; v < adj.size(); ++v) {
        os << "  " << label_of(labels, v) << " [label=\"" << label_of(labels, v) << "\"];\n";
    }
    for (size_t v = 0; v < adj.size(); ++v) {
        for (int32_t w : adj[v]) {
            if (int32_t(v) < w) {
                os << "  " << label_of(labels, v) << " -> " << label_of(labels, size_t(w))
                   << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_adjlist(const AdjacencyList& adj, std::span<const int32_t> labels) {
    std::ostringstream os;
    for (size_t v = 0; v < adj.size(); ++v) {
        os << label_of(labels, v) << ":";
        for (int32_t w : adj[v]) os << ' ' << label_of(labels, size_t(w));
        os << "\n";
    }
    return os.str();
}

}  // namespace polarcheck
