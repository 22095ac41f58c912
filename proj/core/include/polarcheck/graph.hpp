#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polarcheck {

using AdjacencyList = std::vector<std::vector<int32_t>>;

/// BFS distances from src; -1 marks unreachable vertices.  This is the
/// independent graph-distance oracle the dimension formulas are tested
/// against.
std::vector<int32_t> bfs_distances(const AdjacencyList& adj, int src);

bool is_connected(const AdjacencyList& adj);

/// Maximum eccentricity over all sources (all-sources BFS).
int graph_diameter(const AdjacencyList& adj, int threads = 1);

/// DOT digraph with vertex labels equal to IDs; every undirected edge is
/// emitted once, from the smaller endpoint.  labels, when given, maps local
/// vertex indices to the IDs printed (used for half-spin subgraphs whose
/// vertices carry global maximal IDs).
std::string to_dot(const AdjacencyList& adj, std::span<const int32_t> labels = {});

/// Plain adjacency list, one "ID: id id id" line per vertex in canonical order.
std::string to_adjlist(const AdjacencyList& adj, std::span<const int32_t> labels = {});

}  // namespace polarcheck
