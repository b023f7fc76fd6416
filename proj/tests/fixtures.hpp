#pragma once

#include <cstdint>
#include <random>

#include "domstruct/graph.hpp"

namespace fixtures {

using domstruct::EdgeList;
using domstruct::Graph;

inline Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

inline Graph star(int leaves) {
    EdgeList e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

// outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)
inline Graph petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

// triangles 0-1-2 and 3-4-5 joined by the matching i-(i+3)
inline Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

// Q3: ids differing in exactly one bit are adjacent
inline Graph cube() {
    EdgeList e;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4})
            if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
    return Graph::from_edges(8, e);
}

// two triangles sharing vertex 0
inline Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&] { return (rng() >> 11) * 0x1.0p-53 < p; };
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin()) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph random_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = random_graph(n, p, seed + 0x51ed2701ULL * attempt);
        if (domstruct::is_connected(g)) return g;
    }
}

}  // namespace fixtures
