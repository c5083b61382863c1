#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "mindecomp/mindecomp.hpp"

namespace testing_support {

using namespace mindecomp;

/// Graph from 1-based edge pairs.
inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    return g;
}

/// Vertex set from 1-based ids.
inline VertexSet vs(std::size_t n, std::initializer_list<int> ids) {
    VertexSet s(n);
    for (int v : ids) s.insert(static_cast<Vertex>(v - 1));
    return s;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Centre 1 with leaves 2..leaves+1.
inline Graph star(std::size_t leaves) { return spider(leaves, 1); }

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Certificate graph_certificate(const Graph& g) {
    return certificate(ColoredGraph{g, std::vector<Color>(g.order(), 0)});
}

/// One representative per isomorphism class of connected graphs on exactly n vertices,
/// grown by attaching a vertex to every nonempty subset of a smaller representative.
inline std::vector<std::vector<Graph>> connected_graphs_up_to(std::size_t max_n) {
    std::vector<std::vector<Graph>> by_n(max_n + 1);
    if (max_n >= 1) by_n[1].push_back(Graph(1));
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<Certificate, Graph> seen;
        for (const auto& base : by_n[n - 1]) {
            for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (Vertex u = 0; u + 1 < n; ++u)
                    if ((mask >> u) & 1U) g.add_edge(u, static_cast<Vertex>(n - 1));
                seen.emplace(graph_certificate(g), std::move(g));
            }
        }
        for (auto& [cert, g] : seen) by_n[n].push_back(std::move(g));
    }
    return by_n;
}

inline std::vector<Graph> small_suite(std::size_t max_n) {
    std::vector<Graph> out;
    for (auto& level : connected_graphs_up_to(max_n))
        for (auto& g : level) out.push_back(std::move(g));
    return out;
}

}  // namespace testing_support
