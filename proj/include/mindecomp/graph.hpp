#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mindecomp/vertex_set.hpp"

namespace mindecomp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n, VertexSet(n)), neighbours_(n) {}

    std::size_t order() const { return neighbours_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    /// Adds {u,v}; returns false if it was already present. Self-loops throw.
    bool add_edge(Vertex u, Vertex v) {
        if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (adjacency_[u].contains(v)) return false;
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
        neighbours_[u].push_back(v);
        neighbours_[v].push_back(u);
        ++edge_count_;
        return true;
    }

    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
    const VertexSet& neighbourhood(Vertex v) const { return adjacency_[v]; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return neighbours_[v]; }
    std::size_t degree(Vertex v) const { return neighbours_[v].size(); }

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    /// Open neighbourhood of a set: every vertex adjacent to some member.
    VertexSet neighbourhood(const VertexSet& s) const {
        VertexSet out(order());
        s.for_each([&](Vertex v) { out |= adjacency_[v]; });
        return out;
    }

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            adjacency_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<VertexSet> adjacency_;
    std::vector<std::vector<Vertex>> neighbours_;
    std::size_t edge_count_ = 0;
};

/// Reads the PACE `.gr` format (`p tw n m`, 1-based edge lines, `c` comments).
/// Duplicate edges are collapsed; self-loops and out-of-range ids are errors.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p tw <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens in header");
            g = Graph(static_cast<std::size_t>(n));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "edge line before header");
        long long u = 0, v = 0;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) throw ParseError(lineno, "malformed edge line");
        const auto n = static_cast<long long>(g.order());
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    if (!have_header) throw ParseError(lineno, "missing 'p tw' header");
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p tw " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

/// Connected components of G[V \ x], ordered by smallest member.
inline std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& x) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.all_vertices() - x;
    std::vector<Vertex> stack;
    while (!remaining.empty()) {
        const Vertex start = remaining.first();
        VertexSet comp(g.order());
        comp.insert(start);
        remaining.erase(start);
        stack.assign(1, start);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(v)) {
                if (remaining.contains(w)) {
                    remaining.erase(w);
                    comp.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Connected components of G[s], ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    return components_excluding(g, g.all_vertices() - s);
}

inline bool is_connected(const Graph& g) {
    return g.order() == 0 || components_excluding(g, g.empty_set()).size() == 1;
}

/// G[s] on dense ids 0..|s|-1; `original[i]` is the id in g of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.original = s.members();
    std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<Vertex>(i);
    out.graph = Graph(out.original.size());
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        const Vertex u = out.original[i];
        for (Vertex w : g.neighbours(u))
            if (s.contains(w) && u < w) out.graph.add_edge(static_cast<Vertex>(i), local[w]);
    }
    return out;
}

}  // namespace mindecomp
