#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mindecomp/graph.hpp"

namespace mindecomp {

using Fingerprint = std::vector<std::size_t>;

struct PathDecomposition {
    std::vector<VertexSet> bags;
    std::size_t size() const { return bags.size(); }
};

/// Rooted tree decomposition; parent[i] is the parent bag of i, or -1 for the root.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<int> parent;
    std::size_t size() const { return bags.size(); }
};

inline std::size_t max_bag_size(const std::vector<VertexSet>& bags) {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return best;
}

inline Fingerprint fingerprint(const PathDecomposition& pd) {
    Fingerprint f;
    f.reserve(pd.bags.size());
    for (const auto& b : pd.bags) f.push_back(b.size());
    return f;
}

inline TreeDecomposition as_tree(const PathDecomposition& pd) {
    TreeDecomposition td;
    td.bags = pd.bags;
    td.parent.resize(pd.bags.size());
    for (std::size_t i = 0; i < pd.bags.size(); ++i) td.parent[i] = static_cast<int>(i) - 1;
    return td;
}

enum class Violation { none, structure, coverage, edge, contiguity, width, size };

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::structure: return "structure";
        case Violation::coverage: return "coverage";
        case Violation::edge: return "edge";
        case Violation::contiguity: return "contiguity";
        case Violation::width: return "width";
        case Violation::size: return "size";
    }
    return "?";
}

/// First violated clause of the decomposition definition plus a witness.
/// Vertex and bag witnesses are 0-based.
struct ValidationReport {
    Violation violation = Violation::none;
    std::string detail;

    bool valid() const { return violation == Violation::none; }
    explicit operator bool() const { return valid(); }

    static ValidationReport fail(Violation v, std::string d) { return {v, std::move(d)}; }
};

namespace detail {

inline std::optional<ValidationReport> check_members(const Graph& g, const std::vector<VertexSet>& bags) {
    for (std::size_t i = 0; i < bags.size(); ++i)
        if (bags[i].universe() != g.order())
            return ValidationReport::fail(Violation::structure, "bag " + std::to_string(i) + " has wrong universe");
    return std::nullopt;
}

inline std::optional<ValidationReport> check_cover_and_edges(const Graph& g, const std::vector<VertexSet>& bags) {
    VertexSet covered(g.order());
    for (const auto& b : bags) covered |= b;
    const VertexSet missing = g.all_vertices() - covered;
    if (!missing.empty())
        return ValidationReport::fail(Violation::coverage, "vertex " + std::to_string(missing.first()) + " in no bag");
    for (auto [u, v] : g.edges()) {
        const bool hit = std::any_of(bags.begin(), bags.end(),
                                     [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
        if (!hit)
            return ValidationReport::fail(Violation::edge,
                                          "edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered");
    }
    return std::nullopt;
}

inline std::optional<ValidationReport> check_width_and_size(const std::vector<VertexSet>& bags, std::size_t width,
                                                            std::optional<std::size_t> max_bags) {
    for (std::size_t i = 0; i < bags.size(); ++i)
        if (bags[i].size() > width + 1)
            return ValidationReport::fail(Violation::width, "bag " + std::to_string(i) + " has " +
                                                                std::to_string(bags[i].size()) + " vertices");
    if (max_bags && bags.size() > *max_bags)
        return ValidationReport::fail(Violation::size, std::to_string(bags.size()) + " bags exceed " +
                                                           std::to_string(*max_bags));
    return std::nullopt;
}

}  // namespace detail

inline ValidationReport validate_path(const Graph& g, const PathDecomposition& pd, std::size_t width,
                                      std::optional<std::size_t> max_bags = std::nullopt) {
    if (auto r = detail::check_members(g, pd.bags)) return *r;
    if (pd.bags.empty() && g.order() > 0) return ValidationReport::fail(Violation::coverage, "no bags");
    if (auto r = detail::check_cover_and_edges(g, pd.bags)) return *r;
    for (Vertex v = 0; v < g.order(); ++v) {
        int state = 0;  // 0 before, 1 inside, 2 after the interval
        for (std::size_t i = 0; i < pd.bags.size(); ++i) {
            const bool in = pd.bags[i].contains(v);
            if (in && state == 2)
                return ValidationReport::fail(Violation::contiguity,
                                              "vertex " + std::to_string(v) + " reappears in bag " + std::to_string(i));
            if (in) state = 1;
            else if (state == 1) state = 2;
        }
    }
    if (auto r = detail::check_width_and_size(pd.bags, width, max_bags)) return *r;
    return {};
}

/// Root index of a well-formed parent array, or nullopt if it is not a rooted tree.
inline std::optional<std::size_t> tree_root(const std::vector<int>& parent) {
    const std::size_t n = parent.size();
    std::optional<std::size_t> root;
    for (std::size_t i = 0; i < n; ++i) {
        if (parent[i] == -1) {
            if (root) return std::nullopt;
            root = i;
        } else if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= n) {
            return std::nullopt;
        }
    }
    if (!root) return std::nullopt;
    // every node must reach the root without revisiting
    std::vector<int> mark(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cur = i;
        while (parent[cur] != -1) {
            if (mark[cur] == static_cast<int>(i)) return std::nullopt;
            mark[cur] = static_cast<int>(i);
            cur = static_cast<std::size_t>(parent[cur]);
        }
    }
    return root;
}

inline std::vector<std::vector<std::size_t>> children_of(const std::vector<int>& parent) {
    std::vector<std::vector<std::size_t>> ch(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (parent[i] >= 0) ch[static_cast<std::size_t>(parent[i])].push_back(i);
    return ch;
}

inline ValidationReport validate_tree(const Graph& g, const TreeDecomposition& td, std::size_t width,
                                      std::optional<std::size_t> max_bags = std::nullopt) {
    if (td.parent.size() != td.bags.size())
        return ValidationReport::fail(Violation::structure, "parent array size mismatch");
    if (td.bags.empty()) {
        if (g.order() > 0) return ValidationReport::fail(Violation::coverage, "no bags");
        return ValidationReport::fail(Violation::structure, "empty tree");
    }
    if (!tree_root(td.parent)) return ValidationReport::fail(Violation::structure, "parent relation is not a rooted tree");
    if (auto r = detail::check_members(g, td.bags)) return *r;
    if (auto r = detail::check_cover_and_edges(g, td.bags)) return *r;
    // I_v is connected iff exactly one bag containing v has a parent not containing v.
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t tops = 0;
        for (std::size_t i = 0; i < td.bags.size(); ++i) {
            if (!td.bags[i].contains(v)) continue;
            const int p = td.parent[i];
            if (p < 0 || !td.bags[static_cast<std::size_t>(p)].contains(v)) ++tops;
        }
        if (tops > 1)
            return ValidationReport::fail(Violation::contiguity,
                                          "bags containing vertex " + std::to_string(v) + " are disconnected");
    }
    if (auto r = detail::check_width_and_size(td.bags, width, max_bags)) return *r;
    return {};
}

inline bool is_path_shaped(const TreeDecomposition& td) {
    if (!tree_root(td.parent)) return false;
    std::vector<std::size_t> degree(td.bags.size(), 0);
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (td.parent[i] >= 0) {
            ++degree[i];
            ++degree[static_cast<std::size_t>(td.parent[i])];
        }
    return std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d <= 2; });
}

/// Bags listed in path order; requires is_path_shaped(td).
inline PathDecomposition as_path(const TreeDecomposition& td) {
    PathDecomposition pd;
    if (td.bags.empty()) return pd;
    std::vector<std::vector<std::size_t>> adj(td.bags.size());
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (td.parent[i] >= 0) {
            adj[i].push_back(static_cast<std::size_t>(td.parent[i]));
            adj[static_cast<std::size_t>(td.parent[i])].push_back(i);
        }
    std::size_t start = 0;
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (adj[i].size() <= 1) {
            start = i;
            break;
        }
    std::size_t prev = td.bags.size(), cur = start;
    for (std::size_t step = 0; step < td.bags.size(); ++step) {
        pd.bags.push_back(td.bags[cur]);
        std::size_t next = td.bags.size();
        for (auto nb : adj[cur])
            if (nb != prev) next = nb;
        prev = cur;
        cur = next;
        if (cur == td.bags.size()) break;
    }
    return pd;
}

// ---------------------------------------------------------------------------
// Nice decompositions

enum class NiceKind { leaf, introduce, forget, join, none };

inline const char* to_string(NiceKind k) {
    switch (k) {
        case NiceKind::leaf: return "leaf";
        case NiceKind::introduce: return "introduce";
        case NiceKind::forget: return "forget";
        case NiceKind::join: return "join";
        case NiceKind::none: return "none";
    }
    return "?";
}

struct NiceClassification {
    bool nice = false;
    std::vector<NiceKind> kinds;
};

inline NiceClassification classify_nice(const TreeDecomposition& td) {
    NiceClassification out;
    out.kinds.assign(td.bags.size(), NiceKind::none);
    if (td.parent.size() != td.bags.size() || !tree_root(td.parent)) return out;
    const auto ch = children_of(td.parent);
    out.nice = true;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        const auto& bag = td.bags[i];
        NiceKind kind = NiceKind::none;
        if (ch[i].empty()) {
            kind = NiceKind::leaf;
        } else if (ch[i].size() == 2) {
            if (td.bags[ch[i][0]] == bag && td.bags[ch[i][1]] == bag) kind = NiceKind::join;
        } else if (ch[i].size() == 1) {
            const auto& child = td.bags[ch[i][0]];
            if (child.is_subset_of(bag) && bag.size() == child.size() + 1) kind = NiceKind::introduce;
            else if (bag.is_subset_of(child) && child.size() == bag.size() + 1) kind = NiceKind::forget;
        }
        out.kinds[i] = kind;
        if (kind == NiceKind::none) out.nice = false;
    }
    return out;
}

inline bool is_nice(const TreeDecomposition& td) { return classify_nice(td).nice; }

namespace detail {

/// Repeatedly merges tree-adjacent bags where one contains the other. Afterwards
/// no bag is a subset of a neighbour, which bounds the bag count by max(1, n).
inline std::pair<std::vector<VertexSet>, std::vector<std::vector<std::size_t>>>
contract_redundant(const TreeDecomposition& td) {
    const std::size_t n = td.bags.size();
    std::vector<VertexSet> bags = td.bags;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        if (td.parent[i] >= 0) {
            adj[i].push_back(static_cast<std::size_t>(td.parent[i]));
            adj[static_cast<std::size_t>(td.parent[i])].push_back(i);
        }
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n && !changed; ++a) {
            if (!alive[a]) continue;
            for (std::size_t b : adj[a]) {
                if (!bags[a].is_subset_of(bags[b])) continue;
                // fold a into b
                for (std::size_t c : adj[a]) {
                    if (c == b) continue;
                    std::replace(adj[c].begin(), adj[c].end(), a, b);
                    adj[b].push_back(c);
                }
                adj[b].erase(std::remove(adj[b].begin(), adj[b].end(), a), adj[b].end());
                adj[a].clear();
                alive[a] = false;
                changed = true;
                break;
            }
        }
    }
    std::vector<std::size_t> remap(n, n);
    std::vector<VertexSet> out_bags;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) {
            remap[i] = out_bags.size();
            out_bags.push_back(bags[i]);
        }
    std::vector<std::vector<std::size_t>> out_adj(out_bags.size());
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i])
            for (auto j : adj[i]) out_adj[remap[i]].push_back(remap[j]);
    return {std::move(out_bags), std::move(out_adj)};
}

}  // namespace detail

/// Converts a valid tree decomposition of g into a nice one of no larger width.
///
/// The construction works top-down from the root bag: descending into a child
/// bag adds its missing vertices one at a time, evicting a vertex the child
/// does not need only when the bag is full. Each vertex is added at most once
/// and evicted at most once per addition, which keeps the output at no more
/// than max(1, 4n) bags.
inline TreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    if (td.bags.empty()) throw std::invalid_argument("make_nice: empty decomposition");
    const std::size_t capacity = max_bag_size(td.bags);
    const auto report = validate_tree(g, td, capacity == 0 ? 0 : capacity - 1);
    if (!report) throw std::invalid_argument("make_nice: invalid input decomposition: " + report.detail);

    auto [small, adj] = detail::contract_redundant(td);

    TreeDecomposition out;
    auto add_node = [&](VertexSet bag, int parent) {
        out.bags.push_back(std::move(bag));
        out.parent.push_back(parent);
        return static_cast<int>(out.bags.size() - 1);
    };

    struct Work {
        std::size_t small_node;
        std::size_t from;  // small-tree parent, or npos for the root
        int nice_node;
    };
    const std::size_t npos = small.size();
    std::vector<Work> stack{{0, npos, add_node(small[0], -1)}};

    while (!stack.empty()) {
        const Work w = stack.back();
        stack.pop_back();
        std::vector<std::size_t> kids;
        for (auto c : adj[w.small_node])
            if (c != w.from) kids.push_back(c);
        if (kids.empty()) continue;

        const VertexSet top = out.bags[static_cast<std::size_t>(w.nice_node)];
        // Branch slots: one node with bag `top` per child, joined by a comb.
        std::vector<int> slots;
        if (kids.size() == 1) {
            slots.push_back(w.nice_node);
        } else {
            int join = w.nice_node;
            for (std::size_t j = 0; j < kids.size(); ++j) {
                if (j + 2 < kids.size()) {
                    slots.push_back(add_node(top, join));
                    join = add_node(top, join);
                } else {
                    slots.push_back(add_node(top, join));
                }
            }
        }

        for (std::size_t j = 0; j < kids.size(); ++j) {
            const VertexSet& target = small[kids[j]];
            int node = slots[j];
            VertexSet cur = top;
            for (Vertex u : (target - cur).members()) {
                if (cur.size() == capacity) {
                    cur.erase((cur - target).first());
                    node = add_node(cur, node);
                }
                cur.insert(u);
                node = add_node(cur, node);
            }
            stack.push_back({kids[j], w.small_node, node});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// .td format

/// Raw contents of a `.td` file; bag and vertex ids are 0-based here.
struct TdFile {
    std::size_t vertex_count = 0;
    std::size_t declared_max_bag = 0;
    std::vector<VertexSet> bags;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline TdFile parse_td(std::istream& in) {
    TdFile f;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t declared_bags = 0;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "s") {
            std::string kind;
            long long b = -1, w = -1, n = -1;
            if (have_header || !(ls >> kind >> b >> w >> n) || kind != "td" || b < 0 || w < 0 || n < 0)
                throw ParseError(lineno, "malformed header, expected 's td <bags> <max-bag> <n>'");
            declared_bags = static_cast<std::size_t>(b);
            f.declared_max_bag = static_cast<std::size_t>(w);
            f.vertex_count = static_cast<std::size_t>(n);
            f.bags.assign(declared_bags, VertexSet(f.vertex_count));
            seen.assign(declared_bags, false);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "content before 's td' header");
        if (first == "b") {
            long long id = 0;
            if (!(ls >> id) || id < 1 || static_cast<std::size_t>(id) > declared_bags)
                throw ParseError(lineno, "bag id out of range");
            if (seen[static_cast<std::size_t>(id - 1)]) throw ParseError(lineno, "duplicate bag id");
            seen[static_cast<std::size_t>(id - 1)] = true;
            long long v = 0;
            while (ls >> v) {
                if (v < 1 || static_cast<std::size_t>(v) > f.vertex_count) throw ParseError(lineno, "vertex id out of range");
                f.bags[static_cast<std::size_t>(id - 1)].insert(static_cast<Vertex>(v - 1));
            }
            if (!ls.eof()) throw ParseError(lineno, "malformed bag line");
            continue;
        }
        std::istringstream es(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(es >> a >> b) || (es >> extra)) throw ParseError(lineno, "malformed tree edge line");
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > declared_bags || static_cast<std::size_t>(b) > declared_bags)
            throw ParseError(lineno, "tree edge references unknown bag");
        f.edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    }
    if (!have_header) throw ParseError(lineno, "missing 's td' header");
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ParseError(lineno, "bag " + std::to_string(i + 1) + " never listed");
    return f;
}

/// Roots the edge list at bag 0; nullopt if the edges do not form a tree.
inline std::optional<TreeDecomposition> to_tree(const TdFile& f) {
    const std::size_t n = f.bags.size();
    if (n == 0 || f.edges.size() != n - 1) return std::nullopt;
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : f.edges) {
        if (a == b) return std::nullopt;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    TreeDecomposition td;
    td.bags = f.bags;
    td.parent.assign(n, -2);
    td.parent[0] = -1;
    std::vector<std::size_t> stack{0};
    std::size_t visited = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (td.parent[w] == -2) {
                td.parent[w] = static_cast<int>(v);
                ++visited;
                stack.push_back(w);
            }
    }
    if (visited != n) return std::nullopt;
    return td;
}

inline void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t vertex_count) {
    out << "s td " << td.bags.size() << ' ' << max_bag_size(td.bags) << ' ' << vertex_count << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        td.bags[i].for_each([&](Vertex v) { out << ' ' << v + 1; });
        out << '\n';
    }
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (td.parent[i] >= 0) out << td.parent[i] + 1 << ' ' << i + 1 << '\n';
}

inline void write_td(std::ostream& out, const PathDecomposition& pd, std::size_t vertex_count) {
    write_td(out, as_tree(pd), vertex_count);
}

}  // namespace mindecomp
