#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindecomp/graph.hpp"

namespace mindecomp {

using Color = std::uint32_t;

struct ColoredGraph {
    Graph graph;
    std::vector<Color> color;
};

/// Byte string identifying a colored graph up to color-preserving isomorphism.
struct Certificate {
    std::string bytes;

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend auto operator<=>(const Certificate& a, const Certificate& b) { return a.bytes <=> b.bytes; }
};

namespace detail {

/// Compact adjacency used by the canonizer: CSR neighbour lists plus a bit matrix.
struct CanonInput {
    std::size_t n = 0;
    std::size_t row_words = 0;
    std::vector<std::uint64_t> matrix;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets;
    std::vector<Color> color;

    bool adjacent(std::size_t u, std::size_t v) const {
        return (matrix[u * row_words + v / 64] >> (v % 64)) & 1U;
    }
};

/// Individualization-refinement canonical labeling.
///
/// Refinement is colour refinement on an ordered partition; the target cell is
/// the first smallest non-singleton cell. The canonical leaf is the one whose
/// permuted adjacency matrix is lexicographically smallest. Subtrees are pruned
/// with automorphisms discovered from equal leaves (orbit pruning and jumps back
/// to the divergence point), which keeps highly symmetric inputs tractable.
class Canonizer {
public:
    explicit Canonizer(const CanonInput& in) : in_(in) {}

    Certificate run(std::size_t* leaves_visited = nullptr) {
        std::vector<std::uint32_t> cells(in_.n);
        // initial ordered partition: by colour value
        std::vector<Color> sorted_colors = in_.color;
        std::sort(sorted_colors.begin(), sorted_colors.end());
        sorted_colors.erase(std::unique(sorted_colors.begin(), sorted_colors.end()), sorted_colors.end());
        for (std::size_t v = 0; v < in_.n; ++v)
            cells[v] = static_cast<std::uint32_t>(
                std::lower_bound(sorted_colors.begin(), sorted_colors.end(), in_.color[v]) - sorted_colors.begin());
        refine(cells);
        std::vector<std::uint32_t> path;
        if (in_.n > 0) search(cells, path);
        if (leaves_visited) *leaves_visited = leaves_;

        Certificate cert;
        auto put = [&](std::uint32_t x) {
            char buf[4];
            std::memcpy(buf, &x, 4);
            cert.bytes.append(buf, 4);
        };
        put(static_cast<std::uint32_t>(in_.n));
        std::vector<Color> colors = in_.color;
        std::sort(colors.begin(), colors.end());
        for (auto c : colors) put(c);
        for (auto w : best_code_) {
            char buf[8];
            std::memcpy(buf, &w, 8);
            cert.bytes.append(buf, 8);
        }
        return cert;
    }

    const std::vector<std::uint32_t>& canonical_labeling() const { return best_lab_; }

private:
    static constexpr int kContinue = -1;

    std::size_t cell_count(const std::vector<std::uint32_t>& cells) const {
        std::uint32_t mx = 0;
        for (auto c : cells) mx = std::max(mx, c);
        return in_.n == 0 ? 0 : mx + 1;
    }

    // Colour refinement; colours are ranks so the ordered partition is kept.
    void refine(std::vector<std::uint32_t>& cells) {
        const std::size_t n = in_.n;
        std::vector<std::uint32_t> order(n);
        std::vector<std::uint32_t> sig_start(n + 1);
        std::vector<std::uint32_t> sig(in_.targets.size());
        std::size_t count = cell_count(cells);
        while (count < n) {
            for (std::size_t v = 0; v < n; ++v) {
                sig_start[v] = in_.offsets[v];
                for (auto i = in_.offsets[v]; i < in_.offsets[v + 1]; ++i) sig[i] = cells[in_.targets[i]];
                std::sort(sig.begin() + in_.offsets[v], sig.begin() + in_.offsets[v + 1]);
            }
            std::iota(order.begin(), order.end(), 0U);
            auto less = [&](std::uint32_t a, std::uint32_t b) {
                if (cells[a] != cells[b]) return cells[a] < cells[b];
                return std::lexicographical_compare(sig.begin() + in_.offsets[a], sig.begin() + in_.offsets[a + 1],
                                                    sig.begin() + in_.offsets[b], sig.begin() + in_.offsets[b + 1]);
            };
            std::sort(order.begin(), order.end(), less);
            std::vector<std::uint32_t> next(n);
            std::uint32_t rank = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i > 0 && less(order[i - 1], order[i])) ++rank;
                next[order[i]] = rank;
            }
            const std::size_t next_count = rank + 1;
            cells.swap(next);
            if (next_count == count) break;
            count = next_count;
        }
    }

    std::vector<std::uint32_t> individualize(const std::vector<std::uint32_t>& cells, std::uint32_t v) const {
        std::vector<std::uint32_t> out(in_.n);
        for (std::size_t u = 0; u < in_.n; ++u)
            out[u] = 2 * cells[u] + ((cells[u] == cells[v] && u != v) ? 1U : 0U);
        // compress to ranks
        std::vector<std::uint32_t> vals(out);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (auto& c : out)
            c = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
        return out;
    }

    std::vector<std::uint64_t> encode(const std::vector<std::uint32_t>& lab) const {
        const std::size_t n = in_.n;
        const std::size_t bits = n * (n - 1) / 2;
        std::vector<std::uint64_t> code((bits + 63) / 64, 0);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++pos)
                if (in_.adjacent(lab[i], lab[j])) code[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
        return code;
    }

    static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return i;
    }

    void record_automorphism(const std::vector<std::uint32_t>& from_lab, const std::vector<std::uint32_t>& to_lab) {
        std::vector<std::uint32_t> gamma(in_.n);
        for (std::size_t i = 0; i < in_.n; ++i) gamma[from_lab[i]] = to_lab[i];
        generators_.push_back(std::move(gamma));
    }

    std::uint32_t find(std::vector<std::uint32_t>& uf, std::uint32_t x) const {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }

    int search(const std::vector<std::uint32_t>& cells, std::vector<std::uint32_t>& path) {
        const std::size_t n = in_.n;
        const std::size_t depth = path.size();
        if (cell_count(cells) == n) {
            ++leaves_;
            std::vector<std::uint32_t> lab(n);
            for (std::size_t v = 0; v < n; ++v) lab[cells[v]] = static_cast<std::uint32_t>(v);
            auto code = encode(lab);
            if (first_lab_.empty()) {
                first_lab_ = lab;
                first_code_ = code;
                first_path_ = path;
                best_lab_ = lab;
                best_code_ = std::move(code);
                best_path_ = path;
                return kContinue;
            }
            if (code == first_code_) {
                record_automorphism(first_lab_, lab);
                return static_cast<int>(common_prefix(path, first_path_));
            }
            if (code == best_code_) {
                record_automorphism(best_lab_, lab);
                return static_cast<int>(common_prefix(path, best_path_));
            }
            if (code < best_code_) {
                best_lab_ = std::move(lab);
                best_code_ = std::move(code);
                best_path_ = path;
            }
            return kContinue;
        }

        // first smallest non-singleton cell
        std::vector<std::uint32_t> sizes(cell_count(cells), 0);
        for (auto c : cells) ++sizes[c];
        std::uint32_t target = 0;
        std::uint32_t target_size = static_cast<std::uint32_t>(n + 1);
        for (std::uint32_t c = 0; c < sizes.size(); ++c)
            if (sizes[c] > 1 && sizes[c] < target_size) {
                target = c;
                target_size = sizes[c];
            }
        std::vector<std::uint32_t> members;
        for (std::uint32_t v = 0; v < n; ++v)
            if (cells[v] == target) members.push_back(v);

        std::vector<std::uint32_t> explored;
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::vector<std::uint32_t> uf;
        for (auto v : members) {
            if (!explored.empty()) {
                if (gens_seen != generators_.size()) {
                    // orbits of the group generated by automorphisms fixing the current path
                    uf.resize(n);
                    std::iota(uf.begin(), uf.end(), 0U);
                    for (const auto& g : generators_) {
                        bool fixes = true;
                        for (auto p : path)
                            if (g[p] != p) {
                                fixes = false;
                                break;
                            }
                        if (!fixes) continue;
                        for (std::uint32_t x = 0; x < n; ++x) {
                            const auto a = find(uf, x), b = find(uf, g[x]);
                            if (a != b) uf[a] = b;
                        }
                    }
                    gens_seen = generators_.size();
                }
                const auto rv = find(uf, v);
                bool equivalent = false;
                for (auto e : explored)
                    if (find(uf, e) == rv) {
                        equivalent = true;
                        break;
                    }
                if (equivalent) continue;
            }
            auto child = individualize(cells, v);
            refine(child);
            path.push_back(v);
            const int r = search(child, path);
            path.pop_back();
            explored.push_back(v);
            if (r != kContinue && static_cast<std::size_t>(r) < depth) return r;
        }
        return kContinue;
    }

    const CanonInput& in_;
    std::vector<std::uint32_t> first_lab_, best_lab_;
    std::vector<std::uint64_t> first_code_, best_code_;
    std::vector<std::uint32_t> first_path_, best_path_;
    std::vector<std::vector<std::uint32_t>> generators_;
    std::size_t leaves_ = 0;
};

/// Builds the canonizer input for G[s] with the given colour per original vertex.
template <class ColorOf>
CanonInput make_canon_input(const Graph& g, const VertexSet& s, ColorOf&& color_of) {
    CanonInput in;
    const auto members = s.members();
    in.n = members.size();
    in.row_words = (in.n + 63) / 64;
    in.matrix.assign(in.n * in.row_words, 0);
    in.offsets.assign(in.n + 1, 0);
    in.color.resize(in.n);
    std::vector<std::uint32_t> local(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < members.size(); ++i) {
        in.color[i] = color_of(members[i]);
        for (Vertex w : g.neighbours(members[i]))
            if (s.contains(w)) {
                const auto j = local[w];
                in.targets.push_back(j);
                in.matrix[i * in.row_words + j / 64] |= std::uint64_t{1} << (j % 64);
            }
        in.offsets[i + 1] = static_cast<std::uint32_t>(in.targets.size());
    }
    return in;
}

}  // namespace detail

/// Canonical certificate: equal exactly for colour-preserving isomorphic graphs.
inline Certificate certificate(const ColoredGraph& cg) {
    if (cg.color.size() != cg.graph.order()) throw std::invalid_argument("certificate: one colour per vertex required");
    const auto in =
        detail::make_canon_input(cg.graph, cg.graph.all_vertices(), [&](Vertex v) { return cg.color[v]; });
    return detail::Canonizer(in).run();
}

// ---------------------------------------------------------------------------
// Good pairs

struct GoodPair {
    VertexSet x;
    VertexSet w;
};

/// x ∩ w = ∅ and N(w) ⊆ w ∪ x; the |x| ≤ k+1 clause is checked by callers that know k.
inline bool is_good_pair(const Graph& g, const GoodPair& p) {
    if (p.x.universe() != g.order() || p.w.universe() != g.order()) return false;
    if (p.x.intersects(p.w)) return false;
    return g.neighbourhood(p.w).is_subset_of(p.w | p.x);
}

inline void require_good_pair(const Graph& g, const GoodPair& p) {
    if (!is_good_pair(g, p)) throw std::invalid_argument("not a good pair: W must be a union of components of G - X");
}

/// Memo key of a good pair. With the default (per-X) keys, x_sorted holds X's
/// original ids; anonymized keys leave it empty and merge pairs across X.
struct CanonKey {
    std::vector<Vertex> x_sorted;
    Certificate cert;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const {
        std::size_t h = std::hash<std::string_view>{}(k.cert.bytes);
        for (auto v : k.x_sorted) h = (h ^ v) * 0x100000001b3ULL;
        return h;
    }
};

enum class KeyMode { per_x, anonymized };

/// Certificate of G[X ∪ W] with the i-th smallest X vertex coloured i (1-based) and W coloured 0.
/// In anonymized mode every X vertex gets colour 1 and x_sorted stays empty.
inline CanonKey canon_key_unchecked(const Graph& g, const GoodPair& p, KeyMode mode = KeyMode::per_x) {
    CanonKey key;
    const auto xs = p.x.members();
    std::vector<Color> x_color(g.order(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        x_color[xs[i]] = mode == KeyMode::per_x ? static_cast<Color>(i + 1) : Color{1};
    const auto in = detail::make_canon_input(g, p.x | p.w, [&](Vertex v) { return x_color[v]; });
    key.cert = detail::Canonizer(in).run();
    if (mode == KeyMode::per_x) key.x_sorted = xs;
    return key;
}

inline CanonKey canon_key(const Graph& g, const GoodPair& p, KeyMode mode = KeyMode::per_x) {
    require_good_pair(g, p);
    return canon_key_unchecked(g, p, mode);
}

/// One isomorphism class of basic good pairs (X, C) for components C of G[W].
struct ComponentClass {
    Certificate cert;
    std::vector<VertexSet> members;  // ordered by smallest vertex id
    std::size_t count() const { return members.size(); }
};

/// Components of G[W] grouped by the isomorphism class of (X, component),
/// classes ordered by certificate bytes.
inline std::vector<ComponentClass> component_classes(const Graph& g, const GoodPair& p) {
    require_good_pair(g, p);
    std::map<Certificate, std::vector<VertexSet>> grouped;
    for (auto& comp : components_within(g, p.w)) {
        auto key = canon_key_unchecked(g, GoodPair{p.x, comp});
        grouped[std::move(key.cert)].push_back(std::move(comp));
    }
    std::vector<ComponentClass> out;
    out.reserve(grouped.size());
    for (auto& [cert, members] : grouped) out.push_back({cert, std::move(members)});
    return out;
}

}  // namespace mindecomp
