#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mindecomp/decomposition.hpp"
#include "mindecomp/graph.hpp"

namespace mindecomp {

// ---------------------------------------------------------------------------
// Problem instances

/// Triples (p, q, r) over three n-element sides, indices 0..n-1.
struct TripleSystem {
    std::size_t n = 0;
    std::vector<std::array<std::size_t, 3>> triples;

    /// Throws unless every index is in range and no element lies in more than three triples.
    void check() const {
        std::vector<std::array<std::size_t, 3>> load(n, {0, 0, 0});
        for (const auto& t : triples)
            for (std::size_t side = 0; side < 3; ++side) {
                if (t[side] >= n) throw std::invalid_argument("triple index out of range");
                if (++load[t[side]][side] > 3) throw std::invalid_argument("element in more than three triples");
            }
    }
};

/// Three lists of n bit strings of common length, written as '0'/'1' characters.
struct S3GInstance {
    std::vector<std::string> a, b, c;

    std::size_t n() const { return a.size(); }
    std::size_t length() const { return a.empty() ? 0 : a.front().size(); }

    void check() const {
        if (b.size() != a.size() || c.size() != a.size()) throw std::invalid_argument("sides differ in size");
        const std::size_t len = length();
        for (const auto* side : {&a, &b, &c})
            for (const auto& s : *side) {
                if (s.size() != len) throw std::invalid_argument("strings differ in length");
                if (s.find_first_not_of("01") != std::string::npos) throw std::invalid_argument("non-binary string");
            }
    }
};

/// True when x + y + z ⪯ 1 position-wise.
inline bool fits(const std::string& x, const std::string& y, const std::string& z) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if ((x[i] == '1') + (y[i] == '1') + (z[i] == '1') > 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// File formats

inline TripleSystem parse_3dm(std::istream& in) {
    TripleSystem t;
    std::string line;
    std::size_t lineno = 0, expected = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long n = -1, m = -1;
            if (header || !(ls >> kind >> n >> m) || kind != "3dm" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p 3dm <n> <t>'");
            t.n = static_cast<std::size_t>(n);
            expected = static_cast<std::size_t>(m);
            header = true;
            continue;
        }
        if (!header) throw ParseError(lineno, "triple before header");
        std::istringstream es(line);
        long long p = -1, q = -1, r = -1;
        std::string extra;
        if (!(es >> p >> q >> r) || (es >> extra)) throw ParseError(lineno, "malformed triple");
        const auto n = static_cast<long long>(t.n);
        if (p < 0 || q < 0 || r < 0 || p >= n || q >= n || r >= n) throw ParseError(lineno, "index out of range");
        t.triples.push_back({static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(r)});
    }
    if (!header) throw ParseError(lineno, "missing 'p 3dm' header");
    if (t.triples.size() != expected) throw ParseError(lineno, "triple count differs from header");
    return t;
}

inline void write_3dm(std::ostream& out, const TripleSystem& t) {
    out << "p 3dm " << t.n << ' ' << t.triples.size() << '\n';
    for (const auto& tr : t.triples) out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
}

inline S3GInstance parse_s3g(std::istream& in) {
    S3GInstance s;
    std::string line;
    std::size_t lineno = 0, n = 0, len = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long nn = -1, ll = -1;
            if (header || !(ls >> kind >> nn >> ll) || kind != "s3g" || nn < 0 || ll < 0)
                throw ParseError(lineno, "malformed header, expected 'p s3g <n> <L>'");
            n = static_cast<std::size_t>(nn);
            len = static_cast<std::size_t>(ll);
            header = true;
            continue;
        }
        if (!header) throw ParseError(lineno, "string before header");
        std::string bits, extra;
        if (!(ls >> bits) || (ls >> extra)) throw ParseError(lineno, "malformed string line");
        if (bits.size() != len || bits.find_first_not_of("01") != std::string::npos)
            throw ParseError(lineno, "string is not a length-" + std::to_string(len) + " bit string");
        if (first == "A") s.a.push_back(bits);
        else if (first == "B") s.b.push_back(bits);
        else if (first == "C") s.c.push_back(bits);
        else throw ParseError(lineno, "expected A, B or C");
    }
    if (!header) throw ParseError(lineno, "missing 'p s3g' header");
    if (s.a.size() != n || s.b.size() != n || s.c.size() != n) throw ParseError(lineno, "side sizes differ from header");
    return s;
}

inline void write_s3g(std::ostream& out, const S3GInstance& s) {
    out << "p s3g " << s.n() << ' ' << s.length() << '\n';
    for (const auto& x : s.a) out << "A " << x << '\n';
    for (const auto& x : s.b) out << "B " << x << '\n';
    for (const auto& x : s.c) out << "C " << x << '\n';
}

// ---------------------------------------------------------------------------
// Clique chains

struct ImplementSpec {
    std::size_t capacity = 0;  ///< maximum bag size K
    Fingerprint w;
};

/// Entry bound 2K/3 < w_i ≤ K, compared exactly.
inline bool entry_in_range(std::size_t capacity, std::size_t wi) { return 3 * wi > 2 * capacity && wi <= capacity; }

struct CliqueChain {
    Graph graph;
    std::size_t capacity = 0;
    Fingerprint w;
    std::vector<std::vector<Vertex>> base;     ///< C_0..C_r
    std::vector<std::vector<Vertex>> pendant;  ///< C^p_1..C^p_r, index i-1
    /// Maximal clique M_i = C_{i-1} ∪ C_i ∪ C^p_i, index i-1.
    std::vector<VertexSet> maximal_cliques() const {
        std::vector<VertexSet> out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            VertexSet m(graph.order());
            for (auto v : base[i]) m.insert(v);
            for (auto v : base[i + 1]) m.insert(v);
            for (auto v : pendant[i]) m.insert(v);
            out.push_back(std::move(m));
        }
        return out;
    }
    /// The path decomposition (M_1, ..., M_r); its fingerprint is w.
    PathDecomposition minimal_path() const { return PathDecomposition{maximal_cliques()}; }
};

inline CliqueChain clique_chain(const ImplementSpec& spec) {
    const std::size_t k = spec.capacity;
    if (k < 3) throw std::invalid_argument("clique chain capacity must be at least 3");
    if (spec.w.empty()) throw std::invalid_argument("clique chain needs a nonempty vector");
    const std::size_t third = k / 3;
    for (auto wi : spec.w)
        if (!entry_in_range(k, wi))
            throw std::invalid_argument("entry " + std::to_string(wi) + " outside (2K/3, K] for K=" + std::to_string(k));
    const std::size_t r = spec.w.size();
    std::size_t n = (r + 1) * third;
    for (auto wi : spec.w) n += wi - 2 * third;

    CliqueChain out;
    out.capacity = k;
    out.w = spec.w;
    out.graph = Graph(n);
    Vertex next = 0;
    auto fresh_clique = [&](std::size_t size) {
        std::vector<Vertex> c(size);
        for (auto& v : c) v = next++;
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) out.graph.add_edge(c[i], c[j]);
        return c;
    };
    auto join = [&](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
        for (auto u : x)
            for (auto v : y) out.graph.add_edge(u, v);
    };
    for (std::size_t i = 0; i <= r; ++i) out.base.push_back(fresh_clique(third));
    for (std::size_t i = 1; i <= r; ++i) join(out.base[i - 1], out.base[i]);
    for (std::size_t i = 1; i <= r; ++i) {
        out.pendant.push_back(fresh_clique(spec.w[i - 1] - 2 * third));
        join(out.pendant.back(), out.base[i - 1]);
        join(out.pendant.back(), out.base[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// 3DM to String 3-Groups

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    return bits;
}

/// Binary of i on ceil(log2 n) bits followed by its complement.
inline std::string nb_prime(std::size_t i, std::size_t n) {
    if (n == 0 || i >= n) throw std::out_of_range("nb_prime index out of range");
    const std::size_t bits = ceil_log2(n);
    std::string s(2 * bits, '0');
    for (std::size_t b = 0; b < bits; ++b) {
        const bool one = (i >> (bits - 1 - b)) & 1U;
        s[b] = one ? '1' : '0';
        s[bits + b] = one ? '0' : '1';
    }
    return s;
}

inline std::string complement(std::string s) {
    for (auto& ch : s) ch = ch == '1' ? '0' : '1';
    return s;
}

/// Strings per side equal |T| plus the number of R elements in no triple. Each such
/// element gets one extra all-ones C string, which no group can absorb, so the
/// instance stays infeasible exactly when the triple system is.
inline S3GInstance s3g_from_3dm(const TripleSystem& t) {
    t.check();
    const std::size_t n = t.n;
    if (n == 0) return {};
    const std::size_t alpha = 2 * ceil_log2(n);
    const std::string zeros(alpha, '0');
    std::vector<std::size_t> c_r(n, 0);
    for (const auto& tr : t.triples) ++c_r[tr[2]];

    S3GInstance s;
    for (const auto& tr : t.triples)
        s.c.push_back(complement(nb_prime(tr[0], n)) + complement(nb_prime(tr[1], n)) + complement(nb_prime(tr[2], n)) +
                      "00");
    for (std::size_t p = 0; p < n; ++p) s.a.push_back(nb_prime(p, n) + zeros + zeros + "10");
    for (std::size_t q = 0; q < n; ++q) s.b.push_back(zeros + nb_prime(q, n) + zeros + "01");
    for (std::size_t r = 0; r < n; ++r) {
        if (c_r[r] == 0) {
            s.c.push_back(std::string(3 * alpha + 2, '1'));
            continue;
        }
        for (std::size_t j = 1; j < c_r[r]; ++j) {
            s.a.push_back(zeros + zeros + nb_prime(r, n) + "01");
            s.b.push_back(zeros + zeros + zeros + "10");
        }
    }
    return s;
}

inline std::string palindromize(const std::string& x) { return x + std::string(x.rbegin(), x.rend()); }

/// Right-pads every string with zeros to `length` (at least the current length), then palindromizes.
inline S3GInstance palindromize(const S3GInstance& s, std::size_t length = 0) {
    s.check();
    if (length < s.length()) length = s.length();
    S3GInstance out;
    for (auto [from, to] : {std::pair{&s.a, &out.a}, std::pair{&s.b, &out.b}, std::pair{&s.c, &out.c}})
        for (const auto& x : *from) to->push_back(palindromize(x + std::string(length - x.size(), '0')));
    return out;
}

inline bool is_palindrome(const std::string& x) { return std::equal(x.begin(), x.end(), x.rbegin()); }

// ---------------------------------------------------------------------------
// Lower-bound instance

struct HardInstance {
    static constexpr std::size_t kCapacity = 53;
    static constexpr std::size_t kAShift = 27, kBShift = 9, kCShift = 3;
    static constexpr std::size_t kACapacity = 40, kBCapacity = 13, kCCapacity = 4;

    Graph graph;
    std::size_t capacity = kCapacity;
    std::size_t n = 0;
    std::size_t ell = 0;          ///< palindromized string length
    std::size_t target_size = 0;  ///< n (ell + 1)
    CliqueChain a_chain;
    std::vector<CliqueChain> b_chains, c_chains;
    std::vector<std::vector<Vertex>> a_vertices, b_vertices, c_vertices;  ///< ids of each part in graph

    std::size_t width() const { return capacity - 1; }
};

namespace detail {

inline Fingerprint shifted(const std::string& x, std::size_t shift) {
    Fingerprint w;
    for (char ch : x) w.push_back(shift + (ch == '1' ? 1 : 0));
    return w;
}

/// Copies `part` into `g` at offset; returns the new ids.
inline std::vector<Vertex> embed(Graph& g, const Graph& part, Vertex offset) {
    std::vector<Vertex> ids(part.order());
    std::iota(ids.begin(), ids.end(), offset);
    for (auto [u, v] : part.edges()) g.add_edge(u + offset, v + offset);
    return ids;
}

}  // namespace detail

/// Disjoint union of the capacity-40 chain over a^1+27 || 40 || ... || a^n+27 || 40 and one
/// capacity-13 (b+9) and capacity-4 (c+3) chain per string. Strings must be palindromes.
inline HardInstance mspd_hard_instance(const S3GInstance& s) {
    s.check();
    if (s.n() == 0) throw std::invalid_argument("instance has no strings");
    for (const auto* side : {&s.a, &s.b, &s.c})
        for (const auto& x : *side)
            if (!is_palindrome(x)) throw std::invalid_argument("strings must be palindromized first");
    HardInstance h;
    h.n = s.n();
    h.ell = s.length();
    h.target_size = h.n * (h.ell + 1);

    Fingerprint wa;
    for (const auto& a : s.a) {
        const auto part = detail::shifted(a, HardInstance::kAShift);
        wa.insert(wa.end(), part.begin(), part.end());
        wa.push_back(HardInstance::kACapacity);
    }
    h.a_chain = clique_chain({HardInstance::kACapacity, wa});
    for (const auto& b : s.b) h.b_chains.push_back(clique_chain({HardInstance::kBCapacity, detail::shifted(b, HardInstance::kBShift)}));
    for (const auto& c : s.c) h.c_chains.push_back(clique_chain({HardInstance::kCCapacity, detail::shifted(c, HardInstance::kCShift)}));

    std::size_t total = h.a_chain.graph.order();
    for (const auto& ch : h.b_chains) total += ch.graph.order();
    for (const auto& ch : h.c_chains) total += ch.graph.order();
    h.graph = Graph(total);
    Vertex offset = 0;
    auto place = [&](const CliqueChain& ch) {
        auto ids = detail::embed(h.graph, ch.graph, offset);
        offset += static_cast<Vertex>(ch.graph.order());
        return ids;
    };
    h.a_vertices.push_back(place(h.a_chain));
    for (const auto& ch : h.b_chains) h.b_vertices.push_back(place(ch));
    for (const auto& ch : h.c_chains) h.c_vertices.push_back(place(ch));
    return h;
}

/// b_of[i], c_of[i]: which b- and c-string is grouped with a^i.
struct Grouping {
    std::vector<std::size_t> b_of, c_of;
};

/// Interleaves the minimal decompositions of the chains along the planted grouping.
inline PathDecomposition planted_witness(const HardInstance& h, const S3GInstance& s, const Grouping& m) {
    const std::size_t n = h.n;
    if (m.b_of.size() != n || m.c_of.size() != n) throw std::invalid_argument("grouping has the wrong length");
    auto is_perm = [n](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != i) return false;
        return true;
    };
    if (!is_perm(m.b_of) || !is_perm(m.c_of)) throw std::invalid_argument("grouping is not a pair of permutations");
    for (std::size_t i = 0; i < n; ++i)
        if (!fits(s.a[i], s.b[m.b_of[i]], s.c[m.c_of[i]]))
            throw std::invalid_argument("group " + std::to_string(i) + " exceeds 1 somewhere");

    auto lift = [&](const VertexSet& bag, const std::vector<Vertex>& ids, VertexSet& into) {
        bag.for_each([&](Vertex v) { into.insert(ids[v]); });
    };
    const auto a_bags = h.a_chain.maximal_cliques();
    PathDecomposition pd;
    for (std::size_t g = 0; g < n; ++g) {
        const auto b_bags = h.b_chains[m.b_of[g]].maximal_cliques();
        const auto c_bags = h.c_chains[m.c_of[g]].maximal_cliques();
        for (std::size_t i = 0; i <= h.ell; ++i) {
            VertexSet bag(h.graph.order());
            lift(a_bags[g * (h.ell + 1) + i], h.a_vertices[0], bag);
            if (i < h.ell) {
                lift(b_bags[i], h.b_vertices[m.b_of[g]], bag);
                lift(c_bags[i], h.c_vertices[m.c_of[g]], bag);
            }
            pd.bags.push_back(std::move(bag));
        }
    }
    return pd;
}

// ---------------------------------------------------------------------------
// Benchmark families

/// Random k-tree on n vertices with each edge kept independently with probability `keep`.
inline Graph random_partial_ktree(std::size_t n, std::size_t k, double keep, std::uint64_t seed) {
    if (n < k + 1) throw std::invalid_argument("partial k-tree needs n >= k+1");
    if (!(keep >= 0.0 && keep <= 1.0)) throw std::invalid_argument("retention probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> cliques;  // k-cliques available for attachment
    std::vector<Vertex> first(k + 1);
    std::iota(first.begin(), first.end(), Vertex{0});
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) edges.emplace_back(first[i], first[j]);
    for (std::size_t drop = 0; drop <= k; ++drop) {
        std::vector<Vertex> c;
        for (std::size_t i = 0; i <= k; ++i)
            if (i != drop) c.push_back(first[i]);
        cliques.push_back(std::move(c));
    }
    for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const auto base = cliques[pick(rng)];
        for (auto u : base) edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < k; ++drop) {
            auto c = base;
            c[drop] = v;
            cliques.push_back(std::move(c));
        }
    }
    Graph g(n);
    std::bernoulli_distribution coin(keep);
    for (auto [u, v] : edges)
        if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Centre 0 with m disjoint paths of t vertices attached.
inline Graph spider(std::size_t m, std::size_t t) {
    Graph g(1 + m * t);
    Vertex next = 1;
    for (std::size_t leg = 0; leg < m; ++leg) {
        Vertex prev = 0;
        for (std::size_t i = 0; i < t; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

}  // namespace mindecomp
