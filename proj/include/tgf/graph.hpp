#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace tgf {

/// A directed edge. The stored (tail, head) order is the fixed orientation.
struct Edge {
    int tail = 0;
    int head = 0;

    bool is_loop() const noexcept { return tail == head; }
    auto operator<=>(const Edge&) const = default;
};

/// Finite multigraph with a fixed edge orientation. Loops and parallel edges
/// are allowed; an edge is identified by its position in `edges()`.
class Multigraph {
   public:
    Multigraph() = default;

    explicit Multigraph(int vertex_count, std::vector<Edge> edges = {})
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 0) throw InputError("negative vertex count");
        for (const Edge& e : edges_)
            if (e.tail < 0 || e.head < 0 || e.tail >= vertex_count_ || e.head >= vertex_count_)
                throw InputError("edge endpoint out of range");
    }

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int e) const {
        check_edge(e);
        return edges_[static_cast<std::size_t>(e)];
    }

    void check_edge(int e) const {
        if (e < 0 || e >= edge_count())
            throw InputError("edge index " + std::to_string(e) + " out of range");
    }

    bool operator==(const Multigraph&) const = default;

   private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

namespace detail {

class DisjointSets {
   public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

   private:
    std::vector<int> parent_;
};

}  // namespace detail

struct GraphStats {
    int components = 0;
    int rank = 0;
    int nullity = 0;
    bool operator==(const GraphStats&) const = default;
};

/// Component count, rank and nullity. Orientation is ignored.
inline GraphStats graph_stats(const Multigraph& g) {
    detail::DisjointSets ds(g.vertex_count());
    int merges = 0;
    for (const Edge& e : g.edges())
        if (ds.unite(e.tail, e.head)) ++merges;
    GraphStats s;
    s.components = g.vertex_count() - merges;
    s.rank = merges;
    s.nullity = g.edge_count() - s.rank;
    return s;
}

/// Rank of the spanning subgraph (V, A) where A is a bitmask over edge indices.
inline int subset_rank(const Multigraph& g, std::uint64_t mask) {
    detail::DisjointSets ds(g.vertex_count());
    int r = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if ((mask >> e) & 1U)
            if (ds.unite(g.edges()[e].tail, g.edges()[e].head)) ++r;
    return r;
}

/// G \ e. Surviving edges keep their relative order.
inline Multigraph delete_edge(const Multigraph& g, int e) {
    g.check_edge(e);
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + e);
    return Multigraph(g.vertex_count(), std::move(edges));
}

/// G / e for a non-loop e. The merged vertex takes the label min(tail, head)
/// and labels above the removed one shift down by one. Edges parallel to e
/// become loops.
inline Multigraph contract_edge(const Multigraph& g, int e) {
    const Edge pivot = g.edge(e);
    if (pivot.is_loop()) throw InputError("cannot contract a loop");
    const int keep = std::min(pivot.tail, pivot.head);
    const int gone = std::max(pivot.tail, pivot.head);
    auto relabel = [&](int v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        const Edge& x = g.edges()[i];
        edges.push_back({relabel(x.tail), relabel(x.head)});
    }
    return Multigraph(g.vertex_count() - 1, std::move(edges));
}

enum class EdgeClass { bridge, loop, ordinary };

inline std::string_view to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::bridge: return "bridge";
        case EdgeClass::loop: return "loop";
        case EdgeClass::ordinary: return "ordinary";
    }
    return "?";
}

inline EdgeClass edge_class(const Multigraph& g, int e) {
    const Edge& x = g.edge(e);
    if (x.is_loop()) return EdgeClass::loop;
    detail::DisjointSets ds(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) ds.unite(g.edges()[i].tail, g.edges()[i].head);
    return ds.find(x.tail) == ds.find(x.head) ? EdgeClass::ordinary : EdgeClass::bridge;
}

inline std::vector<EdgeClass> edge_classes(const Multigraph& g) {
    std::vector<EdgeClass> out;
    out.reserve(g.edges().size());
    for (int e = 0; e < g.edge_count(); ++e) out.push_back(edge_class(g, e));
    return out;
}

/// Vertex-by-edge matrix: +1 at the head, -1 at the tail, a zero column for a loop.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major

    int operator()(int v, int e) const { return entries[static_cast<std::size_t>(v * cols + e)]; }
};

inline IncidenceMatrix incidence(const Multigraph& g) {
    IncidenceMatrix m{g.vertex_count(), g.edge_count(),
                      std::vector<int>(static_cast<std::size_t>(g.vertex_count() * g.edge_count()), 0)};
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& x = g.edges()[e];
        m.entries[static_cast<std::size_t>(x.head * m.cols + e)] += 1;
        m.entries[static_cast<std::size_t>(x.tail * m.cols + e)] -= 1;
    }
    return m;
}

/// Degrees with each loop counted twice.
inline std::vector<int> degrees(const Multigraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++d[e.tail];
        ++d[e.head];
    }
    return d;
}

inline std::vector<int> out_degrees(const Multigraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) ++d[e.tail];
    return d;
}

inline bool is_connected(const Multigraph& g) { return g.vertex_count() <= 1 || graph_stats(g).components == 1; }

// ---------------------------------------------------------------------------
// Families

enum class Family { bouquet, multiedge, oriented_multiedge, star, cycle, path, complete, prism, k4 };

/// Y_m, X_m, X_m^n, Z_m, C_m, P_m (m edges), K_m, the m-gonal prism, K_4.
/// Cycles and prisms are directed around each cycle; K_m and K_4 use (i, j) with i < j.
inline Multigraph build_family(Family kind, int m, std::optional<int> n = std::nullopt) {
    auto need = [](bool ok, const char* msg) {
        if (!ok) throw InputError(msg);
    };
    std::vector<Edge> edges;
    switch (kind) {
        case Family::bouquet:
            need(m >= 0, "bouquet needs m >= 0");
            edges.assign(static_cast<std::size_t>(m), Edge{0, 0});
            return Multigraph(1, edges);
        case Family::multiedge:
            need(m >= 0, "multiedge needs m >= 0");
            edges.assign(static_cast<std::size_t>(m), Edge{0, 1});
            return Multigraph(2, edges);
        case Family::oriented_multiedge: {
            const int forward = n.value_or(m);
            need(m >= 0 && forward >= 0 && forward <= m, "oriented multiedge needs 0 <= n <= m");
            for (int i = 0; i < m; ++i) edges.push_back(i < forward ? Edge{0, 1} : Edge{1, 0});
            return Multigraph(2, edges);
        }
        case Family::star:
            need(m >= 0, "star needs m >= 0");
            for (int i = 1; i <= m; ++i) edges.push_back({0, i});
            return Multigraph(m + 1, edges);
        case Family::cycle:
            need(m >= 1, "cycle needs m >= 1");
            for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
            return Multigraph(m, edges);
        case Family::path:
            need(m >= 0, "path needs m >= 0");
            for (int i = 0; i < m; ++i) edges.push_back({i, i + 1});
            return Multigraph(m + 1, edges);
        case Family::complete:
            need(m >= 1, "complete graph needs m >= 1");
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
            return Multigraph(m, edges);
        case Family::prism:
            need(m >= 3, "prism needs m >= 3");
            for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
            for (int i = 0; i < m; ++i) edges.push_back({m + i, m + (i + 1) % m});
            for (int i = 0; i < m; ++i) edges.push_back({i, m + i});
            return Multigraph(2 * m, edges);
        case Family::k4:
            return build_family(Family::complete, 4);
    }
    throw InputError("unknown family");
}

/// Parses `name[:m[:n]]`, e.g. `cycle:3`, `oriented-multiedge:3:1`, `prism`, `k4`.
inline Multigraph parse_family(std::string_view spec) {
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char c : spec) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
    }
    if (parts.size() > 3) throw InputError("family spec has too many fields: " + std::string(spec));
    auto number = [&](std::size_t i) -> std::optional<int> {
        if (i >= parts.size()) return std::nullopt;
        int v = 0;
        const auto& p = parts[i];
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
        if (ec != std::errc() || ptr != p.data() + p.size()) throw InputError("bad family parameter '" + p + "'");
        return v;
    };
    const std::string& name = parts[0];
    const auto m = number(1);
    const auto n = number(2);
    auto require_m = [&]() {
        if (!m) throw InputError("family '" + name + "' needs a size parameter");
        return *m;
    };
    if (n && name != "oriented-multiedge") throw InputError("family '" + name + "' takes one parameter");
    if (name == "bouquet") return build_family(Family::bouquet, require_m());
    if (name == "multiedge") return build_family(Family::multiedge, require_m());
    if (name == "oriented-multiedge") return build_family(Family::oriented_multiedge, require_m(), n);
    if (name == "star") return build_family(Family::star, require_m());
    if (name == "cycle") return build_family(Family::cycle, require_m());
    if (name == "path") return build_family(Family::path, require_m());
    if (name == "complete") return build_family(Family::complete, require_m());
    if (name == "prism") return build_family(Family::prism, m.value_or(3));
    if (name == "k4") {
        if (m) throw InputError("family 'k4' takes no parameter");
        return build_family(Family::k4, 4);
    }
    throw InputError("unknown family '" + name + "'");
}

/// Line graph of a simple graph: one vertex per edge, an edge (i, j), i < j,
/// for every pair of edges sharing an endpoint.
inline Multigraph line_graph(const Multigraph& g) {
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& a = g.edges()[i];
        if (a.is_loop()) throw InputError("line_graph: input has a loop");
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const Edge& b = g.edges()[j];
            if (std::minmax(a.tail, a.head) == std::minmax(b.tail, b.head))
                throw InputError("line_graph: input has parallel edges");
        }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& a = g.edges()[i];
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const Edge& b = g.edges()[j];
            if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head) edges.push_back({i, j});
        }
    }
    return Multigraph(g.edge_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Text format:
//   vertices <n>
//   edge <u> <v>     (one line per edge, in orientation order)
// `#` starts a comment.

inline std::string serialize(const Multigraph& g) {
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) out += "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
    return out;
}

inline Multigraph parse_graph(std::string_view text) {
    std::optional<int> vertices;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto to_int = [&](const std::string& tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
            throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
        return v;
    };
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream in(line);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "vertices") {
            if (vertices) throw ParseError(line_no, "duplicate 'vertices' line");
            if (tok.size() != 2) throw ParseError(line_no, "expected 'vertices <n>'");
            vertices = to_int(tok[1]);
        } else if (tok[0] == "edge") {
            if (!vertices) throw ParseError(line_no, "'edge' before 'vertices' header");
            if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <u> <v>'");
            const int u = to_int(tok[1]);
            const int v = to_int(tok[2]);
            if (u >= *vertices || v >= *vertices) throw ParseError(line_no, "edge endpoint out of range");
            edges.push_back({u, v});
        } else {
            throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!vertices) throw ParseError(line_no, "missing 'vertices' header");
    return Multigraph(*vertices, std::move(edges));
}

}  // namespace tgf
