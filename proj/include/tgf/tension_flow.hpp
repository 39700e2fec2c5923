#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "tutte.hpp"
#include "zq.hpp"

namespace tgf {

/// Vertex colouring d in Z_q^V.
struct ColourVector {
    int q = 1;
    std::vector<int> values;
    bool operator==(const ColourVector&) const = default;
};

/// Edge vector b in Z_q^E, indexed in orientation order.
struct EdgeVector {
    int q = 1;
    std::vector<int> values;
    auto operator<=>(const EdgeVector&) const = default;

    int weight() const {
        return static_cast<int>(std::count_if(values.begin(), values.end(), [](int v) { return v != 0; }));
    }
};

/// Sorted, duplicate-free list of edge vectors.
using EdgeVectorSet = std::vector<EdgeVector>;

/// The maps (Sd)_e = d_v - s d_u and (Td)_e = t d_u for e = (u, v), over Z_q.
struct CoboundaryMap {
    Multigraph graph;
    int q = 2;
    int s = 1;
    int t = 0;

    CoboundaryMap(Multigraph g, int modulus, int s_ = 1, int t_ = 0)
        : graph(std::move(g)), q(modulus), s(0), t(0) {
        if (q < 1) throw InputError("coboundary map needs q >= 1");
        s = mod(s_, q);
        t = mod(t_, q);
    }
};

inline EdgeVector apply_S(const CoboundaryMap& m, const ColourVector& d) {
    if (static_cast<int>(d.values.size()) != m.graph.vertex_count() || d.q != m.q)
        throw InputError("apply_S: colour vector does not match the map");
    EdgeVector b{m.q, std::vector<int>(m.graph.edges().size())};
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        const Edge& x = m.graph.edges()[e];
        b.values[e] = mod(static_cast<long long>(d.values[x.head]) - static_cast<long long>(m.s) * d.values[x.tail], m.q);
    }
    return b;
}

/// (S^T b)_v = sum of b_e over edges with head v, minus s times the sum over edges with tail v.
inline ColourVector apply_ST(const CoboundaryMap& m, const EdgeVector& b) {
    if (static_cast<int>(b.values.size()) != m.graph.edge_count() || b.q != m.q)
        throw InputError("apply_ST: edge vector does not match the map");
    std::vector<long long> acc(static_cast<std::size_t>(m.graph.vertex_count()), 0);
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        const Edge& x = m.graph.edges()[e];
        acc[x.head] += b.values[e];
        acc[x.tail] -= static_cast<long long>(m.s) * b.values[e];
    }
    ColourVector d{m.q, std::vector<int>(acc.size())};
    for (std::size_t v = 0; v < acc.size(); ++v) d.values[v] = mod(acc[v], m.q);
    return d;
}

/// T^T 1: t times the out-degree of each vertex.
inline ColourVector ttop_one(const Multigraph& g, int q, int t) {
    ColourVector d{q, out_degrees(g)};
    for (int& v : d.values) v = mod(static_cast<long long>(v) * t, q);
    return d;
}

inline void normalize(EdgeVectorSet& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

/// im S, by applying S to every d in Z_q^V.
inline EdgeVectorSet image_S(const CoboundaryMap& m) {
    EdgeVectorSet out;
    for_each_vector(
        m.q, m.graph.vertex_count(),
        [&](const std::vector<int>& d) { out.push_back(apply_S(m, ColourVector{m.q, d})); }, "image_S");
    normalize(out);
    return out;
}

inline EdgeVectorSet tensions(const Multigraph& g, int q) { return image_S(CoboundaryMap(g, q, 1, 0)); }

/// ker S^T, by testing every b in Z_q^E.
inline EdgeVectorSet kernel_ST(const CoboundaryMap& m) {
    EdgeVectorSet out;
    for_each_vector(
        m.q, m.graph.edge_count(),
        [&](const std::vector<int>& b) {
            EdgeVector v{m.q, b};
            const ColourVector d = apply_ST(m, v);
            if (std::all_of(d.values.begin(), d.values.end(), [](int x) { return x == 0; })) out.push_back(std::move(v));
        },
        "kernel_ST");
    return out;  // already lexicographic
}

/// Z_q-flows. Values on the edges outside a spanning forest are free; each
/// tree edge is then forced by conservation at its child endpoint.
inline EdgeVectorSet flows(const Multigraph& g, int q) {
    if (q < 1) throw InputError("flows: q must be positive");
    if (g.edge_count() > kSubsetExpansionMaxEdges)
        throw SizeGuardError("flows: more than " + std::to_string(kSubsetExpansionMaxEdges) + " edges");
    const int nv = g.vertex_count();
    detail::DisjointSets ds(nv);
    std::vector<int> cotree;
    std::vector<std::vector<std::pair<int, int>>> tree_adj(static_cast<std::size_t>(nv));  // (edge, neighbour)
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& x = g.edges()[e];
        if (ds.unite(x.tail, x.head)) {
            tree_adj[x.tail].emplace_back(e, x.head);
            tree_adj[x.head].emplace_back(e, x.tail);
        } else {
            cotree.push_back(e);
        }
    }
    // BFS order from the smallest vertex of each tree; parent_edge = -1 at roots.
    std::vector<int> order, parent_edge(static_cast<std::size_t>(nv), -1), seen(static_cast<std::size_t>(nv), 0);
    for (int root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            const int v = order[head++];
            for (auto [e, w] : tree_adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent_edge[w] = e;
                    order.push_back(w);
                }
        }
    }
    const IncidenceMatrix gamma = incidence(g);

    EdgeVectorSet out;
    std::vector<long long> net(static_cast<std::size_t>(nv));
    for_each_vector(
        q, static_cast<int>(cotree.size()),
        [&](const std::vector<int>& free) {
            EdgeVector b{q, std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0)};
            std::fill(net.begin(), net.end(), 0);
            for (std::size_t i = 0; i < cotree.size(); ++i) {
                const int e = cotree[i];
                b.values[e] = free[i];
                const Edge& x = g.edges()[e];
                net[x.head] += gamma(x.head, e) * free[i];
                if (!x.is_loop()) net[x.tail] += gamma(x.tail, e) * free[i];
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                const int v = *it;
                const int e = parent_edge[v];
                if (e < 0) continue;
                const int value = mod(-gamma(v, e) * net[v], q);
                b.values[e] = value;
                const Edge& x = g.edges()[e];
                const int parent = x.tail == v ? x.head : x.tail;
                net[v] += static_cast<long long>(gamma(v, e)) * value;
                net[parent] += static_cast<long long>(gamma(parent, e)) * value;
            }
            out.push_back(std::move(b));
        },
        "flows");
    std::sort(out.begin(), out.end());
    return out;
}

/// Flows with every entry in {0, 1, q-1}.
inline EdgeVectorSet q1_flows(const Multigraph& g, int q) {
    EdgeVectorSet out;
    for (auto& b : flows(g, q))
        if (std::all_of(b.values.begin(), b.values.end(), [q](int v) { return v == 0 || v == 1 || v == q - 1; }))
            out.push_back(std::move(b));
    return out;
}

/// Hamming weight enumerator: coefficient i counts vectors with i zero entries.
struct HammingEnumerator {
    std::vector<std::uint64_t> coeffs;

    cplx operator()(cplx x) const {
        cplx s(0.0);
        for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + static_cast<double>(coeffs[i]);
        return s;
    }
    BigInt operator()(const BigInt& x) const {
        BigInt s = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + BigInt(coeffs[i]);
        return s;
    }
    bool operator==(const HammingEnumerator&) const = default;
};

inline HammingEnumerator hamming_we(const EdgeVectorSet& set, int edge_count) {
    HammingEnumerator h{std::vector<std::uint64_t>(static_cast<std::size_t>(edge_count + 1), 0)};
    for (const auto& a : set) ++h.coeffs[static_cast<std::size_t>(edge_count - a.weight())];
    return h;
}

/// sum over a in P of prod_e weights(a_e + shift_e).
inline cplx complete_we_coset(const EdgeVectorSet& set, const EdgeVector& shift, const ZqFun& weights) {
    cplx sum(0.0);
    for (const auto& a : set) {
        if (a.q != weights.q() || a.values.size() != shift.values.size())
            throw InputError("complete_we: modulus or length mismatch");
        cplx term(1.0);
        for (std::size_t e = 0; e < a.values.size(); ++e) term *= weights[a.values[e] + shift.values[e]];
        sum += term;
    }
    return sum;
}

inline cplx complete_we(const EdgeVectorSet& set, const ZqFun& weights) {
    if (set.empty()) return 0.0;
    return complete_we_coset(set, EdgeVector{weights.q(), std::vector<int>(set.front().values.size(), 0)}, weights);
}

/// Hamming enumerator of tensions at y against (y-1)^r T(G; (y-1+q)/(y-1), y).
inline Sides tension_tutte_check(const Multigraph& g, int q, cplx y) {
    if (std::abs(y - 1.0) == 0.0) throw InputError("tension_tutte_check: y = 1 is singular");
    const cplx lhs = hamming_we(tensions(g, q), g.edge_count())(y);
    const cplx ym1 = y - 1.0;
    const cplx rhs = ipow(ym1, graph_stats(g).rank) * tutte_dc(g).evaluate((ym1 + static_cast<double>(q)) / ym1, y);
    return {lhs, rhs};
}

/// Hamming enumerator of flows at x against (x-1)^n T(G; x, (x-1+q)/(x-1)).
inline Sides flow_tutte_check(const Multigraph& g, int q, cplx x) {
    if (std::abs(x - 1.0) == 0.0) throw InputError("flow_tutte_check: x = 1 is singular");
    const cplx lhs = hamming_we(flows(g, q), g.edge_count())(x);
    const cplx xm1 = x - 1.0;
    const cplx rhs = ipow(xm1, graph_stats(g).nullity) * tutte_dc(g).evaluate(x, (xm1 + static_cast<double>(q)) / xm1);
    return {lhs, rhs};
}

/// Complete weight enumerator of the tensions against |flows|^{-1} times the
/// enumerator of the flows with transformed weights.
inline Sides macwilliams_check(const Multigraph& g, int q, const ZqFun& weights) {
    if (weights.q() != q) throw InputError("macwilliams_check: weights have the wrong modulus");
    const EdgeVectorSet p = tensions(g, q);
    const EdgeVectorSet perp = flows(g, q);
    return {complete_we(p, weights), complete_we(perp, dft(weights)) / static_cast<double>(perp.size())};
}

/// Integer form of the Hamming duality: |flows| * sum_{tensions} y^{#zeros}
/// against sum_{flows} (y-1+q)^{#zeros} (y-1)^{#non-zeros}.
inline std::pair<BigInt, BigInt> macwilliams_hamming_exact(const Multigraph& g, int q, long long y) {
    const EdgeVectorSet p = tensions(g, q);
    const EdgeVectorSet perp = flows(g, q);
    const int m = g.edge_count();
    BigInt lhs = BigInt(perp.size()) * hamming_we(p, m)(BigInt(y));
    BigInt rhs = 0;
    for (const auto& b : perp) {
        const int w = b.weight();
        rhs += pow(BigInt(y - 1 + q), static_cast<unsigned>(m - w)) * pow(BigInt(y - 1), static_cast<unsigned>(w));
    }
    return {lhs, rhs};
}

}  // namespace tgf
