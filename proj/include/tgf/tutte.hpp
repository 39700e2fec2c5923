#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "bipoly.hpp"
#include "canonical.hpp"
#include "graph.hpp"

namespace tgf {

inline constexpr int kSubsetExpansionMaxEdges = 24;
inline constexpr int kMemoMaxVertices = 8;

/// T(G; x, y) = sum over A of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}, by
/// enumerating all 2^|E| edge subsets.
inline BiPoly tutte_subset(const Multigraph& g) {
    const int m = g.edge_count();
    if (m > kSubsetExpansionMaxEdges)
        throw SizeGuardError("tutte_subset: " + std::to_string(m) + " edges exceeds the limit of " +
                             std::to_string(kSubsetExpansionMaxEdges));
    const int full_rank = graph_stats(g).rank;
    // counts[i][j] = #{A : r(E)-r(A) = i, |A|-r(A) = j}
    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(full_rank + 1),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const int r = subset_rank(g, mask);
        const int size = std::popcount(mask);
        ++counts[full_rank - r][size - r];
    }

    // Expand (x-1)^i (y-1)^j with binomial coefficients.
    auto binom_row = [](int n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n + 1), 0);
        row[0] = 1;
        for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
        return row;
    };
    BiPoly t;
    for (int i = 0; i <= full_rank; ++i) {
        const auto bi = binom_row(i);
        for (int j = 0; j <= m; ++j) {
            if (counts[i][j] == 0) continue;
            const auto bj = binom_row(j);
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) {
                    BigInt c = BigInt(counts[i][j]) * bi[a] * bj[b];
                    if ((i - a + j - b) % 2) c = -c;
                    t.add(a, b, c);
                }
        }
    }
    return t;
}

namespace detail {

struct TutteRecursion {
    std::map<CanonicalForm, BiPoly> memo;
    std::optional<std::mt19937_64> rng;

    BiPoly run(const Multigraph& g) {
        // Loops factor out as y each; isolated vertices do not matter.
        int loops = 0;
        std::vector<Edge> kept;
        std::vector<int> touched(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                ++loops;
            } else {
                kept.push_back(e);
                touched[e.tail] = touched[e.head] = 1;
            }
        }
        std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
        int n = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (touched[v]) relabel[v] = n++;
        for (Edge& e : kept) e = {relabel[e.tail], relabel[e.head]};
        const Multigraph core(n, std::move(kept));
        return solve(core).shifted(0, loops);
    }

    BiPoly solve(const Multigraph& g) {
        std::vector<int> ordinary;
        int bridges = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (edge_class(g, e) == EdgeClass::ordinary)
                ordinary.push_back(e);
            else
                ++bridges;
        }
        if (ordinary.empty()) return BiPoly::monomial(bridges, 0);

        std::optional<CanonicalForm> key;
        if (g.vertex_count() <= kMemoMaxVertices) {
            key = canonical_form(g);
            if (auto it = memo.find(*key); it != memo.end()) return it->second;
        }
        int pivot = ordinary.front();
        if (rng) pivot = ordinary[std::uniform_int_distribution<std::size_t>(0, ordinary.size() - 1)(*rng)];

        BiPoly result = run(delete_edge(g, pivot));
        result += run(contract_edge(g, pivot));
        if (key) memo.emplace(std::move(*key), result);
        return result;
    }
};

}  // namespace detail

/// Tutte polynomial by deletion-contraction on the lowest-index ordinary edge,
/// memoized on canonical forms of graphs with at most 8 non-isolated vertices.
/// With `pivot_seed`, the ordinary edge is chosen at random instead.
inline BiPoly tutte_dc(const Multigraph& g, std::optional<std::uint64_t> pivot_seed = std::nullopt) {
    detail::TutteRecursion rec;
    if (pivot_seed) rec.rng.emplace(*pivot_seed);
    return rec.run(g);
}

inline BiPoly tutte(const Multigraph& g) { return tutte_dc(g); }

/// Weights of the deletion-contraction recurrence:
/// F(empty) = gamma^|V|, bridge x, loop y, ordinary alpha F(G/e) + beta F(G\e).
struct TgWeights {
    cplx alpha{1.0};
    cplx beta{1.0};
    cplx gamma{1.0};
    cplx x{1.0};
    cplx y{1.0};
};

/// gamma^k alpha^r beta^n T(G; x/alpha, y/beta).
inline cplx tg_eval(const Multigraph& g, const TgWeights& w) {
    if (std::abs(w.alpha) == 0.0 || std::abs(w.beta) == 0.0) throw InputError("tg_eval: alpha and beta must be non-zero");
    const GraphStats s = graph_stats(g);
    return ipow(w.gamma, s.components) * ipow(w.alpha, s.rank) * ipow(w.beta, s.nullity) *
           tutte_dc(g).evaluate(w.x / w.alpha, w.y / w.beta);
}

}  // namespace tgf
