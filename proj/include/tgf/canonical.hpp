#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tgf {

/// Relabeling-invariant form of a small multigraph: the lexicographically
/// least sorted endpoint list over every relabeling that respects the
/// (loop count, degree) vertex classes. Undirected unless `oriented`.
struct CanonicalForm {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    auto operator<=>(const CanonicalForm&) const = default;
};

inline CanonicalForm canonical_form(const Multigraph& g, bool oriented = false) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> key(static_cast<std::size_t>(n), {0, 0});  // (loops, degree)
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) ++key[e.tail].first;
        ++key[e.tail].second;
        ++key[e.head].second;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && key[order[j]] == key[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    CanonicalForm best{n, {}};
    bool have_best = false;
    std::vector<int> label(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> candidate;
    candidate.reserve(g.edges().size());

    auto evaluate = [&]() {
        for (int pos = 0; pos < n; ++pos) label[order[pos]] = pos;
        candidate.clear();
        for (const Edge& e : g.edges()) {
            int a = label[e.tail], b = label[e.head];
            if (!oriented && a > b) std::swap(a, b);
            candidate.emplace_back(a, b);
        }
        std::sort(candidate.begin(), candidate.end());
        if (!have_best || candidate < best.edges) {
            best.edges = candidate;
            have_best = true;
        }
    };

    auto recurse = [&](auto&& self, std::size_t c) -> void {
        if (c == classes.size()) {
            evaluate();
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
        std::sort(first, last);
        do {
            self(self, c + 1);
        } while (std::next_permutation(first, last));
    };
    recurse(recurse, 0);
    if (!have_best) evaluate();
    return best;
}

}  // namespace tgf
