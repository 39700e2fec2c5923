#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "tutte.hpp"

namespace tgf {

/// Complex weight f(a, b) on Z_q x Z_q, stored densely (row a, column b).
struct EdgeKernel {
    int q = 0;
    std::vector<cplx> entries;

    EdgeKernel() = default;
    explicit EdgeKernel(int modulus) : q(modulus), entries(static_cast<std::size_t>(modulus * modulus), cplx(0.0)) {
        if (modulus < 1) throw InputError("kernel modulus must be positive");
    }

    cplx& operator()(int a, int b) { return entries[static_cast<std::size_t>(a * q + b)]; }
    const cplx& operator()(int a, int b) const { return entries[static_cast<std::size_t>(a * q + b)]; }

    /// y on the diagonal, w off it.
    static EdgeKernel hamming(int q, cplx w, cplx y) {
        EdgeKernel k(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) k(a, b) = a == b ? y : w;
        return k;
    }
};

/// Sum over all q-colourings of y^{#monochromatic edges}; loops are always monochromatic.
inline cplx monochromial(const Multigraph& g, int q, cplx y) {
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(g.edge_count() + 1), 0);
    for_each_vector(
        q, g.vertex_count(),
        [&](const std::vector<int>& c) {
            int mono = 0;
            for (const Edge& e : g.edges()) mono += c[e.tail] == c[e.head];
            ++histogram[mono];
        },
        "monochromial");
    cplx sum(0.0);
    for (std::size_t m = 0; m < histogram.size(); ++m)
        if (histogram[m]) sum += static_cast<double>(histogram[m]) * ipow(y, static_cast<long long>(m));
    return sum;
}

/// q^k (y-1)^r T(G; (y-1+q)/(y-1), y).
inline cplx monochromial_closed(const Multigraph& g, int q, cplx y) {
    if (std::abs(y - 1.0) == 0.0) throw InputError("monochromial_closed: y = 1 is singular");
    const GraphStats s = graph_stats(g);
    const cplx ym1 = y - 1.0;
    return ipow(static_cast<double>(q), s.components) * ipow(ym1, s.rank) *
           tutte_dc(g).evaluate((ym1 + static_cast<double>(q)) / ym1, y);
}

/// Number of proper q-colourings, by brute force.
inline std::uint64_t count_proper_colourings(const Multigraph& g, int q) {
    std::uint64_t count = 0;
    for_each_vector(
        q, g.vertex_count(),
        [&](const std::vector<int>& c) {
            for (const Edge& e : g.edges())
                if (c[e.tail] == c[e.head]) return;
            ++count;
        },
        "count_proper_colourings");
    return count;
}

/// Sum over c in Z_q^V of the product over directed edges (u, v) of W(c_u, c_v).
inline cplx potts_partition(const Multigraph& g, const EdgeKernel& w) {
    cplx sum(0.0);
    for_each_vector(
        w.q, g.vertex_count(),
        [&](const std::vector<int>& c) {
            cplx term(1.0);
            for (const Edge& e : g.edges()) {
                term *= w(c[e.tail], c[e.head]);
                if (term == cplx(0.0)) return;
            }
            sum += term;
        },
        "potts_partition");
    return sum;
}

/// Closed form of the partition function for the kernel with y on the
/// diagonal and w elsewhere: q^k w^n (y-w)^r T(G; (y+(q-1)w)/(y-w), y/w).
/// At w = 0 only constant colourings of each component survive, giving q^k y^|E|;
/// at w = y the value is q^|V| y^|E|.
inline cplx potts_closed(const Multigraph& g, int q, cplx w, cplx y) {
    const GraphStats s = graph_stats(g);
    const double qd = q;
    if (std::abs(w) == 0.0) return ipow(qd, s.components) * ipow(y, g.edge_count());
    if (std::abs(y - w) == 0.0) return ipow(qd, g.vertex_count()) * ipow(y, g.edge_count());
    return ipow(qd, s.components) * ipow(w, s.nullity) * ipow(y - w, s.rank) *
           tutte_dc(g).evaluate((y + (qd - 1.0) * w) / (y - w), y / w);
}

struct HammingKernelParams {
    cplx w;
    cplx y;
};

/// (w, y) when W is constant y on the diagonal and constant w off it.
inline std::optional<HammingKernelParams> tg_matrix_test(const EdgeKernel& k, double tol = kAbsTol) {
    const cplx y = k(0, 0);
    const cplx w = k.q > 1 ? k(0, 1) : y;
    for (int a = 0; a < k.q; ++a)
        for (int b = 0; b < k.q; ++b)
            if (std::abs(k(a, b) - (a == b ? y : w)) > tol) return std::nullopt;
    return HammingKernelParams{w, y};
}

/// Outcome of fitting a deletion-contraction recurrence to the partition
/// function on bouquets Y_m, multiedges X_m and X_m^n, and stars Z_m.
/// A clean probe is empirical evidence only.
struct FamilyProbeReport {
    int m_max = 0;
    cplx gamma, x, y, alpha, beta;
    std::vector<std::string> violations;

    bool consistent() const { return violations.empty(); }
    std::optional<std::string> first_violation() const {
        if (violations.empty()) return std::nullopt;
        return violations.front();
    }
    static constexpr const char* note = "empirical check on the families Y_m, X_m, X_m^n, Z_m; not a proof";
};

inline FamilyProbeReport tg_family_probe(const EdgeKernel& w, int m_max) {
    if (m_max < 1 || m_max > 8) throw InputError("tg_family_probe: m_max must lie in [1, 8]");
    FamilyProbeReport rep;
    rep.m_max = m_max;
    const double q = w.q;

    auto F = [&](Family kind, int m, std::optional<int> n = std::nullopt) {
        return potts_partition(build_family(kind, m, n), w);
    };
    auto check = [&](cplx lhs, cplx rhs, std::string what) {
        if (!close_rel(lhs, rhs)) rep.violations.push_back(std::move(what));
    };
    std::vector<cplx> fy, fx;  // F(Y_m), F(X_m) for m = 0..m_max
    for (int m = 0; m <= m_max; ++m) {
        fy.push_back(F(Family::bouquet, m));
        fx.push_back(F(Family::multiedge, m));
    }
    rep.gamma = fy[0];  // single vertex, no edges
    rep.y = fy[1] / q;
    rep.x = fx[1] / q;  // X_1 is a bridge; contracting it leaves one vertex

    // Loops: F(Y_m) = y F(Y_{m-1}).
    for (int m = 2; m <= m_max; ++m)
        check(fy[m], rep.y * fy[m - 1], "Y_" + std::to_string(m) + ": F(Y_m) != y F(Y_{m-1})");

    // Orientation: F(X_m^n) independent of n.
    for (int m = 1; m <= m_max; ++m)
        for (int n = 0; n < m; ++n)
            check(F(Family::oriented_multiedge, m, n), fx[m],
                  "X_" + std::to_string(m) + "^" + std::to_string(n) + ": F(X_m^n) != F(X_m^m) (orientation)");

    // Ordinary edges: F(X_m) = alpha F(Y_{m-1}) + beta F(X_{m-1}) for m >= 2;
    // alpha, beta by least squares over all available m.
    if (m_max >= 2) {
        cplx g11(0.0), g12(0.0), g22(0.0), r1(0.0), r2(0.0);
        for (int m = 2; m <= m_max; ++m) {
            const cplx a = fy[m - 1], b = fx[m - 1], t = fx[m];
            g11 += std::conj(a) * a;
            g12 += std::conj(a) * b;
            g22 += std::conj(b) * b;
            r1 += std::conj(a) * t;
            r2 += std::conj(b) * t;
        }
        const cplx det = g11 * g22 - g12 * std::conj(g12);
        const double scale = std::max(1.0, std::abs(g11) * std::abs(g22));
        if (std::abs(det) > 1e-12 * scale) {
            rep.alpha = (g22 * r1 - g12 * r2) / det;
            rep.beta = (g11 * r2 - std::conj(g12) * r1) / det;
        } else if (std::abs(g22) >= std::abs(g11) && std::abs(g22) > 0.0) {
            rep.alpha = 0.0;
            rep.beta = r2 / g22;
        } else if (std::abs(g11) > 0.0) {
            rep.alpha = r1 / g11;
            rep.beta = 0.0;
        }
        for (int m = 2; m <= m_max; ++m)
            check(fx[m], rep.alpha * fy[m - 1] + rep.beta * fx[m - 1],
                  "X_" + std::to_string(m) + ": F(X_m) != alpha F(Y_{m-1}) + beta F(X_{m-1})");
    }

    // Bridges: F(Z_m) = x F(Z_{m-1}).
    cplx prev = fx[1];
    for (int m = 2; m <= m_max; ++m) {
        const cplx cur = F(Family::star, m);
        check(cur, rep.x * prev, "Z_" + std::to_string(m) + ": F(Z_m) != x F(Z_{m-1})");
        prev = cur;
    }
    return rep;
}

}  // namespace tgf
