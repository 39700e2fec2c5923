#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "potts.hpp"
#include "tension_flow.hpp"
#include "zq.hpp"

namespace tgf {

/// Pruning thresholds for the sparse product.
inline constexpr double kIntermediatePrune = 1e-12;
inline constexpr double kFinalPrune = 1e-9;

/// Sparse polynomial in C[x_v : v in V] / (x_v^q - 1). Exponent vectors are
/// packed base q with vertex 0 as the most significant digit, so key order
/// is lexicographic order on exponent vectors.
class CoeffMap {
   public:
    using Key = std::uint64_t;

    CoeffMap(int q, int vertex_count) : q_(q), n_(vertex_count) {
        if (q < 1) throw InputError("CoeffMap needs q >= 1");
        // 2^62 keeps every packed key and intermediate digit update in range.
        require_enumerable(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(vertex_count),
                           std::uint64_t{1} << 62, "CoeffMap exponent space");
        place_.assign(static_cast<std::size_t>(n_), 1);
        for (int v = n_ - 2; v >= 0; --v) place_[v] = place_[v + 1] * static_cast<Key>(q_);
    }

    int q() const noexcept { return q_; }
    int vertex_count() const noexcept { return n_; }
    const std::map<Key, cplx>& terms() const noexcept { return terms_; }
    std::map<Key, cplx>& terms() noexcept { return terms_; }

    Key encode(const std::vector<int>& a) const {
        if (static_cast<int>(a.size()) != n_) throw InputError("exponent vector has the wrong length");
        Key k = 0;
        for (int v = 0; v < n_; ++v) {
            if (a[v] < 0 || a[v] >= q_) throw InputError("exponent not reduced mod q");
            k += static_cast<Key>(a[v]) * place_[v];
        }
        return k;
    }
    std::vector<int> decode(Key k) const {
        std::vector<int> a(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) a[v] = static_cast<int>((k / place_[v]) % static_cast<Key>(q_));
        return a;
    }
    int digit(Key k, int v) const { return static_cast<int>((k / place_[v]) % static_cast<Key>(q_)); }
    Key bump(Key k, int v, int by) const {
        const int d = digit(k, v);
        const int nd = mod(d + by, q_);
        return k - static_cast<Key>(d) * place_[v] + static_cast<Key>(nd) * place_[v];
    }

    void prune(double tol) { std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; }); }

   private:
    int q_;
    int n_;
    std::vector<Key> place_;
    std::map<Key, cplx> terms_;
};

/// Kernel supported on {(a, b) : a + s b = t}, given by f(t - s b, b) = g(b).
struct RestrictedKernel {
    ZqFun g;
    int s = 1;
    int t = 0;

    int q() const { return g.q(); }

    EdgeKernel to_kernel() const {
        const int q = g.q();
        EdgeKernel f(q);
        for (int b = 0; b < q; ++b) f(mod(static_cast<long long>(t) - static_cast<long long>(s) * b, q), b) += g[b];
        return f;
    }
};

/// x_u - x_v: g = delta_0 - delta_1, s = t = 1.
inline RestrictedKernel petersen_kernel(int q) {
    if (q < 2) throw InputError("petersen_kernel needs q >= 2");
    return {delta(q, 0) - delta(q, 1), 1, 1};
}

/// y + (q-1)w + (y-w)(x_u^{q-1} x_v + ... + x_u x_v^{q-1}): s = 1, t = 0.
inline RestrictedKernel prop_constant_kernel(int q, cplx y, cplx w) {
    if (q < 2) throw InputError("prop_constant_kernel needs q >= 2");
    ZqFun g(q);
    g[0] = y + static_cast<double>(q - 1) * w;
    for (int b = 1; b < q; ++b) g[b] = y - w;
    return {g, 1, 0};
}

/// x_u + x_v: g = delta_0 + delta_1, s = t = 1.
inline RestrictedKernel score_kernel(int q) {
    if (q < 2) throw InputError("score_kernel needs q >= 2");
    return {delta(q, 0) + delta(q, 1), 1, 1};
}

/// Upper bound on the number of terms the expansion can hold.
inline std::uint64_t expansion_size_bound(const Multigraph& g, const EdgeKernel& f) {
    std::uint64_t nnz = 0;
    for (const cplx& c : f.entries) nnz += c != cplx(0.0);
    const std::uint64_t cap = kEnumerationLimit;
    return std::min(bounded_pow(static_cast<std::uint64_t>(f.q), static_cast<std::uint64_t>(g.vertex_count()), cap),
                    bounded_pow(nnz, static_cast<std::uint64_t>(g.edge_count()), cap));
}

/// prod over directed edges (u, v) of sum_{a,b} f(a, b) x_u^a x_v^b, reduced
/// mod (x_v^q - 1), multiplying edge by edge in index order.
inline CoeffMap expand(const Multigraph& g, const EdgeKernel& f) {
    if (expansion_size_bound(g, f) > kEnumerationLimit)
        throw SizeGuardError("expand: estimated term count exceeds " + std::to_string(kEnumerationLimit));
    CoeffMap poly(f.q, g.vertex_count());
    poly.terms()[0] = 1.0;
    std::vector<std::pair<std::pair<int, int>, cplx>> support;
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b)
            if (f(a, b) != cplx(0.0)) support.push_back({{a, b}, f(a, b)});

    for (const Edge& e : g.edges()) {
        std::map<CoeffMap::Key, cplx> next;
        for (const auto& [key, c] : poly.terms())
            for (const auto& [ab, w] : support) {
                CoeffMap::Key k = key;
                if (e.is_loop()) {
                    k = poly.bump(k, e.tail, ab.first + ab.second);
                } else {
                    k = poly.bump(k, e.tail, ab.first);
                    k = poly.bump(k, e.head, ab.second);
                }
                next[k] += c * w;
            }
        poly.terms() = std::move(next);
        poly.prune(kIntermediatePrune);
    }
    poly.prune(kFinalPrune);
    return poly;
}

inline CoeffMap expand(const Multigraph& g, const RestrictedKernel& k) { return expand(g, k.to_kernel()); }

inline cplx coefficient(const CoeffMap& poly, const std::vector<int>& a) {
    auto it = poly.terms().find(poly.encode(a));
    return it == poly.terms().end() ? cplx(0.0) : it->second;
}

inline double l2_norm_sq(const CoeffMap& poly) {
    double s = 0.0;
    for (const auto& [k, c] : poly.terms()) s += std::norm(c);
    return s;
}

inline std::size_t l0_norm(const CoeffMap& poly, double tol = kAbsTol) {
    std::size_t n = 0;
    for (const auto& [k, c] : poly.terms()) n += std::abs(c) > tol;
    return n;
}

/// l0 norm of an expansion in which no reduction happens: requires q > max
/// vertex degree, which suffices for kernels with exponents in {0, 1}.
inline std::size_t l0_norm_unreduced(const Multigraph& g, const EdgeKernel& f) {
    const auto deg = degrees(g);
    const int max_deg = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    if (f.q <= max_deg)
        throw InputError("l0_norm_unreduced: q = " + std::to_string(f.q) + " does not exceed the maximum degree " +
                         std::to_string(max_deg));
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b)
            if (f(a, b) != cplx(0.0) && (a > 1 || b > 1))
                throw InputError("l0_norm_unreduced: kernel exponents must lie in {0, 1}");
    return l0_norm(expand(g, f));
}

/// Number of non-zero coefficients of prod (x_u + x_v), with the smallest
/// modulus that avoids reduction.
inline std::size_t score_vector_count(const Multigraph& g) {
    const auto deg = degrees(g);
    const int max_deg = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    return l0_norm_unreduced(g, score_kernel(std::max(2, max_deg + 1)).to_kernel());
}

/// F evaluated at (zeta^{d_v}).
inline cplx eval_at_roots(const Multigraph& g, const EdgeKernel& f, const ColourVector& d) {
    if (static_cast<int>(d.values.size()) != g.vertex_count() || d.q != f.q)
        throw InputError("eval_at_roots: colour vector does not match");
    cplx prod(1.0);
    for (const Edge& e : g.edges()) {
        cplx s(0.0);
        for (int a = 0; a < f.q; ++a)
            for (int b = 0; b < f.q; ++b)
                if (f(a, b) != cplx(0.0))
                    s += f(a, b) * root_of_unity(static_cast<long long>(a) * d.values[e.tail] +
                                                     static_cast<long long>(b) * d.values[e.head],
                                                 f.q);
        prod *= s;
    }
    return prod;
}

/// q^{-|V|} 4^{|E|} sum_c prod_{uv} sin^2(pi (c_v - c_u) / q).
inline double alon_tarsi_rhs(const Multigraph& g, int q) {
    std::vector<double> sin2(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) {
        const double s = std::sin(std::numbers::pi * k / q);
        sin2[k] = s * s;
    }
    double sum = 0.0;
    for_each_vector(
        q, g.vertex_count(),
        [&](const std::vector<int>& c) {
            double term = 1.0;
            for (const Edge& e : g.edges()) {
                term *= 4.0 * sin2[mod(c[e.head] - c[e.tail], q)];
                if (term == 0.0) return;
            }
            sum += term;
        },
        "alon_tarsi_rhs");
    return sum / std::pow(static_cast<double>(q), g.vertex_count());
}

/// (-1)^|E| sum over (q,1)-flows b of (-2)^{|E|-|b|}. A (q,1)-flow assigns
/// integers in {-1, 0, 1}; a Z_q-flow entry c therefore stands for every
/// integer lift z in {-1, 0, 1} with z = c mod q, contributing -2 for z = 0
/// and 1 otherwise. For q >= 3 each entry has at most one lift; for q = 2
/// the entry 1 has two.
inline double tarsi_rhs(const Multigraph& g, int q) {
    std::vector<double> lift(static_cast<std::size_t>(q), 0.0);
    for (int z : {-1, 0, 1}) lift[mod(z, q)] += z == 0 ? -2.0 : 1.0;
    double sum = 0.0;
    for (const auto& b : q1_flows(g, q)) {
        double term = 1.0;
        for (int v : b.values) term *= lift[v];
        sum += term;
    }
    return g.edge_count() % 2 ? -sum : sum;
}

inline CoboundaryMap coboundary(const Multigraph& g, const RestrictedKernel& k) {
    return CoboundaryMap(g, k.q(), k.s, k.t);
}

/// Precomputed ker S^T and, for every reachable target, the lexicographically
/// first b with S^T b = target. Shared across kernels with the same (G, q, s).
class CosetSolver {
   public:
    CosetSolver(const Multigraph& g, int q, int s) : map_(g, q, s, 0) {
        for_each_vector(
            q, g.edge_count(),
            [&](const std::vector<int>& b) {
                EdgeVector v{q, b};
                const ColourVector d = apply_ST(map_, v);
                const bool zero = std::all_of(d.values.begin(), d.values.end(), [](int x) { return x == 0; });
                auto [it, inserted] = first_.try_emplace(d.values, v);
                (void)it;
                (void)inserted;
                if (zero) kernel_.push_back(std::move(v));
            },
            "coset_coeff");
    }

    const EdgeVectorSet& kernel() const noexcept { return kernel_; }

    std::optional<EdgeVector> solve(const std::vector<int>& target) const {
        auto it = first_.find(target);
        if (it == first_.end()) return std::nullopt;
        return it->second;
    }

    /// [x^a] F as the coset enumerator g^{(x)E}(ker S^T + b).
    cplx coefficient(const RestrictedKernel& k, const std::vector<int>& a) const {
        if (k.q() != map_.q || mod(k.s, map_.q) != map_.s) throw InputError("coset solver built for another (q, s)");
        const ColourVector shift = ttop_one(map_.graph, map_.q, k.t);
        std::vector<int> target(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) target[v] = mod(a[v] - shift.values[v], map_.q);
        const auto b = solve(target);
        if (!b) return 0.0;
        return complete_we_coset(kernel_, *b, k.g);
    }

   private:
    CoboundaryMap map_;
    EdgeVectorSet kernel_;
    std::map<std::vector<int>, EdgeVector> first_;
};

/// [x^a] F via the coset weight enumerator of ker S^T; 0 when S^T b = a - T^T 1 has no solution.
inline cplx coset_coeff(const Multigraph& g, const RestrictedKernel& k, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != g.vertex_count()) throw InputError("coset_coeff: exponent vector has the wrong length");
    for (int x : a)
        if (x < 0 || x >= k.q()) throw InputError("coset_coeff: exponent not reduced mod q");
    return CosetSolver(g, k.q(), k.s).coefficient(k, a);
}

/// sum over b in ker S^T of (g star g)^{(x)E}(b).
inline cplx l2_flow_rhs(const Multigraph& g, const RestrictedKernel& k) {
    const CoboundaryMap m = coboundary(g, k);
    const EdgeVectorSet kernel = m.s == 1 ? flows(g, k.q()) : kernel_ST(m);
    return complete_we(kernel, crosscorr(k.g, k.g));
}

/// |im S|^{-1} sum over b in im S of |ghat|^{2 (x)E}(b).
inline cplx l2_image_rhs(const Multigraph& g, const RestrictedKernel& k) {
    const EdgeVectorSet image = image_S(coboundary(g, k));
    const ZqFun ghat = dft(k.g);
    ZqFun power(k.q());
    for (int a = 0; a < k.q(); ++a) power[a] = std::norm(ghat[a]);
    return complete_we(image, power) / static_cast<double>(image.size());
}

/// (g star g)(0) and its common value off zero.
struct L2TuttePair {
    cplx Y;
    cplx W;
};

/// Present exactly when s = 1 and g star g is constant on Z_q \ 0.
inline std::optional<L2TuttePair> l2_tg_predicate(const RestrictedKernel& k, double tol = kAbsTol) {
    if (mod(k.s, k.q()) != 1 % k.q()) return std::nullopt;
    const ZqFun gg = crosscorr(k.g, k.g);
    const cplx w = k.q() > 1 ? gg[1] : cplx(0.0);
    for (int a = 1; a < k.q(); ++a)
        if (std::abs(gg[a] - w) > tol) return std::nullopt;
    return L2TuttePair{gg[0], w};
}

/// W^|E| (x-1)^n T(G; x, (x-1+q)/(x-1)) at x = Y/W, the Tutte form of the l2
/// norm when l2_tg_predicate holds.
inline cplx l2_tutte_form(const Multigraph& g, int q, const L2TuttePair& p) {
    const GraphStats s = graph_stats(g);
    const int m = g.edge_count();
    if (std::abs(p.W) <= kAbsTol) return ipow(p.Y, m);
    if (std::abs(p.Y - p.W) <= kAbsTol) return ipow(static_cast<double>(q), s.nullity) * ipow(p.W, m);
    const cplx x = p.Y / p.W;
    const cplx xm1 = x - 1.0;
    return ipow(p.W, m) * ipow(xm1, s.nullity) * tutte_dc(g).evaluate(x, (xm1 + static_cast<double>(q)) / xm1);
}

}  // namespace tgf
