#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "graph_poly.hpp"
#include "potts.hpp"
#include "tension_flow.hpp"
#include "tutte.hpp"

namespace tgf {

using Params = nlohmann::ordered_json;

/// Result of one identity check. `runtime` is wall time in seconds and is
/// not part of the serialized form.
struct Report {
    std::string identity;
    std::string graph;
    Params params = Params::object();
    cplx lhs;
    cplx rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::optional<std::uint64_t> seed;
    double runtime = 0.0;
};

/// TGF_TOLERANCE overrides the relative tolerance of every check.
inline double default_tolerance() {
    if (const char* env = std::getenv("TGF_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        throw InputError("TGF_TOLERANCE must be a positive number");
    }
    return kRelTol;
}

/// Compact text form: `n:u-v,u-v,...`.
inline std::string describe(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + ":";
    for (int e = 0; e < g.edge_count(); ++e)
        out += (e ? "," : "") + std::to_string(g.edge(e).tail) + "-" + std::to_string(g.edge(e).head);
    return out;
}

inline Report make_report(std::string identity, const Multigraph& g, Params params, cplx lhs, cplx rhs, double tol,
                          std::optional<std::uint64_t> seed = std::nullopt) {
    Report r;
    r.identity = std::move(identity);
    r.graph = describe(g);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = rel_error(lhs, rhs);
    r.pass = r.rel_err <= tol;
    r.seed = seed;
    return r;
}

template <class Fn>
Report timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Report r = fn();
    r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---------------------------------------------------------------------------
// Seeded randomness

/// mt19937_64 with a fixed double conversion, so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
    cplx unit_disc() {
        const double r = std::sqrt(uniform());
        const double theta = 2.0 * std::numbers::pi * uniform();
        return std::polar(r, theta);
    }
    ZqFun zqfun(int q) {
        ZqFun f(q);
        for (int a = 0; a < q; ++a) f[a] = unit_disc();
        return f;
    }

   private:
    std::mt19937_64 engine_;
};

inline RestrictedKernel random_restricted_kernel(int q, int s, int t, std::uint64_t seed) {
    Rng rng(seed);
    return {rng.zqfun(q), mod(s, q), mod(t, q)};
}

inline Params kernel_params(const RestrictedKernel& k) {
    return {{"q", k.q()}, {"s", k.s}, {"t", k.t}, {"g", format_zqfun(k.g)}};
}

// ---------------------------------------------------------------------------
// Tutte and Potts

/// Deletion-contraction against the subset expansion. Passes only on exact
/// coefficient equality; lhs and rhs are the two polynomials at (2, 3).
inline Report check_tutte_oracle(const Multigraph& g, double tol = default_tolerance()) {
    return timed([&] {
        const BiPoly dc = tutte_dc(g);
        const BiPoly sub = tutte_subset(g);
        Report r = make_report("tutte-subset", g, {{"x", 2}, {"y", 3}}, dc.evaluate(cplx(2.0), cplx(3.0)),
                               sub.evaluate(cplx(2.0), cplx(3.0)), tol);
        r.pass = r.pass && dc == sub;
        return r;
    });
}

inline Report check_monochromial(const Multigraph& g, int q, cplx y, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("monochromial", g, {{"q", q}, {"y", format_complex(y)}}, monochromial(g, q, y),
                           monochromial_closed(g, q, y), tol);
    });
}

inline Report check_potts(const Multigraph& g, int q, cplx w, cplx y, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("potts", g, {{"q", q}, {"w", format_complex(w)}, {"y", format_complex(y)}},
                           potts_partition(g, EdgeKernel::hamming(q, w, y)), potts_closed(g, q, w, y), tol);
    });
}

// ---------------------------------------------------------------------------
// Tensions and flows

inline Report check_tension_tutte(const Multigraph& g, int q, cplx y, double tol = default_tolerance()) {
    return timed([&] {
        const Sides s = tension_tutte_check(g, q, y);
        return make_report("tension-tutte", g, {{"q", q}, {"y", format_complex(y)}}, s.lhs, s.rhs, tol);
    });
}

inline Report check_flow_tutte(const Multigraph& g, int q, cplx x, double tol = default_tolerance()) {
    return timed([&] {
        const Sides s = flow_tutte_check(g, q, x);
        return make_report("flow-tutte", g, {{"q", q}, {"x", format_complex(x)}}, s.lhs, s.rhs, tol);
    });
}

inline Report check_macwilliams(const Multigraph& g, int q, const ZqFun& weights,
                                std::optional<std::uint64_t> seed = std::nullopt, double tol = default_tolerance()) {
    return timed([&] {
        const Sides s = macwilliams_check(g, q, weights);
        return make_report("macwilliams", g, {{"q", q}, {"weights", format_zqfun(weights)}}, s.lhs, s.rhs, tol, seed);
    });
}

/// Integer Hamming form; passes only on exact equality.
inline Report check_macwilliams_exact(const Multigraph& g, int q, long long y, double tol = default_tolerance()) {
    return timed([&] {
        const auto [lhs, rhs] = macwilliams_hamming_exact(g, q, y);
        Report r = make_report("macwilliams-exact", g, {{"q", q}, {"y", y}}, lhs.convert_to<double>(),
                               rhs.convert_to<double>(), tol);
        r.pass = r.pass && lhs == rhs;
        return r;
    });
}

// ---------------------------------------------------------------------------
// Graph polynomials

inline Report check_alon_tarsi(const Multigraph& g, int q, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("alon-tarsi", g, {{"q", q}}, l2_norm_sq(expand(g, petersen_kernel(q))),
                           alon_tarsi_rhs(g, q), tol);
    });
}

inline Report check_tarsi(const Multigraph& g, int q, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("tarsi", g, {{"q", q}}, l2_norm_sq(expand(g, petersen_kernel(q))), tarsi_rhs(g, q), tol);
    });
}

/// l2 norm squared of the Petersen expansion mod (x^3 - 1) against 3^{|E|-|V|} P(G; 3).
inline Report check_alon_tarsi_chromatic(const Multigraph& g, double tol = default_tolerance()) {
    return timed([&] {
        const double p3 = static_cast<double>(count_proper_colourings(g, 3));
        return make_report("alon-tarsi-chromatic", g, {{"q", 3}}, l2_norm_sq(expand(g, petersen_kernel(3))),
                           std::pow(3.0, g.edge_count() - g.vertex_count()) * p3, tol);
    });
}

/// (qw)^n (y-w)^r T(G; (y+(q-1)w)/(y-w), y/w).
inline cplx prop_constant_rhs(const Multigraph& g, int q, cplx y, cplx w) {
    if (std::abs(w) == 0.0) throw InputError("prop-constant: w must be non-zero");
    if (std::abs(y - w) == 0.0) throw InputError("prop-constant: y must differ from w");
    const GraphStats s = graph_stats(g);
    const double qd = q;
    return ipow(qd * w, s.nullity) * ipow(y - w, s.rank) * tutte_dc(g).evaluate((y + (qd - 1.0) * w) / (y - w), y / w);
}

inline Report check_prop_constant(const Multigraph& g, int q, cplx y, cplx w, double tol = default_tolerance()) {
    return timed([&] {
        const cplx rhs = prop_constant_rhs(g, q, y, w);
        const CoeffMap f = expand(g, prop_constant_kernel(q, y, w));
        return make_report("prop-constant", g, {{"q", q}, {"y", format_complex(y)}, {"w", format_complex(w)}},
                           coefficient(f, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)), rhs, tol);
    });
}

/// Constant term at (q, y, w) = (3, 0, 1) against 3^{|E|-|V|} P(G; 3).
inline Report check_prop_constant_chromatic(const Multigraph& g, double tol = default_tolerance()) {
    return timed([&] {
        const CoeffMap f = expand(g, prop_constant_kernel(3, 0.0, 1.0));
        const double p3 = static_cast<double>(count_proper_colourings(g, 3));
        return make_report("prop-constant-chromatic", g, {{"q", 3}, {"y", "0"}, {"w", "1"}},
                           coefficient(f, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)),
                           std::pow(3.0, g.edge_count() - g.vertex_count()) * p3, tol);
    });
}

/// Every coefficient of the expansion against its coset enumerator. All
/// exponents are checked when q^|V| <= 10^5; otherwise the stored ones plus
/// the first 1000 absent ones in lexicographic order. The report carries the
/// worst exponent.
inline Report check_coeff_thm(const Multigraph& g, const RestrictedKernel& k,
                              std::optional<std::uint64_t> seed = std::nullopt, double tol = default_tolerance(),
                              const CosetSolver* solver = nullptr) {
    return timed([&] {
        std::optional<CosetSolver> own;
        if (!solver) solver = &own.emplace(g, k.q(), k.s);
        const CoeffMap f = expand(g, k);
        const int q = k.q();
        const int nv = g.vertex_count();
        double worst = -1.0;
        std::vector<int> worst_a;
        cplx worst_lhs, worst_rhs;
        std::size_t checked = 0;
        auto visit = [&](const std::vector<int>& a, cplx lhs) {
            const cplx rhs = solver->coefficient(k, a);
            ++checked;
            const double err = rel_error(lhs, rhs);
            if (err > worst) {
                worst = err;
                worst_a = a;
                worst_lhs = lhs;
                worst_rhs = rhs;
            }
        };
        constexpr std::uint64_t kAllExponents = 100'000;
        if (bounded_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(nv), kAllExponents) <=
            kAllExponents) {
            for_each_vector(q, nv, [&](const std::vector<int>& a) { visit(a, coefficient(f, a)); });
        } else {
            for (const auto& [key, c] : f.terms()) visit(f.decode(key), c);
            std::size_t absent = 0;
            for (CoeffMap::Key key = 0; absent < 1000; ++key) {
                if (f.terms().count(key)) continue;
                visit(f.decode(key), 0.0);
                ++absent;
            }
        }
        Params p = kernel_params(k);
        p["exponents_checked"] = checked;
        p["worst_exponent"] = worst_a;
        return make_report("coeff", g, std::move(p), worst_lhs, worst_rhs, tol, seed);
    });
}

/// Precomputed ker S^T and im S, shared across kernels with the same (G, q, s).
struct L2Sets {
    EdgeVectorSet kernel;
    EdgeVectorSet image;
};

inline L2Sets l2_sets(const Multigraph& g, int q, int s) {
    const CoboundaryMap m(g, q, s, 0);
    return {m.s == 1 ? flows(g, q) : kernel_ST(m), image_S(m)};
}

/// Direct l2 norm squared against both the flow side and the image side;
/// the report's rhs is whichever side is further from lhs.
inline Report check_l2_thm(const Multigraph& g, const RestrictedKernel& k,
                           std::optional<std::uint64_t> seed = std::nullopt, double tol = default_tolerance(),
                           const L2Sets* sets = nullptr) {
    return timed([&] {
        const cplx lhs = l2_norm_sq(expand(g, k));
        cplx flow_side, image_side;
        if (sets) {
            flow_side = complete_we(sets->kernel, crosscorr(k.g, k.g));
            const ZqFun ghat = dft(k.g);
            ZqFun power(k.q());
            for (int a = 0; a < k.q(); ++a) power[a] = std::norm(ghat[a]);
            image_side = complete_we(sets->image, power) / static_cast<double>(sets->image.size());
        } else {
            flow_side = l2_flow_rhs(g, k);
            image_side = l2_image_rhs(g, k);
        }
        Params p = kernel_params(k);
        p["flow_side"] = {{"re", round15(flow_side.real())}, {"im", round15(flow_side.imag())}};
        p["image_side"] = {{"re", round15(image_side.real())}, {"im", round15(image_side.imag())}};
        const bool flow_worse = rel_error(lhs, flow_side) >= rel_error(lhs, image_side);
        p["reported_side"] = flow_worse ? "flow" : "image";
        return make_report("l2", g, std::move(p), lhs, flow_worse ? flow_side : image_side, tol, seed);
    });
}

/// When g star g is constant off zero: l2 norm squared against the Tutte form.
inline std::optional<Report> check_l2_tutte(const Multigraph& g, const RestrictedKernel& k,
                                            std::optional<std::uint64_t> seed = std::nullopt,
                                            double tol = default_tolerance()) {
    const auto yw = l2_tg_predicate(k);
    if (!yw) return std::nullopt;
    return timed([&] {
        Params p = kernel_params(k);
        p["Y"] = format_complex(yw->Y);
        p["W"] = format_complex(yw->W);
        return make_report("l2-tutte", g, std::move(p), l2_norm_sq(expand(g, k)), l2_tutte_form(g, k.q(), *yw), tol,
                           seed);
    });
}

/// Number of score vectors (l0 of the unreduced expansion of prod (x_u + x_v)) against T(G; 2, 1).
inline Report check_score_l0(const Multigraph& g, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("score-l0", g, {}, static_cast<double>(score_vector_count(g)),
                           tutte_dc(g).evaluate(BigInt(2), BigInt(1)).convert_to<double>(), tol);
    });
}

/// l2 norm squared of prod (x_u + x_v) mod (x^3 - 1) against T(G; 2, 4).
inline Report check_score_l2(const Multigraph& g, double tol = default_tolerance()) {
    return timed([&] {
        return make_report("score-l2", g, {{"q", 3}}, l2_norm_sq(expand(g, score_kernel(3))),
                           tutte_dc(g).evaluate(BigInt(2), BigInt(4)).convert_to<double>(), tol);
    });
}

// ---------------------------------------------------------------------------
// Line graphs of plane cubic graphs

/// Cubic graph with a straight-line plane embedding (one point per vertex).
struct PlaneCubic {
    Multigraph graph;
    std::vector<std::pair<double, double>> coords;
};

/// K_4 drawn as a triangle around its centre vertex 3.
inline PlaneCubic plane_k4() {
    return {build_family(Family::k4, 4), {{0.0, 2.0}, {-std::sqrt(3.0), -1.0}, {std::sqrt(3.0), -1.0}, {0.0, 0.0}}};
}

/// m-gonal prism drawn as two concentric m-gons.
inline PlaneCubic plane_prism(int m = 3) {
    PlaneCubic p{build_family(Family::prism, m), {}};
    for (double r : {2.0, 1.0})
        for (int i = 0; i < m; ++i) {
            const double a = 2.0 * std::numbers::pi * i / m;
            p.coords.emplace_back(r * std::cos(a), r * std::sin(a));
        }
    return p;
}

/// Line graph whose edges run counterclockwise around each vertex of the
/// cubic graph: at v with incident edges e1, e2, e3 in angular order, L gets
/// e1 -> e2, e2 -> e3, e3 -> e1.
inline Multigraph penrose_line_graph(const PlaneCubic& p) {
    const Multigraph& g = p.graph;
    if (static_cast<int>(p.coords.size()) != g.vertex_count()) throw InputError("penrose: one coordinate per vertex");
    for (int d : degrees(g))
        if (d != 3) throw InputError("penrose: graph is not cubic");
    line_graph(g);  // rejects loops and parallel edges
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<double, int>> around;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& x = g.edge(e);
            if (x.tail != v && x.head != v) continue;
            const int w = x.tail == v ? x.head : x.tail;
            around.emplace_back(std::atan2(p.coords[w].second - p.coords[v].second,
                                           p.coords[w].first - p.coords[v].first),
                                e);
        }
        std::sort(around.begin(), around.end());
        for (std::size_t i = 0; i < around.size(); ++i)
            edges.push_back({around[i].second, around[(i + 1) % around.size()].second});
    }
    return Multigraph(g.edge_count(), std::move(edges));
}

/// sum over c in Z_3^V(L) of 0^{#mono} (-1)^{#{c_v - c_u = -1}} against (-1)^|V(L)| P(L; 3).
inline Report check_penrose(const PlaneCubic& p, double tol = default_tolerance()) {
    return timed([&] {
        const Multigraph l = penrose_line_graph(p);
        long long lhs = 0;
        for_each_vector(
            3, l.vertex_count(),
            [&](const std::vector<int>& c) {
                int negative = 0;
                for (const Edge& e : l.edges()) {
                    if (c[e.tail] == c[e.head]) return;
                    negative += mod(c[e.head] - c[e.tail], 3) == 2;
                }
                lhs += negative % 2 ? -1 : 1;
            },
            "penrose");
        const double p3 = static_cast<double>(count_proper_colourings(l, 3));
        Report r = make_report("penrose", p.graph, {{"line_graph", describe(l)}}, static_cast<double>(lhs),
                               l.vertex_count() % 2 ? -p3 : p3, tol);
        return r;
    });
}

// ---------------------------------------------------------------------------
// Corpus

/// All connected multigraphs with 1..max_vertices vertices and at most
/// max_edges edges, one per isomorphism class (ignoring orientation), each
/// oriented (i, j) with i <= j. Ordered by vertex count, then edge count,
/// then lexicographically by edge multiset.
inline std::vector<Multigraph> corpus(int max_vertices, int max_edges) {
    std::vector<Multigraph> out;
    std::set<CanonicalForm> seen;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<Edge> slots;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) slots.push_back({i, j});
        const int ns = static_cast<int>(slots.size());
        for (int ne = 0; ne <= max_edges; ++ne) {
            std::vector<int> pick(static_cast<std::size_t>(ne), 0);  // non-decreasing slot indices
            while (true) {
                std::vector<Edge> edges;
                for (int s : pick) edges.push_back(slots[s]);
                Multigraph g(nv, std::move(edges));
                if (is_connected(g) && seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
                int i = ne - 1;
                while (i >= 0 && pick[i] == ns - 1) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < ne; ++j) pick[j] = pick[i];
            }
        }
    }
    return out;
}

struct CorpusSummary {
    std::size_t graphs = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::optional<Report> first_failure;

    void add(const Report& r) {
        ++checks;
        if (!r.pass) {
            ++failures;
            if (!first_failure) first_failure = r;
        }
    }
};

/// Runs every identity check on every corpus graph, for each q in `qs`.
/// Random kernels and weights derive from `seed` and the check position.
inline CorpusSummary check_corpus(const std::vector<int>& qs, int max_vertices, int max_edges,
                                  std::uint64_t seed = 1, int kernels_per_q = 4, double tol = default_tolerance()) {
    CorpusSummary sum;
    const auto graphs = corpus(max_vertices, max_edges);
    sum.graphs = graphs.size();
    std::uint64_t counter = 0;
    auto next_seed = [&] { return seed * 0x9E3779B97F4A7C15ull + ++counter; };
    for (const Multigraph& g : graphs) {
        sum.add(check_tutte_oracle(g, tol));
        sum.add(check_score_l0(g, tol));
        sum.add(check_score_l2(g, tol));
        sum.add(check_alon_tarsi_chromatic(g, tol));
        sum.add(check_prop_constant_chromatic(g, tol));
        for (int q : qs) {
            if (q < 2) throw InputError("check_corpus: q must be at least 2");
            for (cplx y : {cplx(2.0), cplx(-1.0), cplx(0.5, 0.25)}) {
                sum.add(check_monochromial(g, q, y, tol));
                sum.add(check_tension_tutte(g, q, y, tol));
                sum.add(check_flow_tutte(g, q, y, tol));
            }
            for (auto [w, y] : {std::pair{cplx(1.0), cplx(3.0)}, std::pair{cplx(2.0), cplx(-1.0)},
                                std::pair{cplx(0.0), cplx(2.0)}, std::pair{cplx(1.0), cplx(0.0)}})
                sum.add(check_potts(g, q, w, y, tol));
            sum.add(check_macwilliams_exact(g, q, 3, tol));
            {
                const std::uint64_t s = next_seed();
                Rng rng(s);
                sum.add(check_macwilliams(g, q, rng.zqfun(q), s, tol));
            }
            sum.add(check_alon_tarsi(g, q, tol));
            sum.add(check_tarsi(g, q, tol));
            for (auto [y, w] : {std::pair{0.0, 1.0}, std::pair{2.0, 1.0}, std::pair{3.0, 2.0}})
                sum.add(check_prop_constant(g, q, y, w, tol));
            for (int i = 0; i < kernels_per_q; ++i) {
                const std::uint64_t s = next_seed();
                const RestrictedKernel k = random_restricted_kernel(q, i % q, (i / q) % q, s);
                sum.add(check_coeff_thm(g, k, s, tol));
                sum.add(check_l2_thm(g, k, s, tol));
            }
        }
    }
    return sum;
}

}  // namespace tgf
