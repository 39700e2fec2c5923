#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "difference_sets.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace tgf::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kGuardExceeded = 2, kVerificationFailed = 3 };

struct Options {
    std::string graph_file;
    std::string family;
    std::optional<int> q, s, t;
    std::optional<std::string> g, x, y, w, a, kernel, weights, matrix;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::string output;
    std::string identity;
    int max_vertices = 4;
    int max_edges = 6;
    int kernels = 4;
    int m_max = 4;
    std::string qs = "2,3";
};

namespace detail {

inline std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InputError(std::string("bad integer list for ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    return out;
}

inline Multigraph load_graph(const Options& o) {
    if (!o.graph_file.empty() && !o.family.empty()) throw InputError("give either --graph or --family, not both");
    if (!o.family.empty()) return parse_family(o.family);
    if (o.graph_file.empty()) throw InputError("a graph is required: --graph FILE or --family NAME[:m[:n]]");
    std::ifstream in(o.graph_file);
    if (!in) throw InputError("cannot open graph file '" + o.graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline int need_q(const Options& o) {
    if (!o.q) throw InputError("--q is required");
    if (*o.q < 1) throw InputError("--q must be positive");
    return *o.q;
}

inline cplx need_complex(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw InputError(std::string(flag) + " is required");
    return parse_complex(*v);
}

/// --g with optional --s/--t, or a named --kernel at --q.
inline std::optional<RestrictedKernel> named_or_explicit_kernel(const Options& o) {
    if (o.g && o.kernel) throw InputError("give either --g or --kernel, not both");
    if (o.g) {
        ZqFun g = parse_zqfun(*o.g);
        if (o.q && *o.q != g.q())
            throw InputError("--g has " + std::to_string(g.q()) + " entries but --q is " + std::to_string(*o.q));
        const int q = g.q();
        return RestrictedKernel{std::move(g), mod(o.s.value_or(1), q), mod(o.t.value_or(0), q)};
    }
    if (!o.kernel) return std::nullopt;
    if (o.s || o.t) throw InputError("--s and --t apply only with --g");
    const int q = need_q(o);
    const std::string& name = *o.kernel;
    if (name == "petersen") return petersen_kernel(q);
    if (name == "score") return score_kernel(q);
    if (name == "prop-constant") return prop_constant_kernel(q, need_complex(o.y, "--y"), need_complex(o.w, "--w"));
    if (name == "legendre") return RestrictedKernel{legendre_char(q), 1, 0};
    throw InputError("unknown kernel '" + name + "' (petersen, score, prop-constant, legendre)");
}

inline RestrictedKernel need_kernel(const Options& o) {
    auto k = named_or_explicit_kernel(o);
    if (!k) throw InputError("a kernel is required: --g VALUES [--s S --t T] or --kernel NAME");
    return *k;
}

/// Explicit kernel if given, otherwise a seeded random one at (--q, --s, --t).
inline std::pair<RestrictedKernel, std::optional<std::uint64_t>> kernel_or_random(const Options& o) {
    if (auto k = named_or_explicit_kernel(o)) return {*k, std::nullopt};
    const int q = need_q(o);
    const std::uint64_t seed = o.seed.value_or(1);
    return {random_restricted_kernel(q, o.s.value_or(1), o.t.value_or(0), seed), seed};
}

inline Json probe_json(const FamilyProbeReport& p) {
    Json out = {{"m_max", p.m_max},           {"consistent", p.consistent()}, {"gamma", to_json(p.gamma)},
                {"x", to_json(p.x)},          {"y", to_json(p.y)},            {"alpha", to_json(p.alpha)},
                {"beta", to_json(p.beta)},    {"violations", p.violations},   {"note", FamilyProbeReport::note}};
    return out;
}

inline Json cmd_stats(const Options& o) {
    const Multigraph g = load_graph(o);
    Json classes = Json::array();
    for (EdgeClass c : edge_classes(g)) classes.push_back(to_string(c));
    Json out = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    out.update(to_json(graph_stats(g)));
    out["edge_classes"] = classes;
    out["degrees"] = degrees(g);
    return out;
}

inline Json cmd_tutte(const Options& o) {
    const Multigraph g = load_graph(o);
    const BiPoly t = tutte_dc(g);
    Json out = {{"coeffs", to_json(t)}};
    if (o.x || o.y) out["value"] = to_json(t.evaluate(need_complex(o.x, "--x"), need_complex(o.y, "--y")));
    return out;
}

inline Json cmd_potts(const Options& o) {
    const Multigraph g = load_graph(o);
    if (o.matrix) {
        const ZqFun m = parse_zqfun(*o.matrix);
        const int q = need_q(o);
        if (m.q() != q * q) throw InputError("--matrix needs q^2 entries, row-major");
        EdgeKernel k(q);
        for (int i = 0; i < q * q; ++i) k.entries[static_cast<std::size_t>(i)] = m[i];
        Json out = {{"q", q}, {"partition", to_json(potts_partition(g, k))}};
        if (const auto wy = tg_matrix_test(k))
            out["hamming_kernel"] = {{"w", to_json(wy->w)}, {"y", to_json(wy->y)}};
        else
            out["hamming_kernel"] = nullptr;
        out["family_probe"] = probe_json(tg_family_probe(k, o.m_max));
        return out;
    }
    const int q = need_q(o);
    const cplx w = need_complex(o.w, "--w");
    const cplx y = need_complex(o.y, "--y");
    return {{"q", q},
            {"w", format_complex(w)},
            {"y", format_complex(y)},
            {"partition", to_json(potts_partition(g, EdgeKernel::hamming(q, w, y)))},
            {"closed_form", to_json(potts_closed(g, q, w, y))}};
}

/// P(G; q) = (-1)^r q^k T(G; 1 - q, 0), exactly, beside the brute-force count.
inline Json cmd_chromatic(const Options& o) {
    const Multigraph g = load_graph(o);
    const int q = need_q(o);
    const GraphStats s = graph_stats(g);
    BigInt p = pow(BigInt(q), static_cast<unsigned>(s.components)) * tutte_dc(g).evaluate(BigInt(1 - q), BigInt(0));
    if (s.rank % 2) p = -p;
    return {{"q", q}, {"tutte", p.str()}, {"brute_force", count_proper_colourings(g, q)}};
}

inline Json cmd_tensions(const Options& o, bool flow_side) {
    const Multigraph g = load_graph(o);
    const int q = need_q(o);
    const EdgeVectorSet set = flow_side ? flows(g, q) : tensions(g, q);
    Json out = {{"q", q}, {"count", set.size()}, {"hamming", to_json(hamming_we(set, g.edge_count()))}};
    if (flow_side) out["q1_flows"] = q1_flows(g, q).size();
    out["vectors"] = to_json(set);
    return out;
}

inline Json cmd_expand(const Options& o) {
    const Multigraph g = load_graph(o);
    const RestrictedKernel k = need_kernel(o);
    const CoeffMap f = expand(g, k);
    return {{"q", k.q()},
            {"s", k.s},
            {"t", k.t},
            {"g", format_zqfun(k.g)},
            {"terms", to_json(f)},
            {"l2_norm_sq", round15(l2_norm_sq(f))},
            {"l0_norm", l0_norm(f)}};
}

inline Json cmd_l2(const Options& o) {
    const Multigraph g = load_graph(o);
    const RestrictedKernel k = need_kernel(o);
    Json out = {{"q", k.q()},
                {"s", k.s},
                {"t", k.t},
                {"g", format_zqfun(k.g)},
                {"l2_norm_sq", round15(l2_norm_sq(expand(g, k)))},
                {"flow_side", to_json(l2_flow_rhs(g, k))},
                {"image_side", to_json(l2_image_rhs(g, k))}};
    if (const auto yw = l2_tg_predicate(k))
        out["tutte_form"] = {{"Y", to_json(yw->Y)}, {"W", to_json(yw->W)}, {"value", to_json(l2_tutte_form(g, k.q(), *yw))}};
    else
        out["tutte_form"] = nullptr;
    return out;
}

inline Json cmd_coeff(const Options& o) {
    const Multigraph g = load_graph(o);
    const RestrictedKernel k = need_kernel(o);
    if (!o.a) throw InputError("--a is required (comma-separated exponents)");
    const std::vector<int> a = parse_ints(*o.a, "--a");
    if (static_cast<int>(a.size()) != g.vertex_count()) throw InputError("--a needs one exponent per vertex");
    for (int x : a)
        if (x < 0 || x >= k.q()) throw InputError("--a entries must lie in [0, q)");
    return {{"exponent", a}, {"expansion", to_json(coefficient(expand(g, k), a))}, {"coset", to_json(coset_coeff(g, k, a))}};
}

inline PlaneCubic plane_family(const Options& o) {
    if (!o.graph_file.empty() || o.family.empty())
        throw InputError("penrose needs a built-in plane embedding: --family k4 or --family prism[:m]");
    const auto colon = o.family.find(':');
    const std::string name = o.family.substr(0, colon);
    if (name == "k4") {
        parse_family(o.family);  // validates the family string
        return plane_k4();
    }
    if (name == "prism") return plane_prism(parse_family(o.family).vertex_count() / 2);
    throw InputError("penrose needs a built-in plane embedding: --family k4 or --family prism[:m]");
}

/// Returns the report JSON and whether every check passed.
inline std::pair<Json, bool> cmd_verify(const Options& o) {
    const double tol = o.tol.value_or(default_tolerance());
    const std::string& id = o.identity;
    if (id == "corpus") {
        const CorpusSummary s = check_corpus(parse_ints(o.qs, "--qs"), o.max_vertices, o.max_edges, o.seed.value_or(1),
                                             o.kernels, tol);
        return {to_json(s), s.failures == 0};
    }
    if (id == "penrose") {
        const Report r = check_penrose(plane_family(o), tol);
        return {to_json(r), r.pass};
    }
    const Multigraph g = load_graph(o);
    std::optional<Report> r;
    if (id == "alon-tarsi") r = check_alon_tarsi(g, need_q(o), tol);
    else if (id == "tarsi") r = check_tarsi(g, need_q(o), tol);
    else if (id == "alon-tarsi-chromatic") r = check_alon_tarsi_chromatic(g, tol);
    else if (id == "prop-constant")
        r = check_prop_constant(g, need_q(o), need_complex(o.y, "--y"), need_complex(o.w, "--w"), tol);
    else if (id == "prop-constant-chromatic") r = check_prop_constant_chromatic(g, tol);
    else if (id == "coeff") {
        const auto [k, seed] = kernel_or_random(o);
        r = check_coeff_thm(g, k, seed, tol);
    } else if (id == "l2") {
        const auto [k, seed] = kernel_or_random(o);
        r = check_l2_thm(g, k, seed, tol);
    } else if (id == "l2-tutte") {
        const auto [k, seed] = kernel_or_random(o);
        r = check_l2_tutte(g, k, seed, tol);
        if (!r) throw InputError("l2-tutte: g star g is not constant off zero (or s != 1)");
    } else if (id == "macwilliams") {
        const int q = need_q(o);
        if (o.weights) {
            r = check_macwilliams(g, q, parse_zqfun(*o.weights), std::nullopt, tol);
        } else {
            const std::uint64_t seed = o.seed.value_or(1);
            Rng rng(seed);
            r = check_macwilliams(g, q, rng.zqfun(q), seed, tol);
        }
    } else if (id == "macwilliams-exact") {
        r = check_macwilliams_exact(g, need_q(o), static_cast<long long>(need_complex(o.y, "--y").real()), tol);
    } else if (id == "tutte-subset") r = check_tutte_oracle(g, tol);
    else if (id == "monochromial") r = check_monochromial(g, need_q(o), need_complex(o.y, "--y"), tol);
    else if (id == "potts") r = check_potts(g, need_q(o), need_complex(o.w, "--w"), need_complex(o.y, "--y"), tol);
    else if (id == "tension-tutte") r = check_tension_tutte(g, need_q(o), need_complex(o.y, "--y"), tol);
    else if (id == "flow-tutte") r = check_flow_tutte(g, need_q(o), need_complex(o.x, "--x"), tol);
    else if (id == "score-l0") r = check_score_l0(g, tol);
    else if (id == "score-l2") r = check_score_l2(g, tol);
    else throw InputError("unknown identity '" + id + "'");
    return {to_json(*r), r->pass};
}

inline void add_graph(CLI::App* sub, Options& o) {
    sub->add_option("--graph", o.graph_file, "Graph file (vertices/edge lines)");
    sub->add_option("--family", o.family, "Built-in family name[:m[:n]]");
}

inline void add_kernel(CLI::App* sub, Options& o) {
    sub->add_option("--q", o.q, "Modulus");
    sub->add_option("--g", o.g, "Restricted kernel values g(0),...,g(q-1)");
    sub->add_option("--s", o.s, "Restricted kernel s");
    sub->add_option("--t", o.t, "Restricted kernel t");
    sub->add_option("--kernel", o.kernel, "Named kernel: petersen, score, prop-constant, legendre");
    sub->add_option("--y", o.y, "y for prop-constant");
    sub->add_option("--w", o.w, "w for prop-constant");
}

}  // namespace detail

/// Runs one invocation. JSON goes to `out` (or --output); diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using namespace detail;
    Options o;
    CLI::App app{"Tutte polynomials, Z_q Fourier analysis, tensions/flows and graph polynomials"};
    app.name("tgf");
    app.require_subcommand(1);
    std::vector<CLI::App*> subs;

    auto* stats = app.add_subcommand("stats", "Components, rank, nullity, edge classes");
    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial coefficients");
    auto* potts = app.add_subcommand("potts", "Potts partition function and closed form");
    auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial value");
    auto* tens = app.add_subcommand("tensions", "Z_q-tensions");
    auto* flw = app.add_subcommand("flows", "Z_q-flows");
    auto* exp = app.add_subcommand("expand", "Graph polynomial expansion mod x_v^q - 1");
    auto* l2 = app.add_subcommand("l2", "l2 norm and its flow/image forms");
    auto* coeff = app.add_subcommand("coeff", "One coefficient, expanded and as a coset enumerator");
    auto* ver = app.add_subcommand("verify", "Run a named identity check");
    for (auto* s : {stats, tutte, potts, chromatic, tens, flw, exp, l2, coeff, ver}) {
        add_graph(s, o);
        s->add_option("--output", o.output, "Write JSON here instead of standard output");
    }
    tutte->add_option("--x", o.x, "Evaluate at x");
    tutte->add_option("--y", o.y, "Evaluate at y");
    for (auto* s : {potts, chromatic, tens, flw}) s->add_option("--q", o.q, "Modulus / number of colours");
    potts->add_option("--w", o.w, "Off-diagonal weight");
    potts->add_option("--y", o.y, "Diagonal weight");
    potts->add_option("--matrix", o.matrix, "Arbitrary q x q kernel, row-major");
    potts->add_option("--m-max", o.m_max, "Largest family size for the probe")->check(CLI::Range(1, 8));
    for (auto* s : {exp, l2, coeff}) add_kernel(s, o);
    coeff->add_option("--a", o.a, "Exponent vector, comma-separated");

    ver->add_option("identity", o.identity, "Identity name")->required();
    add_kernel(ver, o);
    ver->add_option("--x", o.x, "x");
    ver->add_option("--weights", o.weights, "MacWilliams weights");
    ver->add_option("--seed", o.seed, "Seed for random kernels and weights");
    ver->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--max-vertices", o.max_vertices, "Corpus vertex limit")->check(CLI::Range(0, 6));
    ver->add_option("--max-edges", o.max_edges, "Corpus edge limit")->check(CLI::Range(0, 10));
    ver->add_option("--qs", o.qs, "Corpus moduli, comma-separated");
    ver->add_option("--kernels", o.kernels, "Random kernels per corpus graph and modulus")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        Json result;
        bool pass = true;
        if (stats->parsed()) result = cmd_stats(o);
        else if (tutte->parsed()) result = cmd_tutte(o);
        else if (potts->parsed()) result = cmd_potts(o);
        else if (chromatic->parsed()) result = cmd_chromatic(o);
        else if (tens->parsed()) result = cmd_tensions(o, false);
        else if (flw->parsed()) result = cmd_tensions(o, true);
        else if (exp->parsed()) result = cmd_expand(o);
        else if (l2->parsed()) result = cmd_l2(o);
        else if (coeff->parsed()) result = cmd_coeff(o);
        else std::tie(result, pass) = cmd_verify(o);

        const std::string text = result.dump() + "\n";
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream file(o.output);
            if (!file) throw InputError("cannot write '" + o.output + "'");
            file << text;
        }
        return pass ? kOk : kVerificationFailed;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << "\n";
        return kGuardExceeded;
    }
}

}  // namespace tgf::cli
