#pragma once

#include <json.hpp>

#include "bipoly.hpp"
#include "difference_sets.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"
#include "tension_flow.hpp"
#include "verify.hpp"

namespace tgf {

using Json = nlohmann::ordered_json;

inline Json to_json(cplx z) { return {{"re", round15(z.real())}, {"im", round15(z.imag())}}; }

/// [[i, j, "c"], ...] sorted by (i, j).
inline Json to_json(const BiPoly& p) {
    Json out = Json::array();
    for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, c.str()});
    return out;
}

/// [{exponents, re, im}, ...] sorted lexicographically by exponent vector.
inline Json to_json(const CoeffMap& f) {
    Json out = Json::array();
    for (const auto& [key, c] : f.terms())
        out.push_back({{"exponents", f.decode(key)}, {"re", round15(c.real())}, {"im", round15(c.imag())}});
    return out;
}

inline Json to_json(const GraphStats& s) {
    return {{"components", s.components}, {"rank", s.rank}, {"nullity", s.nullity}};
}

inline Json to_json(const HammingEnumerator& h) { return h.coeffs; }

inline Json to_json(const EdgeVectorSet& set) {
    Json out = Json::array();
    for (const auto& b : set) out.push_back(b.values);
    return out;
}

inline Json to_json(const ZqFun& f) {
    Json out = Json::array();
    for (int a = 0; a < f.q(); ++a) out.push_back(to_json(f[a]));
    return out;
}

inline std::string_view to_string(DiffsetKind k) {
    switch (k) {
        case DiffsetKind::difference_set: return "difference-set";
        case DiffsetKind::partial_difference_set: return "partial-difference-set";
        case DiffsetKind::neither: return "neither";
    }
    return "neither";
}

inline Json to_json(const DiffsetProfile& p) {
    Json out = {{"kind", to_string(p.kind)}, {"q", p.q}, {"k", p.k}};
    if (p.kind != DiffsetKind::neither) out["lambda"] = p.lambda;
    if (p.kind == DiffsetKind::partial_difference_set) out["mu"] = p.mu;
    out["autocorrelation"] = p.autocorrelation;
    return out;
}

inline Json to_json(const Report& r) {
    Json out = {{"identity", r.identity},
                {"graph", r.graph},
                {"params", r.params},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"abs_err", round15(r.abs_err)},
                {"rel_err", round15(r.rel_err)},
                {"pass", r.pass}};
    out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    return out;
}

inline Json to_json(const CorpusSummary& s) {
    Json out = {{"graphs", s.graphs}, {"checks", s.checks}, {"failures", s.failures}};
    out["first_failure"] = s.first_failure ? to_json(*s.first_failure) : Json(nullptr);
    return out;
}

}  // namespace tgf
