#pragma once

#include <string>
#include <vector>

#include "zq.hpp"

namespace tgf {

enum class DiffsetKind { difference_set, partial_difference_set, neither };

/// Autocorrelation profile of a subset P of Z_q. For a difference set,
/// `lambda` is the common count on Z_q \ 0; for a partial difference set,
/// `lambda` is the count on P \ 0 and `mu` the count on Z_q \ (P u 0).
struct DiffsetProfile {
    DiffsetKind kind = DiffsetKind::neither;
    int q = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
    std::vector<int> autocorrelation;  // #{(a, b) in P^2 : a - b = c}, indexed by c

    bool operator==(const DiffsetProfile&) const = default;
};

inline DiffsetProfile diffset_profile(const ZqSubset& p) {
    const int q = p.q;
    DiffsetProfile out;
    out.q = q;
    out.k = p.size();
    out.autocorrelation.assign(static_cast<std::size_t>(q), 0);
    for (int a : p.members)
        for (int b : p.members) ++out.autocorrelation[mod(a - b, q)];

    std::vector<int> in_p, outside;
    for (int c = 1; c < q; ++c) (p.contains(c) ? in_p : outside).push_back(out.autocorrelation[c]);
    auto constant = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
    };
    std::vector<int> all = in_p;
    all.insert(all.end(), outside.begin(), outside.end());
    if (constant(all)) {
        out.kind = DiffsetKind::difference_set;
        out.lambda = all.empty() ? 0 : all.front();
    } else if (constant(in_p) && constant(outside)) {
        out.kind = DiffsetKind::partial_difference_set;
        out.lambda = in_p.front();
        out.mu = outside.front();
    }
    return out;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Non-zero squares modulo an odd prime.
inline ZqSubset paley_set(int q) {
    if (q == 2 || !is_prime(q)) throw InputError("paley_set: q must be an odd prime");
    std::vector<int> sq;
    for (int a = 1; a < q; ++a) sq.push_back(mod(static_cast<long long>(a) * a, q));
    return {q, sq};
}

/// Quadratic-residue character as a function on Z_q, with value 0 at 0.
inline ZqFun legendre_char(int q) {
    const ZqSubset squares = paley_set(q);
    ZqFun g(q);
    for (int a = 1; a < q; ++a) g[a] = squares.contains(a) ? 1.0 : -1.0;
    return g;
}

}  // namespace tgf
