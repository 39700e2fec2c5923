#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace tgf {

/// Complex-valued function on Z_q, indexed by residue.
class ZqFun {
   public:
    ZqFun() = default;
    explicit ZqFun(int q) : values_(static_cast<std::size_t>(check_modulus(q)), cplx(0.0)) {}
    explicit ZqFun(std::vector<cplx> values) : values_(std::move(values)) { check_modulus(size()); }
    ZqFun(std::initializer_list<cplx> values) : values_(values) { check_modulus(size()); }

    int q() const noexcept { return size(); }
    cplx& operator[](int a) { return values_[static_cast<std::size_t>(mod(a, size()))]; }
    const cplx& operator[](int a) const { return values_[static_cast<std::size_t>(mod(a, size()))]; }
    const std::vector<cplx>& values() const noexcept { return values_; }

    ZqFun& operator+=(const ZqFun& o) {
        same_modulus(*this, o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    ZqFun& operator-=(const ZqFun& o) {
        same_modulus(*this, o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    ZqFun& operator*=(cplx s) {
        for (auto& v : values_) v *= s;
        return *this;
    }
    friend ZqFun operator+(ZqFun a, const ZqFun& b) { return a += b; }
    friend ZqFun operator-(ZqFun a, const ZqFun& b) { return a -= b; }
    friend ZqFun operator*(cplx s, ZqFun f) { return f *= s; }

    static void same_modulus(const ZqFun& f, const ZqFun& g) {
        if (f.q() != g.q())
            throw InputError("modulus mismatch: " + std::to_string(f.q()) + " vs " + std::to_string(g.q()));
    }

   private:
    int size() const noexcept { return static_cast<int>(values_.size()); }
    static int check_modulus(int q) {
        if (q < 1) throw InputError("Z_q function needs q >= 1");
        return q;
    }
    std::vector<cplx> values_;
};

/// Largest entrywise distance.
inline double max_abs_diff(const ZqFun& f, const ZqFun& g) {
    ZqFun::same_modulus(f, g);
    double d = 0.0;
    for (int a = 0; a < f.q(); ++a) d = std::max(d, std::abs(f[a] - g[a]));
    return d;
}

/// Subset of Z_q, kept sorted.
struct ZqSubset {
    int q = 1;
    std::vector<int> members;

    ZqSubset() = default;
    ZqSubset(int modulus, std::vector<int> elems) : q(modulus), members(std::move(elems)) {
        if (q < 1) throw InputError("Z_q subset needs q >= 1");
        for (int& a : members) {
            if (a < 0 || a >= q) throw InputError("subset member " + std::to_string(a) + " out of range");
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
    bool contains(int a) const { return std::binary_search(members.begin(), members.end(), mod(a, q)); }
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const ZqSubset&) const = default;

    static ZqSubset all(int q) {
        std::vector<int> m(static_cast<std::size_t>(q));
        for (int a = 0; a < q; ++a) m[a] = a;
        return {q, m};
    }
    static ZqSubset nonzero(int q) {
        std::vector<int> m;
        for (int a = 1; a < q; ++a) m.push_back(a);
        return {q, m};
    }
};

inline ZqFun delta(int q, int a) {
    ZqFun f(q);
    f[a] = 1.0;
    return f;
}

inline ZqFun indicator(const ZqSubset& s) {
    ZqFun f(s.q);
    for (int a : s.members) f[a] = 1.0;
    return f;
}

/// chi_c(a) = zeta^{ca}, zeta = e^{2 pi i / q}.
inline ZqFun character(int q, int c) {
    ZqFun f(q);
    for (int a = 0; a < q; ++a) f[a] = root_of_unity(static_cast<long long>(c) * a, q);
    return f;
}

inline ZqFun pointwise(const ZqFun& f, const ZqFun& g) {
    ZqFun::same_modulus(f, g);
    ZqFun h(f.q());
    for (int a = 0; a < f.q(); ++a) h[a] = f[a] * g[a];
    return h;
}

/// (f * g)(a) = sum_b f(b) g(a - b), so that delta_a * delta_b = delta_{a+b}.
inline ZqFun convolve(const ZqFun& f, const ZqFun& g) {
    ZqFun::same_modulus(f, g);
    const int q = f.q();
    ZqFun h(q);
    for (int a = 0; a < q; ++a) {
        cplx s(0.0);
        for (int b = 0; b < q; ++b) s += f[b] * g[a - b];
        h[a] = s;
    }
    return h;
}

/// (f star g)(a) = sum_b conj(f(b)) g(b + a), so that delta_a star delta_b = delta_{b-a}.
inline ZqFun crosscorr(const ZqFun& f, const ZqFun& g) {
    ZqFun::same_modulus(f, g);
    const int q = f.q();
    ZqFun h(q);
    for (int a = 0; a < q; ++a) {
        cplx s(0.0);
        for (int b = 0; b < q; ++b) s += std::conj(f[b]) * g[b + a];
        h[a] = s;
    }
    return h;
}

/// fhat(b) = <f, chi_b> = sum_a f(a) zeta^{-ab}. Direct O(q^2) sum.
inline ZqFun dft(const ZqFun& f) {
    const int q = f.q();
    ZqFun h(q);
    for (int b = 0; b < q; ++b) {
        cplx s(0.0);
        for (int a = 0; a < q; ++a) s += f[a] * root_of_unity(-static_cast<long long>(a) * b, q);
        h[b] = s;
    }
    return h;
}

/// f(a) = q^{-1} sum_b fhat(b) zeta^{ab}.
inline ZqFun idft(const ZqFun& fhat) {
    const int q = fhat.q();
    ZqFun h(q);
    for (int a = 0; a < q; ++a) {
        cplx s(0.0);
        for (int b = 0; b < q; ++b) s += fhat[b] * root_of_unity(static_cast<long long>(a) * b, q);
        h[a] = s / static_cast<double>(q);
    }
    return h;
}

/// <f, g> = sum f(a) conj(g(a)).
inline cplx inner(const ZqFun& f, const ZqFun& g) {
    ZqFun::same_modulus(f, g);
    cplx s(0.0);
    for (int a = 0; a < f.q(); ++a) s += f[a] * std::conj(g[a]);
    return s;
}

inline double norm_sq(const ZqFun& f) { return inner(f, f).real(); }

inline bool is_subgroup(const ZqSubset& p) {
    if (!p.contains(0)) return false;
    for (int a : p.members)
        for (int b : p.members)
            if (!p.contains(a + b)) return false;
    return true;
}

/// P# = {b : zeta^{ab} = 1 for all a in P}, for a subgroup P.
inline ZqSubset annihilator(const ZqSubset& p) {
    if (!is_subgroup(p)) throw InputError("annihilator: set is not a subgroup of Z_q");
    std::vector<int> out;
    for (int b = 0; b < p.q; ++b) {
        bool ok = true;
        for (int a : p.members)
            if (mod(static_cast<long long>(a) * b, p.q) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(b);
    }
    return {p.q, out};
}

struct Sides {
    cplx lhs;
    cplx rhs;
};

/// sum_{a in P} f(a + b) against |P#|^{-1} sum_{a in P#} fhat(a) chi_b(a).
inline Sides poisson_check(const ZqFun& f, const ZqSubset& p, int b) {
    if (f.q() != p.q) throw InputError("poisson_check: modulus mismatch");
    const ZqSubset sharp = annihilator(p);
    const ZqFun fhat = dft(f);
    Sides s{cplx(0.0), cplx(0.0)};
    for (int a : p.members) s.lhs += f[a + b];
    for (int a : sharp.members) s.rhs += fhat[a] * root_of_unity(static_cast<long long>(a) * b, p.q);
    s.rhs /= static_cast<double>(sharp.size());
    return s;
}

/// Parses comma-separated complex literals, e.g. `1,-1,0` or `0.5+1i,2`.
inline ZqFun parse_zqfun(std::string_view text) {
    std::vector<cplx> v;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        v.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ZqFun(std::move(v));
}

inline std::string format_zqfun(const ZqFun& f) {
    std::string out;
    for (int a = 0; a < f.q(); ++a) out += (a ? "," : "") + format_complex(f[a]);
    return out;
}

}  // namespace tgf
