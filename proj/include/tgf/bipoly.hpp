#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "numeric.hpp"

namespace tgf {

using BigInt = boost::multiprecision::cpp_int;

/// Bivariate polynomial in (x, y) with arbitrary-precision integer
/// coefficients. Only non-zero coefficients are stored.
class BiPoly {
   public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BiPoly() = default;
    static BiPoly constant(const BigInt& c) {
        BiPoly p;
        p.add(0, 0, c);
        return p;
    }
    static BiPoly monomial(int i, int j, const BigInt& c = 1) {
        BiPoly p;
        p.add(i, j, c);
        return p;
    }

    void add(int i, int j, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coefficient(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const std::map<Key, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    /// Multiplies by x^i y^j.
    BiPoly shifted(int i, int j) const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + i, k.second + j}, c);
        return r;
    }

    cplx evaluate(cplx x, cplx y) const {
        cplx sum(0.0);
        for (const auto& [k, c] : terms_) sum += c.convert_to<double>() * ipow(x, k.first) * ipow(y, k.second);
        return sum;
    }

    /// Exact evaluation at integer points.
    BigInt evaluate(const BigInt& x, const BigInt& y) const {
        BigInt sum = 0;
        for (const auto& [k, c] : terms_) sum += c * pow(x, static_cast<unsigned>(k.first)) * pow(y, static_cast<unsigned>(k.second));
        return sum;
    }

    bool operator==(const BiPoly&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            os << (first ? "" : " + ") << c;
            if (k.first) os << "*x^" << k.first;
            if (k.second) os << "*y^" << k.second;
            first = false;
        }
        return os;
    }

   private:
    std::map<Key, BigInt> terms_;
};

}  // namespace tgf
