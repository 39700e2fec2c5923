#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace tgf {

using cplx = std::complex<double>;

/// Absolute tolerance for zero tests and for Z_q function identities.
inline constexpr double kAbsTol = 1e-9;
/// Relative tolerance for graph identity checks, against max(1, |value|).
inline constexpr double kRelTol = 1e-6;
/// Upper bound on the number of states any brute-force enumeration may visit.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

inline int mod(long long a, int q) {
    long long r = a % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

/// base^exp with a saturating cap; returns cap + 1 on overflow of the cap.
inline std::uint64_t bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

inline void require_enumerable(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, std::string_view what) {
    if (bounded_pow(base, exp, cap) > cap)
        throw SizeGuardError(std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                             " exceeds the enumeration limit " + std::to_string(cap));
}

/// Integer power by repeated multiplication, exact for exponent 0 (z^0 = 1, including 0^0).
inline cplx ipow(cplx z, long long n) {
    if (n < 0) return cplx(1.0) / ipow(z, -n);
    cplx r(1.0);
    cplx b = z;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

/// zeta^k with zeta = e^{2 pi i / q}; k is reduced first so large arguments stay accurate.
inline cplx root_of_unity(long long k, int q) {
    const int r = mod(k, q);
    if (r == 0) return {1.0, 0.0};
    if (2 * r == q) return {-1.0, 0.0};
    if (4 * r == q) return {0.0, 1.0};
    if (4 * r == 3 * q) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * r / q);
}

inline double rel_error(cplx lhs, cplx rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline bool close_rel(cplx lhs, cplx rhs, double tol = kRelTol) { return rel_error(lhs, rhs) <= tol; }

inline bool close_abs(cplx lhs, cplx rhs, double tol = kAbsTol) { return std::abs(lhs - rhs) <= tol; }

/// Parses `re`, `re+imi` or `re-imi`. Whitespace is not allowed.
inline cplx parse_complex(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw InputError("empty complex literal");
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) throw InputError("whitespace in complex literal '" + s + "'");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double re = std::strtod(begin, &end);
    if (end == begin) throw InputError("bad complex literal '" + s + "'");
    if (*end == '\0') return {re, 0.0};
    if (*end != '+' && *end != '-') throw InputError("bad complex literal '" + s + "'");
    const char* im_begin = end;
    const double im = std::strtod(im_begin, &end);
    if (end == im_begin || *end != 'i' || *(end + 1) != '\0') throw InputError("bad complex literal '" + s + "'");
    return {re, im};
}

/// Rounds to 15 significant digits and maps -0.0 to 0.0, for reproducible output.
inline double round15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", round15(v));
    return buf;
}

/// Inverse of parse_complex.
inline std::string format_complex(cplx z) {
    const double im = round15(z.imag());
    if (im == 0.0) return format_number(z.real());
    return format_number(z.real()) + (im < 0 ? "" : "+") + format_number(im) + "i";
}

}  // namespace tgf
