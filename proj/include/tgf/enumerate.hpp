#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace tgf {

/// Calls `visit(v)` for every v in Z_q^n in lexicographic order (last
/// coordinate fastest). Throws SizeGuardError when q^n exceeds `limit`.
template <class Visit>
void for_each_vector(int q, int n, Visit&& visit, std::string_view what = "enumeration",
                     std::uint64_t limit = kEnumerationLimit) {
    if (q < 1) throw InputError(std::string(what) + ": modulus must be positive");
    require_enumerable(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n), limit, what);
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(static_cast<const std::vector<int>&>(v));
        int i = n - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) return;
        ++v[i];
    }
}

}  // namespace tgf
