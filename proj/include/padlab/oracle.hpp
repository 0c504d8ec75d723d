#pragma once

#include <vector>

#include "padlab/types.hpp"

namespace padlab {

inline constexpr int64_t kEnumerationBound = 1 << 20;

namespace detail {

inline void require_enumerable(int64_t states) {
    if (states > kEnumerationBound)
        throw context_too_large("enumeration would visit " + std::to_string(states) + " states");
}

inline int64_t ipow_checked(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kEnumerationBound) return kEnumerationBound + 1;
        r *= base;
    }
    return r;
}

}  // namespace detail

/// Brute-force distance of x to the module generated by gens, by walking all
/// coefficient tuples mod p^N. Independent of the echelon code.
inline Distance oracle_dist(const Vector& x, const std::vector<Vector>& gens) {
    const Context& ctx = x.context();
    for (const auto& g : gens) require_same(ctx, g.context());
    const int64_t pn = ctx.modulus();
    detail::require_enumerable(detail::ipow_checked(pn, static_cast<int>(gens.size())));

    Distance best = norm(x);
    std::vector<int64_t> t(gens.size(), 0);
    while (true) {
        Vector s = Vector::zero(ctx);
        for (size_t i = 0; i < gens.size(); ++i) s = s + t[i] * gens[i];
        best = min(best, distance(x, s));
        size_t i = 0;
        while (i < t.size() && ++t[i] == pn) t[i++] = 0;
        if (i == t.size()) break;
    }
    return best;
}

/// Every element of M, for exhaustive checks at desk-scale contexts.
inline std::vector<Vector> enumerate_module(const Context& ctx) {
    detail::require_enumerable(detail::ipow_checked(ctx.modulus(), ctx.dim()));
    std::vector<Vector> out;
    std::vector<int64_t> c(ctx.dim(), 0);
    while (true) {
        out.emplace_back(ctx, c);
        int i = 0;
        while (i < ctx.dim() && ++c[i] == ctx.modulus()) c[i++] = 0;
        if (i == ctx.dim()) break;
    }
    return out;
}

/// Brute-force infimum distance between the realization sets of two types
/// over a common base, by walking all of M.
inline Distance oracle_type_distance(const TypeInvariant& q1, const TypeInvariant& q2) {
    if (!(q1.base == q2.base)) throw precondition_violated("oracle needs a common base");
    const Context& ctx = q1.anchor.context();
    std::vector<Vector> r1, r2;
    for (const auto& x : enumerate_module(ctx)) {
        TypeInvariant q = galois_type(x, q1.base);
        if (same_type(q, q1)) r1.push_back(x);
        if (same_type(q, q2)) r2.push_back(x);
    }
    if (r1.empty() || r2.empty())
        throw precondition_violated("type has no realization in this context");
    Distance best = Distance::one();
    bool first = true;
    for (const auto& x : r1)
        for (const auto& y : r2) {
            Distance d = distance(x, y);
            best = first ? d : min(best, d);
            first = false;
        }
    return best;
}

}  // namespace padlab
