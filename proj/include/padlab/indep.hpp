#pragma once

#include <vector>

#include "padlab/types.hpp"
#include "padlab/witness.hpp"

namespace padlab {

namespace detail {

inline ExactModule exact_closure(const Context& ctx, const std::vector<Vector>& gens) {
    for (const auto& g : gens) require_same(ctx, g.context());
    return exact_saturate(exact_span(mpz_class(ctx.p()), ctx.dim(), lift_all(gens)));
}

inline std::vector<Vector> joined(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::vector<Vector> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// exact distance as a comparable value: nullopt = member (distance 0)
inline std::optional<int> exact_closure_dist(const Context& ctx, const Vector& a,
                                             const std::vector<Vector>& gens) {
    return exact_dist_exp(lift(a), exact_closure(ctx, gens));
}

}  // namespace detail

/// Non-forking of a over B relative to A: the distance to the pure closure
/// does not drop when B is adjoined. Distances are compared exactly, so the
/// predicate keeps symmetry and transitivity at every scale; quantization
/// happens only in the reported DistanceValues.
inline bool independent(const Vector& a, const std::vector<Vector>& A, const std::vector<Vector>& B) {
    const Context& ctx = a.context();
    return detail::exact_closure_dist(ctx, a, A) == detail::exact_closure_dist(ctx, a, detail::joined(A, B));
}

inline bool independent_tuple(const std::vector<Vector>& tuple, const std::vector<Vector>& A,
                              const std::vector<Vector>& B) {
    std::vector<Vector> prefix(A);
    for (const auto& a : tuple) {
        if (!independent(a, prefix, B)) return false;
        prefix.push_back(a);
    }
    return true;
}

/// Rank of a over A: the distance to the pure closure of A; below precision
/// iff the type of a over A is bounded at this precision.
inline Distance rank(const Vector& a, const std::vector<Vector>& A) {
    return pure_closure(a.context(), A).dist_to(a);
}

/// A realization of the same type over A that is independent from B:
/// anchor + p^k u for a fresh unit direction u. Requires a spare direction
/// in the ambient module; below-precision positive rank is not representable
/// and raises PrecisionExhausted unless a itself already works.
inline Vector free_extension(const Vector& a, const std::vector<Vector>& A,
                             const std::vector<Vector>& B) {
    const Context& ctx = a.context();
    Submodule base = pure_closure(ctx, A);
    std::optional<int> exact = base.exact_dist(a);
    if (!exact) return a;  // bounded type: a is its own free extension
    if (*exact >= ctx.precision()) {
        if (independent(a, A, B)) return a;
        throw precision_exhausted("free extension of a below-precision type is not representable");
    }
    const int k = *exact;

    std::vector<Vector> occupied = pure_closure(ctx, detail::joined(detail::joined(A, B), {a})).generators();
    Vector u = Vector::zero(ctx);
    bool found = false;
    for (int i = 0; i < ctx.dim() && !found; ++i) {
        occupied.push_back(Vector::unit(ctx, i));
        if (p_independent(ctx, occupied)) {
            u = Vector::unit(ctx, i);
            found = true;
        }
        occupied.pop_back();
    }
    if (!found) throw ambient_too_small();

    Vector b = base.closest(a) + ctx.pow(k) * u;
    if (!same_type(b, a, A) || !independent(b, A, B))
        throw precision_exhausted("free extension postcondition failed");
    return b;
}

/// epsilon-independence: the type of a over A u B is within eps of the free
/// extension of its type over A. Tested consequence: equals
/// independent(a,A,B) or eps >= rank(a,A).
inline bool eps_independent(const Vector& a, const std::vector<Vector>& A,
                            const std::vector<Vector>& B, const Distance& eps) {
    if (independent(a, A, B)) return true;
    if (rank(a, A).is_below()) return true;  // forking happens below every representable threshold
    Vector b = free_extension(a, A, B);
    const auto AB = detail::joined(A, B);
    return type_distance(galois_type(a, AB), galois_type(b, AB)) <= eps;
}

/// Bounded diagnostic for Lascar eps-splitting of t^g(a/A u B) over A: looks
/// for tuples from B of length <= L with the same type over A at precision
/// yet a-extensions more than eps apart. A false return is not a proof of
/// non-splitting (the bound L truncates the search).
inline bool lascar_eps_splits(const Vector& a, const std::vector<Vector>& A,
                              const std::vector<Vector>& B, const Distance& eps, int L) {
    if (L < 1) throw precondition_violated("tuple-length bound L must be >= 1");
    const Context& ctx = a.context();
    std::vector<std::vector<Vector>> tuples{{}};
    for (int len = 1; len <= L; ++len) {
        std::vector<std::vector<Vector>> next;
        for (const auto& t : tuples)
            if (static_cast<int>(t.size()) == len - 1)
                for (const auto& b : B) {
                    auto u = t;
                    u.push_back(b);
                    next.push_back(std::move(u));
                }
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j < next.size(); ++j) {
                if (i == j) continue;
                if (!tuple_type_distance(ctx, A, next[i], next[j]).is_below()) continue;
                std::vector<Vector> ai{a}, aj{a};
                ai.insert(ai.end(), next[i].begin(), next[i].end());
                aj.insert(aj.end(), next[j].begin(), next[j].end());
                if (tuple_type_distance(ctx, A, ai, aj) > eps) return true;
            }
        tuples = std::move(next);
    }
    return false;
}

}  // namespace padlab
