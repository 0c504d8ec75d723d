#pragma once

#include <vector>

#include "padlab/indep.hpp"
#include "padlab/rng.hpp"

namespace padlab {

/// The realization set D of an unbounded type over A, together with the
/// forking equivalence and the closure operator on its quotient.
class GeometrySpace {
public:
    GeometrySpace(Context ctx, std::vector<Vector> base_gens, const Vector& representative)
        : ctx_(std::move(ctx)), base_gens_(std::move(base_gens)),
          type_(galois_type(representative, base_gens_)), rep_(representative) {
        require_same(ctx_, representative.context());
        if (type_.radius.is_below())
            throw precondition_violated("geometry space needs an unbounded type (positive radius)");
    }

    const Context& context() const { return ctx_; }
    const std::vector<Vector>& base() const { return base_gens_; }
    const TypeInvariant& type() const { return type_; }
    const Vector& representative() const { return rep_; }

    bool realizes(const Vector& x) const { return same_type(galois_type(x, base_gens_), type_); }

    void require_realizes(const Vector& x) const {
        if (!realizes(x)) throw not_a_realization();
    }

    /// Deterministic realization drawn from (seed, index): a ball element of
    /// the base plus p^k times a fresh unit direction.
    Vector sample(uint64_t seed, uint64_t index) const {
        Rng rng(mix(seed, index));
        const int k = type_.radius.exponent();
        const auto base_cols = type_.base.generators();
        for (int attempt = 0; attempt < 256; ++attempt) {
            Vector beta = type_.anchor;
            for (const auto& c : base_cols)
                beta = beta + (ctx_.pow(k) * rng.below(ctx_.modulus())) * c;
            std::vector<int64_t> w(ctx_.dim());
            for (auto& x : w) x = rng.below(ctx_.modulus());
            Vector u(ctx_, w);
            auto sys = base_cols;
            sys.push_back(u);
            if (!p_independent(ctx_, sys)) continue;
            Vector x = beta + ctx_.pow(k) * u;
            if (realizes(x)) return x;
        }
        throw precondition_violated("sampler failed to hit the realization set");
    }

private:
    Context ctx_;
    std::vector<Vector> base_gens_;
    TypeInvariant type_;
    Vector rep_;
};

/// One forking-equivalence class of D, carried by a representative.
struct GeometryClass {
    Vector representative;
};

/// The forking equivalence on D: b and b' are equivalent iff they fork over
/// the base, i.e. the distance of b to the closure drops when b' is adjoined.
inline bool forks_equiv(const Vector& b, const Vector& b2, const GeometrySpace& g) {
    g.require_realizes(b);
    g.require_realizes(b2);
    if (b == b2) return true;
    return !independent(b, g.base(), {b2});
}

/// Direction of a realization: (x - closest(x))/p^k reduced mod p. The class
/// of x in D/E is exactly the projective class of this direction over the
/// base reductions, which makes it the invariant the quotient closure reads.
inline Vector direction_mod_p(const Vector& x, const GeometrySpace& g) {
    g.require_realizes(x);
    const Context& ctx = g.context();
    const int k = g.type().radius.exponent();
    const Vector c = g.type().base.closest(x);
    std::vector<int64_t> d(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) d[i] = ctx.reduce(x[i] - c[i]) / ctx.pow(k) % ctx.p();
    return Vector(ctx, d);
}

namespace detail {

inline int fp_rank(const Context& ctx, std::vector<std::vector<int64_t>> rows) {
    const int64_t p = ctx.p();
    for (auto& r : rows)
        for (auto& x : r) x = ((x % p) + p) % p;
    int rank = 0;
    for (int col = 0; col < ctx.dim() && rank < static_cast<int>(rows.size()); ++col) {
        int sel = rank;
        while (sel < static_cast<int>(rows.size()) && rows[sel][col] == 0) ++sel;
        if (sel == static_cast<int>(rows.size())) continue;
        std::swap(rows[rank], rows[sel]);
        const int64_t inv = mod_inverse(rows[rank][col], p);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int64_t f = rows[r][col] * inv % p;
            for (int i = 0; i < ctx.dim(); ++i) rows[r][i] = ((rows[r][i] - f * rows[rank][i]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Closure on the quotient D/E. Quantifying over all representatives reduces
/// in this class to a rank test on direction classes over the base, which is
/// manifestly representative-independent; the K-resampling suite checks that
/// rather than assumes it.
inline bool closure_member(const GeometryClass& a, const std::vector<GeometryClass>& bs,
                           const GeometrySpace& g) {
    const Context& ctx = g.context();
    std::vector<std::vector<int64_t>> dirs;
    for (const auto& c : g.type().base.generators()) dirs.push_back(c.coords());
    for (const auto& b : bs) dirs.push_back(direction_mod_p(b.representative, g).coords());
    const int base_rank = detail::fp_rank(ctx, dirs);
    dirs.push_back(direction_mod_p(a.representative, g).coords());
    return detail::fp_rank(ctx, dirs) == base_rank;
}

/// Element-level closure with no quotient; idempotence fails for it.
inline bool naive_closure_member(const Vector& a, const std::vector<Vector>& bs,
                                 const GeometrySpace& g) {
    g.require_realizes(a);
    for (const auto& b : bs) g.require_realizes(b);
    return !independent(a, g.base(), bs);
}

/// Matroid rank of a family of classes: size of a maximal subfamily with no
/// member in the closure of the others (greedy, valid by exchange).
inline int dimension(const std::vector<GeometryClass>& classes, const GeometrySpace& g) {
    std::vector<GeometryClass> picked;
    for (const auto& c : classes)
        if (!closure_member(c, picked, g)) picked.push_back(c);
    return static_cast<int>(picked.size());
}

/// For the norm-one geometry over the empty base: the projective point of
/// the reduction mod p (first unit coordinate scaled to one).
inline std::vector<int64_t> fp_line(const Vector& b, const GeometrySpace& g) {
    if (!g.base().empty() || g.type().radius != Distance::one())
        throw precondition_violated("fp_line needs base = {} and radius 1");
    g.require_realizes(b);
    const int64_t p = g.context().p();
    std::vector<int64_t> r(b.coords());
    for (auto& x : r) x %= p;
    int lead = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] != 0) {
            lead = i;
            break;
        }
    const int64_t inv = mod_inverse(r[lead], p);
    for (auto& x : r) x = x * inv % p;
    return r;
}

}  // namespace padlab
