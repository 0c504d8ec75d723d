#pragma once

#include <optional>
#include <vector>

#include "padlab/submodule.hpp"

namespace padlab {

// Isometric isomorphism witnesses between generated submodules.
//
// An isometric module isomorphism sending a_i to b_i extends to an ambient
// automorphism T with T a_i = b_i, and such a T exists exactly when the
// columns of the transposed tuple matrices generate the same submodule of
// Z_(p)^m (m = tuple length). The witness gate is therefore an exact module
// equality; the matrix on the saturation bases is rebuilt afterwards from
// residue-level echelon transcripts.

namespace detail {

// Column module of the transposed tuple matrix: one column of height m per
// ambient coordinate.
inline ExactModule transposed_tuple_module(const Context& ctx, const std::vector<Vector>& tuple) {
    std::vector<ZCol> cols;
    cols.reserve(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) {
        ZCol c;
        c.reserve(tuple.size());
        for (const auto& v : tuple) c.emplace_back(v[i]);
        cols.push_back(std::move(c));
    }
    return exact_span(mpz_class(ctx.p()), static_cast<int>(tuple.size()), std::move(cols));
}

struct TranscriptEchelon {
    std::vector<std::vector<int64_t>> cols;  // canonical columns + zero tail
    std::vector<std::vector<int64_t>> w;     // k x k column-major: input * W = cols
    std::vector<std::vector<int64_t>> winv;  // W^-1
};

// Canonical residue echelon with a full transcript; zero columns move to the
// end so all k column slots survive.
inline TranscriptEchelon transcript_echelon(int64_t p, int64_t pn, int m,
                                            std::vector<std::vector<int64_t>> cols) {
    const size_t k = cols.size();
    auto red = [&](int64_t v) {
        int64_t r = v % pn;
        return r < 0 ? r + pn : r;
    };
    auto val = [&](int64_t v) {
        v = red(v);
        if (v == 0) return 64;
        int w = 0;
        while (v % p == 0) {
            v /= p;
            ++w;
        }
        return w;
    };
    TranscriptEchelon t;
    t.cols = std::move(cols);
    for (auto& c : t.cols)
        for (auto& x : c) x = red(x);
    t.w.assign(k, std::vector<int64_t>(k, 0));
    t.winv.assign(k, std::vector<int64_t>(k, 0));
    for (size_t i = 0; i < k; ++i) t.w[i][i] = t.winv[i][i] = 1;

    auto scale = [&](size_t j, int64_t u) {  // col_j *= u (u a unit)
        for (int r = 0; r < m; ++r) t.cols[j][r] = red(t.cols[j][r] * u);
        for (size_t r = 0; r < k; ++r) t.w[j][r] = red(t.w[j][r] * u);
        const int64_t ui = mod_inverse(red(u), pn);
        for (size_t c = 0; c < k; ++c) t.winv[c][j] = red(t.winv[c][j] * ui);
    };
    auto axpy = [&](size_t j, size_t i, int64_t f) {  // col_j -= f * col_i
        for (int r = 0; r < m; ++r) t.cols[j][r] = red(t.cols[j][r] - f * t.cols[i][r]);
        for (size_t r = 0; r < k; ++r) t.w[j][r] = red(t.w[j][r] - f * t.w[i][r]);
        for (size_t c = 0; c < k; ++c) t.winv[c][i] = red(t.winv[c][i] + f * t.winv[c][j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(t.cols[i], t.cols[j]);
        std::swap(t.w[i], t.w[j]);
        for (size_t c = 0; c < k; ++c) std::swap(t.winv[c][i], t.winv[c][j]);
    };

    size_t done = 0;
    while (done < k) {
        int best_v = 65, best_row = -1;
        size_t best_col = 0;
        for (int row = 0; row < m && best_v > 0; ++row)
            for (size_t c = done; c < k; ++c) {
                if (red(t.cols[c][row]) == 0) continue;
                const int v = val(t.cols[c][row]);
                if (v < best_v || (v == best_v && row < best_row)) {
                    best_v = v;
                    best_row = row;
                    best_col = c;
                    if (v == 0) break;
                }
            }
        if (best_row < 0) break;  // only zero columns remain
        swap_cols(done, best_col);
        int64_t pv = 1;
        for (int i = 0; i < best_v; ++i) pv *= p;
        scale(done, mod_inverse(red(t.cols[done][best_row] / pv), pn));
        for (size_t c = done + 1; c < k; ++c)
            if (const int64_t f = t.cols[c][best_row] / pv; f != 0) axpy(c, done, f);
        for (size_t c = 0; c < done; ++c)
            if (const int64_t q = t.cols[c][best_row] / pv; q != 0) axpy(c, done, q);
        ++done;
    }
    return t;
}

inline std::vector<std::vector<int64_t>> mat_mul(int64_t pn, const std::vector<std::vector<int64_t>>& a,
                                                 const std::vector<std::vector<int64_t>>& b) {
    // column-major k x k product a*b
    const size_t k = a.size();
    std::vector<std::vector<int64_t>> out(k, std::vector<int64_t>(k, 0));
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < k; ++l) {
            if (b[j][l] == 0) continue;
            for (size_t i = 0; i < k; ++i) out[j][i] = (out[j][i] + a[l][i] * b[j][l]) % pn;
        }
    return out;
}

inline std::vector<std::vector<int64_t>> mat_transpose(const std::vector<std::vector<int64_t>>& a) {
    const size_t k = a.size();
    std::vector<std::vector<int64_t>> out(k, std::vector<int64_t>(k, 0));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < k; ++i) out[j][i] = a[i][j];
    return out;
}

}  // namespace detail

/// Coordinates of a member of a saturated submodule on its canonical basis
/// (unique because all pivots are units).
inline std::vector<int64_t> coordinates(const Vector& x, const Submodule& s) {
    if (!s.saturated()) throw precondition_violated("coordinates need a saturated submodule");
    if (!s.member(x, x.context().precision()))
        throw precondition_violated("vector is not a member of the submodule");
    const Context& ctx = s.context();
    const auto gens = s.generators();
    std::vector<int64_t> rem(x.coords());
    std::vector<int64_t> t(gens.size(), 0);
    for (size_t c = 0; c < gens.size(); ++c) {
        const int row = s.pivots()[c].row;
        t[c] = ctx.reduce(rem[row]);  // pivot entry is exactly 1
        for (int i = 0; i < ctx.dim(); ++i) rem[i] = ctx.reduce(rem[i] - t[c] * gens[c][i]);
    }
    return t;
}

/// Isometric module isomorphism between the pure closures of two tuples,
/// represented on the canonical saturation bases.
struct LinearMap {
    Submodule domain;    // saturated closure of the first tuple
    Submodule codomain;  // saturated closure of the second tuple
    std::vector<std::vector<int64_t>> matrix;  // k x k column-major, residues

    Vector apply(const Vector& x) const {
        const auto t = coordinates(x, domain);
        const Context& ctx = codomain.context();
        const auto gens = codomain.generators();
        std::vector<int64_t> img(matrix.size(), 0);
        for (size_t j = 0; j < t.size(); ++j)
            for (size_t i = 0; i < matrix.size(); ++i)
                img[i] = ctx.reduce(img[i] + matrix[j][i] * t[j]);
        Vector y = Vector::zero(ctx);
        for (size_t i = 0; i < img.size(); ++i) y = y + img[i] * gens[i];
        return y;
    }
};

/// Witness for t^g equality of tuples: an isometric isomorphism of the pure
/// closures sending a_i to b_i, if one exists at this precision.
inline std::optional<LinearMap> witness_map(const Context& ctx, const std::vector<Vector>& a_tuple,
                                            const std::vector<Vector>& b_tuple) {
    if (a_tuple.size() != b_tuple.size())
        throw precondition_violated("witness_map needs tuples of equal length");
    for (const auto& v : a_tuple) require_same(ctx, v.context());
    for (const auto& v : b_tuple) require_same(ctx, v.context());

    Submodule sat_a = pure_closure(ctx, a_tuple);
    Submodule sat_b = pure_closure(ctx, b_tuple);
    if (a_tuple.empty())
        return LinearMap{sat_a, sat_b, {}};

    // exact gate: same column module of the transposed tuple matrices
    ExactModule ta = detail::transposed_tuple_module(ctx, a_tuple);
    ExactModule tb = detail::transposed_tuple_module(ctx, b_tuple);
    if (ta.rank() != tb.rank() || !exact_equal(ta, tb)) return std::nullopt;
    if (sat_a.rank() != sat_b.rank()) return std::nullopt;  // defensive; implied

    const size_t k = static_cast<size_t>(sat_a.rank());
    if (k == 0) return LinearMap{sat_a, sat_b, {}};
    const size_t m = a_tuple.size();

    // residue coordinate matrices, transposed: m rows, k columns
    std::vector<std::vector<int64_t>> xa(k, std::vector<int64_t>(m, 0));
    std::vector<std::vector<int64_t>> xb(k, std::vector<int64_t>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        const auto ca = coordinates(a_tuple[i], sat_a);
        const auto cb = coordinates(b_tuple[i], sat_b);
        for (size_t j = 0; j < k; ++j) {
            xa[j][i] = ca[j];
            xb[j][i] = cb[j];
        }
    }
    auto ea = detail::transcript_echelon(ctx.p(), ctx.modulus(), static_cast<int>(m), std::move(xa));
    auto eb = detail::transcript_echelon(ctx.p(), ctx.modulus(), static_cast<int>(m), std::move(xb));
    if (ea.cols != eb.cols)
        throw precision_exhausted("witness gate passed but residue forms diverge");
    auto g = detail::mat_mul(ctx.modulus(), ea.w, eb.winv);
    return LinearMap{std::move(sat_a), std::move(sat_b), detail::mat_transpose(g)};
}

/// Witness over a base: an automorphism fixing the listed generators
/// pointwise and mapping one tuple to the other.
inline std::optional<LinearMap> witness_map_over(const Context& ctx, const std::vector<Vector>& base,
                                                 const std::vector<Vector>& a_tuple,
                                                 const std::vector<Vector>& b_tuple) {
    std::vector<Vector> a(base), b(base);
    a.insert(a.end(), a_tuple.begin(), a_tuple.end());
    b.insert(b.end(), b_tuple.begin(), b_tuple.end());
    return witness_map(ctx, a, b);
}

/// Tuple Galois-type distance at precision N: p^(-j) for the largest j at
/// which the two base-extended tuples are witness-equivalent mod p^j, below
/// precision if they are equivalent at full precision.
inline Distance tuple_type_distance(const Context& ctx, const std::vector<Vector>& base,
                                    const std::vector<Vector>& t1, const std::vector<Vector>& t2) {
    if (t1.size() != t2.size()) throw precondition_violated("tuples of equal length required");
    std::vector<Vector> u(base), v(base);
    u.insert(u.end(), t1.begin(), t1.end());
    v.insert(v.end(), t2.begin(), t2.end());
    const size_t m = u.size();
    if (m == 0) return Distance::below();

    auto equal_mod = [&](int j) {
        if (j == 0) return true;
        int64_t pj = 1;
        for (int i = 0; i < j; ++i) pj *= ctx.p();
        auto cols_of = [&](const std::vector<Vector>& tup) {
            std::vector<std::vector<int64_t>> cols;
            cols.reserve(ctx.dim());
            for (int i = 0; i < ctx.dim(); ++i) {
                std::vector<int64_t> c;
                c.reserve(m);
                for (const auto& w : tup) c.push_back(w[i] % pj);
                cols.push_back(std::move(c));
            }
            return cols;
        };
        auto c1 = detail::transcript_echelon(ctx.p(), pj, static_cast<int>(m), cols_of(u));
        auto c2 = detail::transcript_echelon(ctx.p(), pj, static_cast<int>(m), cols_of(v));
        return c1.cols == c2.cols;
    };

    if (equal_mod(ctx.precision())) return Distance::below();
    int j = ctx.precision() - 1;
    while (j > 0 && !equal_mod(j)) --j;
    return Distance::pow_neg(j);
}

}  // namespace padlab
