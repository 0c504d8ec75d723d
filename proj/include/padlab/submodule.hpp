#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "padlab/exact.hpp"
#include "padlab/vector.hpp"

namespace padlab {

struct Pivot {
    int row;
    int val;
    friend bool operator==(const Pivot& a, const Pivot& b) { return a.row == b.row && a.val == b.val; }
};

namespace detail {

struct ResidueEchelon {
    std::vector<std::vector<int64_t>> cols;
    std::vector<Pivot> pivots;
};

// Canonical column echelon of the image mod p^N. Pivot = entry of minimal
// valuation, ties by lowest row then lowest column; pivot normalized to
// exactly p^v; pivot rows cleared from later columns and reduced below the
// pivot scale in earlier ones. Two equal residue modules produce identical
// matrices.
inline ResidueEchelon residue_echelon(const Context& ctx, std::vector<std::vector<int64_t>> active) {
    const int64_t pn = ctx.modulus();
    const int n = ctx.dim();
    auto reduce_col = [&](std::vector<int64_t>& c) {
        for (auto& x : c) x = ctx.reduce(x);
    };
    for (auto& c : active) reduce_col(c);
    std::erase_if(active, [](const std::vector<int64_t>& c) {
        return std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
    });

    ResidueEchelon out;
    while (!active.empty()) {
        int best_v = ctx.precision() + 1, best_row = -1;
        size_t best_col = 0;
        for (int row = 0; row < n && best_v > 0; ++row) {
            for (size_t c = 0; c < active.size(); ++c) {
                if (active[c][row] == 0) continue;
                int v = ctx.valuation(active[c][row]);
                if (v < best_v || (v == best_v && row < best_row)) {
                    best_v = v;
                    best_row = row;
                    best_col = c;
                    if (v == 0) break;
                }
            }
        }
        std::vector<int64_t> piv = std::move(active[best_col]);
        active.erase(active.begin() + static_cast<long>(best_col));

        const int64_t pv = ctx.pow(best_v);
        const int64_t unit = piv[best_row] / pv;
        const int64_t uinv = mod_inverse(unit % pn, pn);
        for (auto& x : piv) x = ctx.reduce(x * uinv);
        // pivot entry now exactly p^v

        for (auto& c : active) {
            const int64_t t = c[best_row] / pv;  // exact: global-min valuation
            for (int i = 0; i < n; ++i) c[i] = ctx.reduce(c[i] - t * piv[i]);
        }
        std::erase_if(active, [](const std::vector<int64_t>& c) {
            return std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
        });
        // reduce earlier columns below this pivot's scale
        for (auto& rc : out.cols) {
            const int64_t q = rc[best_row] / pv;
            if (q == 0) continue;
            for (int i = 0; i < n; ++i) rc[i] = ctx.reduce(rc[i] - q * piv[i]);
        }
        out.cols.push_back(std::move(piv));
        out.pivots.push_back({best_row, best_v});
    }
    return out;
}

}  // namespace detail

/// A finitely generated submodule of M, canonically echelonized at precision
/// N, with the exact module of the generators' integer lifts riding along.
class Submodule {
public:
    static Submodule span(const Context& ctx, const std::vector<Vector>& gens) {
        for (const auto& g : gens) require_same(ctx, g.context());
        std::vector<std::vector<int64_t>> cols;
        cols.reserve(gens.size());
        for (const auto& g : gens) cols.push_back(g.coords());
        auto ech = detail::residue_echelon(ctx, std::move(cols));
        ExactModule ex = exact_span(mpz_class(ctx.p()), ctx.dim(), lift_all(gens));
        return Submodule(ctx, std::move(ech), std::move(ex));
    }

    /// Smallest pure submodule containing this one (exact pure closure of the
    /// generators' lifts, observed at precision N).
    Submodule saturate() const {
        ExactModule sat = exact_saturate(exact_);
        std::vector<std::vector<int64_t>> cols;
        cols.reserve(sat.cols.size());
        for (const auto& c : sat.cols) {
            std::vector<int64_t> rc;
            rc.reserve(c.size());
            for (const auto& x : c) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mpz_class(ctx_.modulus()).get_mpz_t());
                rc.push_back(r.get_si());
            }
            cols.push_back(std::move(rc));
        }
        auto ech = detail::residue_echelon(ctx_, std::move(cols));
        return Submodule(ctx_, std::move(ech), std::move(sat));
    }

    const Context& context() const { return ctx_; }
    int rank() const { return static_cast<int>(cols_.size()); }
    const std::vector<Pivot>& pivots() const { return pivots_; }
    bool saturated() const {
        return std::all_of(pivots_.begin(), pivots_.end(), [](const Pivot& p) { return p.val == 0; });
    }
    std::vector<Vector> generators() const {
        std::vector<Vector> out;
        out.reserve(cols_.size());
        for (const auto& c : cols_) out.emplace_back(ctx_, c);
        return out;
    }
    const ExactModule& exact() const { return exact_; }

    /// Decides x in S + p^j M by triangular solve against the canonical form.
    bool member(const Vector& x, int j) const {
        require_same(ctx_, x.context());
        if (j < 0 || j > ctx_.precision())
            throw precondition_violated("membership level j must lie in [0, N]");
        if (j == 0) return true;
        const int64_t pj = ctx_.pow(j);
        auto red = [&](int64_t v) {
            int64_t r = v % pj;
            return r < 0 ? r + pj : r;
        };
        std::vector<int64_t> rem(x.coords());
        for (auto& v : rem) v = red(v);
        for (size_t c = 0; c < cols_.size(); ++c) {
            if (pivots_[c].val >= j) continue;  // column vanishes mod p^j
            const int64_t pv = ctx_.pow(pivots_[c].val);
            const int64_t e = rem[pivots_[c].row];
            if (e == 0) continue;
            if (e % pv != 0) return false;
            const int64_t t = red(e / pv);
            for (int i = 0; i < ctx_.dim(); ++i) rem[i] = red(rem[i] - t * cols_[c][i]);
        }
        return std::all_of(rem.begin(), rem.end(), [](int64_t v) { return v == 0; });
    }

    /// Quantized distance to the module: p^(-max{j : member(x, j)}), below
    /// precision iff member at j = N.
    Distance dist_to(const Vector& x) const {
        require_same(ctx_, x.context());
        int j = 0;
        while (j < ctx_.precision() && member(x, j + 1)) ++j;
        return j == ctx_.precision() ? Distance::below() : Distance::pow_neg(j);
    }

    /// Exact distance of the lift of x to the exact module (no quantization).
    /// nullopt = exact member.
    std::optional<int> exact_dist(const Vector& x) const {
        require_same(ctx_, x.context());
        return exact_dist_exp(lift(x), exact_);
    }

    /// Deterministic closest element: the lexicographically smallest
    /// coefficient tuple solving the system at the achieved level.
    Vector closest(const Vector& x) const {
        require_same(ctx_, x.context());
        Distance d = dist_to(x);
        if (d.is_below()) return x;
        const int j = d.exponent();
        Vector c = Vector::zero(ctx_);
        if (j == 0) return c;
        const int64_t pj = ctx_.pow(j);
        auto red = [&](int64_t v) {
            int64_t r = v % pj;
            return r < 0 ? r + pj : r;
        };
        std::vector<int64_t> rem(x.coords());
        for (auto& v : rem) v = red(v);
        for (size_t k = 0; k < cols_.size(); ++k) {
            if (pivots_[k].val >= j) continue;
            const int64_t pv = ctx_.pow(pivots_[k].val);
            const int64_t e = rem[pivots_[k].row];
            if (e == 0) continue;
            const int64_t t = red(e / pv) % ctx_.pow(j - pivots_[k].val);  // minimal representative
            for (int i = 0; i < ctx_.dim(); ++i) rem[i] = red(rem[i] - t * cols_[k][i]);
            c = c + t * Vector(ctx_, cols_[k]);
        }
        return c;
    }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.ctx_ == b.ctx_ && a.cols_ == b.cols_ && a.pivots_ == b.pivots_;
    }
    friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }

private:
    Submodule(Context ctx, detail::ResidueEchelon ech, ExactModule ex)
        : ctx_(std::move(ctx)), cols_(std::move(ech.cols)), pivots_(std::move(ech.pivots)),
          exact_(std::move(ex)) {}

    Context ctx_;
    std::vector<std::vector<int64_t>> cols_;
    std::vector<Pivot> pivots_;
    ExactModule exact_;
};

inline Submodule span(const Context& ctx, const std::vector<Vector>& gens) {
    return Submodule::span(ctx, gens);
}
inline Submodule saturate(const Submodule& s) { return s.saturate(); }

/// Pure closure of a generator list.
inline Submodule pure_closure(const Context& ctx, const std::vector<Vector>& gens) {
    return span(ctx, gens).saturate();
}

/// F_p-linear independence of the reductions mod p. Any vector of positive
/// valuation reduces to zero and makes the system dependent.
inline bool p_independent(const Context& ctx, const std::vector<Vector>& vs) {
    for (const auto& v : vs) require_same(ctx, v.context());
    const int64_t p = ctx.p();
    std::vector<std::vector<int64_t>> rows;
    for (const auto& v : vs) {
        std::vector<int64_t> r(v.coords());
        for (auto& x : r) x %= p;
        rows.push_back(std::move(r));
    }
    size_t rank = 0;
    for (int col = 0; col < ctx.dim() && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const int64_t inv = mod_inverse(rows[rank][col], p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] % p == 0) continue;
            const int64_t f = rows[r][col] * inv % p;
            for (int i = 0; i < ctx.dim(); ++i)
                rows[r][i] = ((rows[r][i] - f * rows[rank][i]) % p + p) % p;
        }
        ++rank;
    }
    return rank == rows.size();
}

/// Extends a p-independent system to n vectors by greedily appending standard
/// basis vectors in index order.
inline std::vector<Vector> extend_to_p_basis(const Context& ctx, std::vector<Vector> sys) {
    if (!p_independent(ctx, sys)) throw not_independent();
    for (int i = 0; i < ctx.dim() && static_cast<int>(sys.size()) < ctx.dim(); ++i) {
        sys.push_back(Vector::unit(ctx, i));
        if (!p_independent(ctx, sys)) sys.pop_back();
    }
    if (static_cast<int>(sys.size()) != ctx.dim())
        throw ambient_too_small("could not extend to a p-basis");
    return sys;
}

}  // namespace padlab
