#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "padlab/errors.hpp"
#include "padlab/vector.hpp"

namespace padlab {

// Exact submodule arithmetic over the localization of Z at p.
//
// Vectors enter the library as canonical residues in [0, p^N); their integer
// lifts generate a module over Z localized at p, and this kernel computes
// with that module exactly. The precision-N surface (member / dist_to /
// canonical residue forms) quantizes afterwards, so no digit is ever lost
// inside a computation.

using ZCol = std::vector<mpz_class>;

inline int vp(const mpz_class& x, const mpz_class& p) {
    if (x == 0) return -1;  // callers treat nonzero only; -1 flags zero
    mpz_class r;
    return static_cast<int>(mpz_remove(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

/// Triangular generator matrix of a finitely generated submodule of Z_(p)^n.
///
/// Invariants: pivot rows are distinct; column j is zero at pivot rows of
/// earlier columns; every entry of column j has valuation >= val[j], and the
/// pivot entry is p^val[j] times a p-unit. Columns are ordered by processing
/// order (valuations non-decreasing).
struct ExactModule {
    mpz_class p;
    int n = 0;
    std::vector<ZCol> cols;
    std::vector<int> pivot_row;
    std::vector<int> pivot_val;

    int rank() const { return static_cast<int>(cols.size()); }
};

namespace detail {

inline int col_val_at(const ZCol& c, int row, const mpz_class& p) { return vp(c[row], p); }

// Unit-scaled clearing keeps everything integral: scaling a column by a
// p-unit does not change the module over Z_(p).
inline void clear_row(ZCol& target, const ZCol& pivot_col, int row, int piv_val, const mpz_class& p,
                      const mpz_class& p_to_val) {
    if (target[row] == 0) return;
    mpz_class unit = pivot_col[row] / p_to_val;  // exact by pivot normal form
    mpz_class t = target[row] / p_to_val;        // exact: v(target[row]) >= piv_val
    if (target[row] % p_to_val != 0)
        throw precision_exhausted("echelon invariant violated: uncertified division");
    (void)piv_val;
    for (size_t i = 0; i < target.size(); ++i) target[i] = unit * target[i] - t * pivot_col[i];
}

}  // namespace detail

/// Valuation-pivoted column echelon over Z_(p). Exact; zero columns dropped.
inline ExactModule exact_span(const mpz_class& p, int n, std::vector<ZCol> gens) {
    ExactModule m;
    m.p = p;
    m.n = n;
    std::vector<ZCol> active;
    for (auto& g : gens) {
        bool zero = std::all_of(g.begin(), g.end(), [](const mpz_class& x) { return x == 0; });
        if (!zero) active.push_back(std::move(g));
    }
    while (!active.empty()) {
        // global minimum valuation; ties by lowest row, then column order
        int best_v = -1, best_row = -1;
        size_t best_col = 0;
        for (int row = 0; row < n; ++row) {
            for (size_t c = 0; c < active.size(); ++c) {
                if (active[c][row] == 0) continue;
                int v = vp(active[c][row], p);
                if (best_v < 0 || v < best_v || (v == best_v && row < best_row)) {
                    best_v = v;
                    best_row = row;
                    best_col = c;
                }
            }
            if (best_v == 0 && best_row == row) break;  // cannot improve below 0
        }
        ZCol piv = std::move(active[best_col]);
        active.erase(active.begin() + static_cast<long>(best_col));
        mpz_class p_to_val;
        mpz_pow_ui(p_to_val.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(best_v));
        for (auto& c : active) detail::clear_row(c, piv, best_row, best_v, p, p_to_val);
        std::erase_if(active, [](const ZCol& c) {
            return std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x == 0; });
        });
        m.cols.push_back(std::move(piv));
        m.pivot_row.push_back(best_row);
        m.pivot_val.push_back(best_v);
    }
    return m;
}

/// Pure closure: divide each column by p^val (exact by the echelon invariant),
/// re-echelonize, and repeat until every pivot is a unit.
inline ExactModule exact_saturate(ExactModule m) {
    for (int round = 0; round < 4096; ++round) {
        bool all_units = true;
        for (size_t j = 0; j < m.cols.size(); ++j) {
            if (m.pivot_val[j] == 0) continue;
            all_units = false;
            mpz_class d;
            mpz_pow_ui(d.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(m.pivot_val[j]));
            for (auto& x : m.cols[j]) {
                if (x % d != 0)
                    throw precision_exhausted("saturation division not certified by echelon invariant");
                x /= d;
            }
        }
        if (all_units) return m;
        m = exact_span(m.p, m.n, std::move(m.cols));
    }
    throw precision_exhausted("saturation did not stabilize");
}

/// Exact membership x in S over Z_(p) (coefficients may have unit denominators).
inline bool exact_member(const ZCol& x, const ExactModule& m) {
    ZCol rem = x;
    for (size_t j = 0; j < m.cols.size(); ++j) {
        const mpz_class& e = rem[m.pivot_row[j]];
        if (e == 0) continue;
        mpz_class d;
        mpz_pow_ui(d.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(m.pivot_val[j]));
        if (e % d != 0) return false;
        mpz_class unit = m.cols[j][m.pivot_row[j]] / d;
        mpz_class t = e / d;
        for (size_t i = 0; i < rem.size(); ++i) rem[i] = unit * rem[i] - t * m.cols[j][i];
    }
    return std::all_of(rem.begin(), rem.end(), [](const mpz_class& v) { return v == 0; });
}

/// Membership in S + p^j Z_(p)^n, any j >= 0.
inline bool exact_member_mod(const ZCol& x, const ExactModule& m, int j) {
    if (j <= 0) return true;
    mpz_class pj;
    mpz_pow_ui(pj.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(j));
    auto red = [&](const mpz_class& v) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pj.get_mpz_t());
        return r;
    };
    ZCol rem(x.size());
    for (size_t i = 0; i < x.size(); ++i) rem[i] = red(x[i]);
    for (size_t c = 0; c < m.cols.size(); ++c) {
        if (m.pivot_val[c] >= j) continue;  // column is 0 mod p^j at scale
        mpz_class e = rem[m.pivot_row[c]];
        if (e == 0) continue;
        mpz_class d;
        mpz_pow_ui(d.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(m.pivot_val[c]));
        if (e % d != 0) return false;
        mpz_class unit = red(m.cols[c][m.pivot_row[c]] / d);
        mpz_class uinv;
        if (mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), pj.get_mpz_t()) == 0)
            throw precision_exhausted("pivot unit not invertible");
        mpz_class t = red((e / d) * uinv);
        for (size_t i = 0; i < rem.size(); ++i) rem[i] = red(rem[i] - t * m.cols[c][i]);
    }
    return std::all_of(rem.begin(), rem.end(), [](const mpz_class& v) { return v == 0; });
}

/// Exact distance from x to the module: nullopt means x is a member (true
/// distance 0); otherwise the exponent k of the true distance p^(-k).
inline std::optional<int> exact_dist_exp(const ZCol& x, const ExactModule& m) {
    if (exact_member(x, m)) return std::nullopt;
    for (int j = 1; j < 100000; ++j)
        if (!exact_member_mod(x, m, j)) return j - 1;
    throw precision_exhausted("distance scan did not terminate");
}

inline bool exact_submodule_of(const ExactModule& a, const ExactModule& b) {
    for (const auto& c : a.cols)
        if (!exact_member(c, b)) return false;
    return true;
}

inline bool exact_equal(const ExactModule& a, const ExactModule& b) {
    return exact_submodule_of(a, b) && exact_submodule_of(b, a);
}

inline ZCol lift(const Vector& v) {
    ZCol c;
    c.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i) c.emplace_back(v[i]);
    return c;
}

inline std::vector<ZCol> lift_all(const std::vector<Vector>& vs) {
    std::vector<ZCol> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(lift(v));
    return out;
}

}  // namespace padlab
