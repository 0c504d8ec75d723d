#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padlab/indep.hpp"
#include "padlab/oracle.hpp"
#include "padlab/pregeometry.hpp"
#include "padlab/rng.hpp"

namespace padlab {

struct CtxSpec {
    int64_t p;
    int N;
    int n;
    Context make() const { return Context(p, N, n); }
    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(N) + "," + std::to_string(n) + ")";
    }
};

/// Configuration of the property lab. The chain modulus n(eps) and the
/// summability modulus m(eps,delta) are the identity in this isometric
/// ultrametric class; Cauchy-sequence moduli are configuration only and play
/// no computational role at finite precision.
struct PropertyConfig {
    uint64_t seed = 0x9ad1abULL;
    int instances = 128;  // per context
    int resamples = 25;   // K, representative-independence
    std::vector<CtxSpec> enum_contexts = {{2, 2, 2}, {2, 3, 2}, {2, 2, 3}, {3, 2, 2}, {3, 3, 2}};
    std::vector<CtxSpec> sampled_contexts = {{2, 2, 3}, {3, 2, 3}, {2, 3, 3}, {2, 2, 4}, {3, 2, 4}};
    std::vector<CtxSpec> geometry_contexts = {{2, 2, 3}, {2, 2, 4}, {3, 2, 3}, {3, 2, 4}, {2, 3, 3}};

    Distance chain_modulus(const Distance& eps) const { return eps; }
    Distance summability_modulus(const Distance& eps, const Distance&) const { return eps; }
    Distance cauchy_modulus(int i) const { return Distance::pow_neg(i); }  // configuration only
};

struct SuiteFailure {
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    long instances = 0;
    std::vector<SuiteFailure> failures;
    long wall_ms = 0;

    bool passed() const { return failures.empty(); }
    std::string line() const {
        return suite + " instances=" + std::to_string(instances) +
               " failures=" + std::to_string(failures.size()) + " ms=" + std::to_string(wall_ms);
    }
};

namespace suites_detail {

struct Check {
    SuiteReport* r;
    void count() { ++r->instances; }
    void expect(bool ok, const std::function<std::string()>& detail) {
        if (!ok && r->failures.size() < 16) r->failures.push_back({detail()});
        if (!ok && r->failures.size() >= 16) r->failures.back().detail = "(more failures suppressed)";
    }
};

inline Vector rand_vec(Rng& rng, const Context& ctx) {
    std::vector<int64_t> c(ctx.dim());
    for (auto& x : c) x = rng.below(ctx.modulus());
    return Vector(ctx, c);
}

inline std::vector<Vector> rand_gens(Rng& rng, const Context& ctx, int max_count) {
    const int cnt = static_cast<int>(rng.below(max_count + 1));
    std::vector<Vector> out;
    out.reserve(cnt);
    for (int i = 0; i < cnt; ++i) out.push_back(rand_vec(rng, ctx));
    return out;
}

/// Every representable threshold: 0 (below precision) and p^-N .. p^0.
inline std::vector<Distance> eps_lattice(const Context& ctx) {
    std::vector<Distance> out{Distance::below()};
    for (int k = ctx.precision(); k >= 0; --k) out.push_back(Distance::pow_neg(k));
    return out;
}

inline uint64_t ctx_seed(const PropertyConfig& cfg, const std::string& suite, size_t ci) {
    return mix(mix(cfg.seed, suite), ci);
}

inline std::string inst(const Context& ctx, std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string s = "ctx=" + ctx.str();
    for (const auto& [k, v] : kv) s += std::string(" ") + k + "=" + v;
    return s;
}

inline std::string set_str(const std::vector<Vector>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += "; ";
        s += vs[i].str();
    }
    return s + "}";
}

// geometry helpers ----------------------------------------------------------

inline std::optional<GeometrySpace> rand_space(Rng& rng, const Context& ctx, int max_base) {
    for (int tries = 0; tries < 128; ++tries) {
        auto A = rand_gens(rng, ctx, max_base);
        Vector x = rand_vec(rng, ctx);
        if (galois_type(x, A).radius.is_below()) continue;
        return GeometrySpace(ctx, A, x);
    }
    return std::nullopt;
}

/// Unit directions extending the base reductions to a p-independent system.
inline std::optional<std::vector<Vector>> fresh_directions(const GeometrySpace& g, Rng& rng, int count) {
    const Context& ctx = g.context();
    std::vector<Vector> sys = g.type().base.generators();
    std::vector<Vector> picked;
    for (int i = 0; i < count; ++i) {
        bool ok = false;
        for (int tries = 0; tries < 64 && !ok; ++tries) {
            std::vector<int64_t> w(ctx.dim());
            for (auto& x : w) x = rng.below(ctx.p());
            Vector u(ctx, w);
            sys.push_back(u);
            if (p_independent(ctx, sys)) {
                picked.push_back(u);
                ok = true;
            } else {
                sys.pop_back();
            }
        }
        if (!ok) return std::nullopt;
    }
    return picked;
}

/// Realization with prescribed direction class: ball element + p^k (u + p w).
inline Vector realization(const GeometrySpace& g, const Vector& dir, Rng& rng) {
    const Context& ctx = g.context();
    const int k = g.type().radius.exponent();
    Vector beta = g.type().anchor;
    for (const auto& c : g.type().base.generators())
        beta = beta + (ctx.pow(k) * rng.below(ctx.modulus())) * c;
    std::vector<int64_t> w(ctx.dim());
    for (auto& x : w) x = rng.below(ctx.modulus());
    Vector x = beta + ctx.pow(k) * (dir + ctx.p() * Vector(ctx, w));
    return x;
}

/// Another representative of the class of x: unit-scale the direction and add
/// p-noise, then rebuild a realization.
inline Vector same_class_element(const GeometrySpace& g, const Vector& x, Rng& rng) {
    const Context& ctx = g.context();
    const int64_t c = 1 + rng.below(ctx.p() - 1);
    Vector dir = c * direction_mod_p(x, g);
    return realization(g, dir, rng);
}

inline Vector combo_direction(const Context& ctx, const std::vector<Vector>& dirs,
                              const std::vector<int64_t>& coeff) {
    Vector d = Vector::zero(ctx);
    for (size_t i = 0; i < dirs.size(); ++i) d = d + coeff[i] * dirs[i];
    std::vector<int64_t> r(d.coords());
    for (auto& v : r) v %= ctx.p();
    return Vector(ctx, r);
}

}  // namespace suites_detail

namespace suites_impl {

using suites_detail::Check;
using suites_detail::combo_direction;
using suites_detail::ctx_seed;
using suites_detail::eps_lattice;
using suites_detail::fresh_directions;
using suites_detail::inst;
using suites_detail::rand_gens;
using suites_detail::rand_space;
using suites_detail::rand_vec;
using suites_detail::realization;
using suites_detail::same_class_element;
using suites_detail::set_str;

// --- padic_core ------------------------------------------------------------

inline void ultrametric(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            Vector a = rand_vec(rng, ctx), b = rand_vec(rng, ctx), c = rand_vec(rng, ctx);
            ck.count();
            ck.expect(distance(a, c) <= max(distance(a, b), distance(b, c)), [&] {
                return inst(ctx, {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}});
            });
        }
    }
}

inline void translation_invariance(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            Vector a = rand_vec(rng, ctx), b = rand_vec(rng, ctx), t = rand_vec(rng, ctx);
            ck.count();
            ck.expect(distance(a + t, b + t) == distance(a, b), [&] {
                return inst(ctx, {{"a", a.str()}, {"b", b.str()}, {"t", t.str()}});
            });
        }
    }
}

inline void scaling(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            Vector a = rand_vec(rng, ctx), b = rand_vec(rng, ctx);
            Distance d = distance(a, b);
            Distance expected = d.is_below() || d.exponent() + 1 >= ctx.precision()
                                    ? Distance::below()
                                    : Distance::pow_neg(d.exponent() + 1);
            ck.count();
            ck.expect(distance(ctx.p() * a, ctx.p() * b) == expected,
                      [&] { return inst(ctx, {{"a", a.str()}, {"b", b.str()}}); });
        }
    }
}

inline void valuation_identities(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            Scalar x(ctx, rng.below(ctx.modulus())), y(ctx, rng.below(ctx.modulus()));
            ck.count();
            const int expect_mul = std::min(ctx.precision(), x.valuation() + y.valuation());
            bool ok = (x * y).valuation() == expect_mul &&
                      (x + y).valuation() >= std::min(x.valuation(), y.valuation());
            if (x.is_unit()) ok = ok && (unit_inverse(x) * x).residue() == 1;
            ck.expect(ok, [&] {
                return inst(ctx, {{"x", std::to_string(x.residue())}, {"y", std::to_string(y.residue())}});
            });
        }
    }
}

// --- lattice -----------------------------------------------------------------

inline void saturate_idempotent(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto gens = rand_gens(rng, ctx, ctx.dim() + 1);
            Submodule s = span(ctx, gens);
            Submodule t = s.saturate();
            Submodule u = t.saturate();
            ck.count();
            ck.expect(t == u && t.saturated() && t.rank() == s.rank(),
                      [&] { return inst(ctx, {{"gens", set_str(gens)}}); });
        }
    }
}

inline void span_in_saturation(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto gens = rand_gens(rng, ctx, ctx.dim() + 1);
            Submodule s = span(ctx, gens);
            Submodule t = s.saturate();
            bool ok = true;
            for (const auto& g : gens) ok = ok && s.member(g, ctx.precision()) && t.member(g, ctx.precision());
            ck.count();
            ck.expect(ok, [&] { return inst(ctx, {{"gens", set_str(gens)}}); });
        }
    }
}

inline void purity_exhaustive(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const auto all = enumerate_module(ctx);
        for (int i = 0; i < 4; ++i) {
            auto gens = rand_gens(rng, ctx, ctx.dim());
            Submodule t = pure_closure(ctx, gens);
            for (const auto& x : all) {
                ck.count();
                const bool px_in = t.member(ctx.p() * x, ctx.precision());
                const bool x_near = ctx.precision() == 1 || t.member(x, ctx.precision() - 1);
                ck.expect(!px_in || x_near,
                          [&] { return inst(ctx, {{"gens", set_str(gens)}, {"x", x.str()}}); });
            }
        }
    }
}

inline void dist_oracle(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto gens = rand_gens(rng, ctx, 3);
            Vector x = rand_vec(rng, ctx);
            ck.count();
            if (i % 2 == 0) {
                Submodule s = span(ctx, gens);
                ck.expect(s.dist_to(x) == oracle_dist(x, gens),
                          [&] { return inst(ctx, {{"x", x.str()}, {"gens", set_str(gens)}}); });
            } else {
                Submodule t = pure_closure(ctx, gens);
                ck.expect(t.dist_to(x) == oracle_dist(x, t.generators()), [&] {
                    return inst(ctx, {{"x", x.str()}, {"satgens", set_str(t.generators())}});
                });
            }
        }
    }
}

inline void dist_monotonicity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto g1 = rand_gens(rng, ctx, ctx.dim());
            auto extra = rand_gens(rng, ctx, 2);
            auto g2 = g1;
            g2.insert(g2.end(), extra.begin(), extra.end());
            Vector x = rand_vec(rng, ctx);
            Submodule s1 = span(ctx, g1), s2 = span(ctx, g2);
            Submodule t1 = s1.saturate(), t2 = s2.saturate();
            bool incl = true;
            for (const auto& g : s1.generators()) incl = incl && s2.member(g, ctx.precision());
            for (const auto& g : t1.generators()) incl = incl && t2.member(g, ctx.precision());
            ck.count();
            ck.expect(incl && s2.dist_to(x) <= s1.dist_to(x) && t2.dist_to(x) <= t1.dist_to(x), [&] {
                return inst(ctx, {{"x", x.str()}, {"g1", set_str(g1)}, {"g2", set_str(g2)}});
            });
        }
    }
}

inline void closest_properties(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto gens = rand_gens(rng, ctx, ctx.dim());
            Submodule s = i % 2 ? span(ctx, gens) : pure_closure(ctx, gens);
            Vector x = rand_vec(rng, ctx);
            Vector c = s.closest(x);
            ck.count();
            const bool in_s = s.dist_to(x).is_below() ? true : s.member(c, ctx.precision());
            ck.expect(in_s && distance(x, c) == s.dist_to(x),
                      [&] { return inst(ctx, {{"x", x.str()}, {"gens", set_str(gens)}}); });
        }
    }
}

inline void witness_isometry(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            // image tuple under a random invertible map: a witness must exist
            const int m = 1 + static_cast<int>(rng.below(2));
            std::vector<Vector> a_tuple;
            for (int t = 0; t < m; ++t) a_tuple.push_back(rand_vec(rng, ctx));
            std::vector<std::vector<int64_t>> tmat;
            for (int tries = 0; tries < 64; ++tries) {
                tmat.assign(ctx.dim(), std::vector<int64_t>(ctx.dim()));
                for (auto& row : tmat)
                    for (auto& v : row) v = rng.below(ctx.modulus());
                std::vector<Vector> rows;
                for (const auto& row : tmat) rows.emplace_back(ctx, row);
                if (p_independent(ctx, rows)) break;
                tmat.clear();
            }
            if (tmat.empty()) continue;
            auto apply_t = [&](const Vector& v) {
                std::vector<int64_t> y(ctx.dim(), 0);
                for (int row = 0; row < ctx.dim(); ++row)
                    for (int col = 0; col < ctx.dim(); ++col)
                        y[row] = ctx.reduce(y[row] + tmat[row][col] * v[col]);
                return Vector(ctx, y);
            };
            std::vector<Vector> b_tuple;
            for (const auto& v : a_tuple) b_tuple.push_back(apply_t(v));
            auto w = witness_map(ctx, a_tuple, b_tuple);
            ck.count();
            if (!w) {
                ck.expect(false, [&] {
                    return inst(ctx, {{"a", set_str(a_tuple)}, {"b", set_str(b_tuple)}, {"miss", "witness"}});
                });
                continue;
            }
            bool ok = true;
            for (int t = 0; t < m; ++t) ok = ok && w->apply(a_tuple[t]) == b_tuple[t];
            const auto dom = w->domain.generators();
            for (int s = 0; s < 4 && !dom.empty(); ++s) {
                Vector u = Vector::zero(ctx), v = Vector::zero(ctx);
                for (const auto& gcol : dom) {
                    u = u + rng.below(ctx.modulus()) * gcol;
                    v = v + rng.below(ctx.modulus()) * gcol;
                }
                ok = ok && w->apply(u + v) == w->apply(u) + w->apply(v);
                ok = ok && distance(w->apply(u), w->apply(v)) == distance(u, v);
            }
            ck.expect(ok, [&] { return inst(ctx, {{"a", set_str(a_tuple)}, {"b", set_str(b_tuple)}}); });

            // norm mismatch never has a witness
            Vector a1 = rand_vec(rng, ctx);
            if (!norm(a1).is_below()) {
                ck.count();
                ck.expect(!witness_map(ctx, {a1}, {ctx.p() * a1}).has_value(),
                          [&] { return inst(ctx, {{"a1", a1.str()}}); });
            }
        }
    }
}

// --- indep -------------------------------------------------------------------

inline void same_type_equivalence(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim() - 1);
            Submodule base = pure_closure(ctx, A);
            Vector x = rand_vec(rng, ctx), y = rand_vec(rng, ctx), z = rand_vec(rng, ctx);
            auto qx = galois_type(x, base), qy = galois_type(y, base), qz = galois_type(z, base);
            ck.count();
            bool ok = same_type(qx, qx) && same_type(qx, qy) == same_type(qy, qx);
            if (same_type(qx, qy) && same_type(qy, qz)) ok = ok && same_type(qx, qz);
            ck.expect(ok, [&] {
                return inst(ctx, {{"A", set_str(A)}, {"x", x.str()}, {"y", y.str()}, {"z", z.str()}});
            });
        }
    }
}

inline void same_type_witness_crosscheck(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    const std::vector<CtxSpec> specs = {{2, 2, 2}, {2, 2, 3}};
    for (size_t ci = 0; ci < specs.size(); ++ci) {
        Context ctx = specs[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const auto all = enumerate_module(ctx);
        for (int as = 0; as < 6; ++as) {
            auto A = rand_gens(rng, ctx, ctx.dim());
            Submodule base = pure_closure(ctx, A);
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i; j < all.size(); ++j) {
                    ck.count();
                    const bool st = same_type(galois_type(all[i], base), galois_type(all[j], base));
                    const bool wt = witness_map_over(ctx, A, {all[i]}, {all[j]}).has_value();
                    ck.expect(st == wt, [&] {
                        return inst(ctx, {{"A", set_str(A)},
                                          {"a", all[i].str()},
                                          {"b", all[j].str()},
                                          {"same_type", std::to_string(st)}});
                    });
                }
        }
    }
}

inline void indep_rank_identity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, 2);
            auto B = rand_gens(rng, ctx, 2);
            Vector a = rand_vec(rng, ctx);
            auto AB = A;
            AB.insert(AB.end(), B.begin(), B.end());
            ck.count();
            const bool ind = independent(a, A, B);
            bool ok = !ind || rank(a, AB) == rank(a, A);
            ok = ok && independent_tuple({a}, A, B) == ind;
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"B", set_str(B)}});
            });
        }
    }
}

inline void prop66_symmetry(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    auto ctxs = cfg.enum_contexts;
    ctxs.insert(ctxs.end(), cfg.sampled_contexts.begin(), cfg.sampled_contexts.end());
    for (size_t ci = 0; ci < ctxs.size(); ++ci) {
        Context ctx = ctxs[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim());
            Vector a = rand_vec(rng, ctx), b = rand_vec(rng, ctx);
            ck.count();
            ck.expect(independent(a, A, {b}) == independent(b, A, {a}), [&] {
                return inst(ctx, {{"a", a.str()}, {"b", b.str()}, {"A", set_str(A)}});
            });
        }
    }
}

inline void eps_coherence(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const int room = std::max(0, ctx.dim() - 2);
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, room / 2);
            auto B = rand_gens(rng, ctx, room - static_cast<int>(A.size()));
            Vector a = rand_vec(rng, ctx);
            ck.count();
            bool ok = true;
            const bool ind = independent(a, A, B);
            const Distance rk = rank(a, A);
            for (const auto& eps : eps_lattice(ctx))
                ok = ok && eps_independent(a, A, B, eps) == (ind || eps >= rk);
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"B", set_str(B)}});
            });
        }
    }
}

inline void eps_monotonicity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const int room = std::max(0, ctx.dim() - 2);
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, room >= 1 ? 1 : 0);
            auto C = A;
            auto c_extra = rand_gens(rng, ctx, room >= 2 ? 1 : 0);
            C.insert(C.end(), c_extra.begin(), c_extra.end());
            auto D = C;
            auto d_extra = rand_gens(rng, ctx, std::max(0, room - static_cast<int>(C.size())));
            D.insert(D.end(), d_extra.begin(), d_extra.end());
            Vector a = rand_vec(rng, ctx);
            ck.count();
            bool ok = true;
            const auto lattice = eps_lattice(ctx);
            for (const auto& eps : lattice) {
                if (eps_independent(a, A, D, eps)) ok = ok && eps_independent(a, A, C, eps);
                for (const auto& delta : lattice)
                    if (delta < eps && eps_independent(a, A, D, delta))
                        ok = ok && eps_independent(a, A, D, eps);
            }
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"D", set_str(D)}});
            });
        }
    }
}

inline void eps_transitivity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const int room = std::max(0, ctx.dim() - 2);
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, room >= 1 ? 1 : 0);
            auto B = A;
            auto b_extra = rand_gens(rng, ctx, room >= 2 ? 1 : 0);
            B.insert(B.end(), b_extra.begin(), b_extra.end());
            auto C = B;
            auto c_extra = rand_gens(rng, ctx, std::max(0, room - static_cast<int>(B.size())));
            C.insert(C.end(), c_extra.begin(), c_extra.end());
            Vector a = rand_vec(rng, ctx);
            ck.count();
            bool ok = true;
            for (const auto& eps : eps_lattice(ctx))
                if (eps_independent(a, A, B, eps) && eps_independent(a, B, C, eps))
                    ok = ok && eps_independent(a, A, C, eps);
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"C", set_str(C)}});
            });
        }
    }
}

inline void local_character(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim() + 1);
            Vector a = rand_vec(rng, ctx);
            // certified spanning subset of A: greedily keep generators that
            // enlarge the exact span
            std::vector<Vector> b0;
            for (const auto& g : A) {
                ExactModule cur = exact_span(mpz_class(ctx.p()), ctx.dim(), lift_all(b0));
                if (!exact_member(lift(g), cur)) b0.push_back(g);
            }
            ck.count();
            bool ok = true;
            for (const auto& eps : eps_lattice(ctx)) ok = ok && eps_independent(a, b0, A, eps);
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"B0", set_str(b0)}});
            });
        }
    }
}

inline void rank_invariance(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        int produced = 0;
        for (int tries = 0; tries < cfg.instances * 8 && produced < cfg.instances; ++tries) {
            auto A = rand_gens(rng, ctx, 2);
            auto C = rand_gens(rng, ctx, 2);
            Vector a = rand_vec(rng, ctx);
            if (!independent(a, A, C)) continue;
            auto AC = A;
            AC.insert(AC.end(), C.begin(), C.end());
            ++produced;
            ck.count();
            ck.expect(rank(a, AC) == rank(a, A), [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"C", set_str(C)}});
            });
        }
    }
}

inline void almost_summability(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim() - 1);
            Submodule base = pure_closure(ctx, A);
            auto q1 = galois_type(rand_vec(rng, ctx), base);
            auto q2 = galois_type(rand_vec(rng, ctx), base);
            auto q3 = galois_type(rand_vec(rng, ctx), base);
            const Distance d12 = type_distance(q1, q2), d23 = type_distance(q2, q3),
                           d13 = type_distance(q1, q3);
            ck.count();
            bool ok = true;
            const auto lattice = eps_lattice(ctx);
            for (const auto& eps : lattice)
                for (const auto& delta : lattice) {
                    if (!(delta < eps)) continue;
                    if (d12 <= delta && d23 <= cfg.summability_modulus(eps, delta))
                        ok = ok && d13 <= eps;
                }
            ck.expect(ok, [&] { return inst(ctx, {{"A", set_str(A)}}); });
        }
    }
}

inline void moduli_chain(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim() - 1);
            Submodule base = pure_closure(ctx, A);
            std::vector<TypeInvariant> q;
            for (int t = 0; t < 4; ++t) q.push_back(galois_type(rand_vec(rng, ctx), base));
            ck.count();
            bool ok = true;
            for (const auto& eps : eps_lattice(ctx)) {
                bool chain = true;
                for (int t = 0; t + 1 < 4; ++t)
                    chain = chain && type_distance(q[t], q[t + 1]) <= cfg.chain_modulus(eps);
                if (chain) ok = ok && type_distance(q[0], q[3]) <= eps;
            }
            ck.expect(ok, [&] { return inst(ctx, {{"A", set_str(A)}}); });
        }
    }
}

inline void type_distance_oracle(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.enum_contexts.size(); ++ci) {
        Context ctx = cfg.enum_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim());
            Submodule base = pure_closure(ctx, A);
            Vector x = rand_vec(rng, ctx), y = rand_vec(rng, ctx);
            auto q1 = galois_type(x, base), q2 = galois_type(y, base);
            ck.count();
            ck.expect(type_distance(q1, q2) == oracle_type_distance(q1, q2), [&] {
                return inst(ctx, {{"A", set_str(A)}, {"x", x.str()}, {"y", y.str()}});
            });
        }
    }
}

inline void anchor_insensitivity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, ctx.dim() - 1);
            Submodule base = pure_closure(ctx, A);
            Vector x = rand_vec(rng, ctx), y = rand_vec(rng, ctx);
            auto q1 = galois_type(x, base), q2 = galois_type(y, base);
            if (q1.radius.is_below()) continue;
            // any ball element is as good an anchor
            Vector alt = q1.anchor;
            for (const auto& c : base.generators())
                alt = alt + (ctx.pow(q1.radius.exponent()) * rng.below(ctx.modulus())) * c;
            TypeInvariant q1alt{base, q1.radius, alt};
            ck.count();
            ck.expect(same_type(q1, q1alt) && type_distance(q1alt, q2) == type_distance(q1, q2), [&] {
                return inst(ctx, {{"A", set_str(A)}, {"x", x.str()}, {"alt", alt.str()}});
            });
        }
    }
}

inline void eps_finite_extension(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        const int room = std::max(0, ctx.dim() - 2);
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, room >= 1 ? 1 : 0);
            auto B = rand_gens(rng, ctx, room >= 2 ? 1 : 0);
            auto C = rand_gens(rng, ctx, 1);
            Vector a = rand_vec(rng, ctx);
            auto AB = A;
            AB.insert(AB.end(), B.begin(), B.end());
            if (!independent(a, AB, C)) continue;
            auto BC = B;
            BC.insert(BC.end(), C.begin(), C.end());
            ck.count();
            bool ok = true;
            for (const auto& eps : eps_lattice(ctx))
                if (eps_independent(a, A, B, eps)) ok = ok && eps_independent(a, A, BC, eps);
            ck.expect(ok, [&] {
                return inst(ctx, {{"a", a.str()}, {"A", set_str(A)}, {"B", set_str(B)}, {"C", set_str(C)}});
            });
        }
    }
}

inline void dp_base_stability(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.sampled_contexts.size(); ++ci) {
        Context ctx = cfg.sampled_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto A = rand_gens(rng, ctx, 1);
            auto C = rand_gens(rng, ctx, 1);
            Vector x = rand_vec(rng, ctx), y = rand_vec(rng, ctx);
            if (!independent_tuple({x, y}, A, C)) continue;
            auto AC = A;
            AC.insert(AC.end(), C.begin(), C.end());
            Submodule base_a = pure_closure(ctx, A), base_ac = pure_closure(ctx, AC);
            ck.count();
            const Distance over_a = type_distance(galois_type(x, base_a), galois_type(y, base_a));
            const Distance over_ac = type_distance(galois_type(x, base_ac), galois_type(y, base_ac));
            ck.expect(over_a == over_ac, [&] {
                return inst(ctx, {{"A", set_str(A)}, {"C", set_str(C)}, {"x", x.str()}, {"y", y.str()}});
            });
        }
    }
}

// --- pregeometry ---------------------------------------------------------------

inline void exchange(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.geometry_contexts.size(); ++ci) {
        Context ctx = cfg.geometry_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto g = rand_space(rng, ctx, std::max(0, ctx.dim() - 3));
            if (!g) continue;
            auto dirs = fresh_directions(*g, rng, 2);
            if (!dirs) continue;
            Vector b = realization(*g, (*dirs)[0], rng);
            Vector c = realization(*g, (*dirs)[1], rng);
            const int64_t beta = rng.below(ctx.p());
            const int64_t gamma = 1 + rng.below(ctx.p() - 1);
            Vector a = realization(*g, combo_direction(ctx, *dirs, {beta, gamma}), rng);
            GeometryClass ca{a}, cb{b}, cc{c};
            ck.count();
            const bool premise = closure_member(ca, {cb, cc}, *g) && !closure_member(ca, {cb}, *g);
            ck.expect(premise && closure_member(cc, {cb, ca}, *g), [&] {
                return inst(ctx, {{"A", set_str(g->base())},
                                  {"a", a.str()},
                                  {"b", b.str()},
                                  {"c", c.str()},
                                  {"premise", std::to_string(premise)}});
            });
            // random conditional variant
            Vector x = g->sample(rng.next(), 0), y = g->sample(rng.next(), 1), z = g->sample(rng.next(), 2);
            GeometryClass cx{x}, cy{y}, cz{z};
            if (closure_member(cx, {cy, cz}, *g) && !closure_member(cx, {cy}, *g)) {
                ck.count();
                ck.expect(closure_member(cz, {cy, cx}, *g), [&] {
                    return inst(ctx, {{"A", set_str(g->base())},
                                      {"x", x.str()},
                                      {"y", y.str()},
                                      {"z", z.str()}});
                });
            }
        }
    }
}

inline void quotient_idempotence(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.geometry_contexts.size(); ++ci) {
        Context ctx = cfg.geometry_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto g = rand_space(rng, ctx, std::max(0, ctx.dim() - 3));
            if (!g) continue;
            auto dirs = fresh_directions(*g, rng, 2);
            if (!dirs) continue;
            std::vector<GeometryClass> bs{GeometryClass{realization(*g, (*dirs)[0], rng)},
                                          GeometryClass{realization(*g, (*dirs)[1], rng)}};
            auto nonzero_combo = [&] {
                while (true) {
                    const int64_t c0 = rng.below(ctx.p()), c1 = rng.below(ctx.p());
                    if (c0 || c1) return combo_direction(ctx, *dirs, {c0, c1});
                }
            };
            Vector c = realization(*g, nonzero_combo(), rng);
            Vector a = realization(*g, nonzero_combo(), rng);
            GeometryClass cc{c}, ca{a};
            ck.count();
            bool ok = closure_member(cc, bs, *g);
            auto bs_c = bs;
            bs_c.push_back(cc);
            if (closure_member(ca, bs_c, *g)) ok = ok && closure_member(ca, bs, *g);
            ck.expect(ok, [&] {
                return inst(ctx, {{"A", set_str(g->base())}, {"a", a.str()}, {"c", c.str()}});
            });
            // random conditional variant
            Vector u = g->sample(rng.next(), 3), v = g->sample(rng.next(), 4);
            GeometryClass cu{u}, cv{v};
            if (closure_member(cu, bs, *g)) {
                auto bs_u = bs;
                bs_u.push_back(cu);
                if (closure_member(cv, bs_u, *g)) {
                    ck.count();
                    ck.expect(closure_member(cv, bs, *g), [&] {
                        return inst(ctx, {{"A", set_str(g->base())}, {"u", u.str()}, {"v", v.str()}});
                    });
                }
            }
        }
    }
}

inline void forks_equiv_transitivity(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.geometry_contexts.size(); ++ci) {
        Context ctx = cfg.geometry_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto g = rand_space(rng, ctx, std::max(0, ctx.dim() - 2));
            if (!g) continue;
            Vector x1 = g->sample(rng.next(), 0);
            Vector x2 = same_class_element(*g, x1, rng);
            Vector x3 = same_class_element(*g, x2, rng);
            ck.count();
            ck.expect(forks_equiv(x1, x2, *g) && forks_equiv(x2, x3, *g) && forks_equiv(x1, x3, *g),
                      [&] {
                          return inst(ctx, {{"A", set_str(g->base())},
                                            {"x1", x1.str()},
                                            {"x2", x2.str()},
                                            {"x3", x3.str()}});
                      });
            Vector y1 = g->sample(rng.next(), 1), y2 = g->sample(rng.next(), 2),
                   y3 = g->sample(rng.next(), 3);
            if (forks_equiv(y1, y2, *g) && forks_equiv(y2, y3, *g)) {
                ck.count();
                ck.expect(forks_equiv(y1, y3, *g), [&] {
                    return inst(ctx, {{"A", set_str(g->base())},
                                      {"y1", y1.str()},
                                      {"y2", y2.str()},
                                      {"y3", y3.str()}});
                });
            }
        }
    }
}

inline void representative_independence(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.geometry_contexts.size(); ++ci) {
        Context ctx = cfg.geometry_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances / 2 + 1; ++i) {
            auto g = rand_space(rng, ctx, std::max(0, ctx.dim() - 3));
            if (!g) continue;
            const int m = 1 + static_cast<int>(rng.below(2));
            auto dirs = fresh_directions(*g, rng, m);
            if (!dirs) continue;
            std::vector<GeometryClass> bs;
            for (const auto& d : *dirs) bs.push_back(GeometryClass{realization(*g, d, rng)});
            Vector a = g->sample(rng.next(), 17);
            const bool v0 = closure_member(GeometryClass{a}, bs, *g);
            ck.count();
            bool ok = true;
            for (int k = 0; k < cfg.resamples; ++k) {
                std::vector<GeometryClass> bs2;
                for (const auto& b : bs)
                    bs2.push_back(GeometryClass{same_class_element(*g, b.representative, rng)});
                Vector a2 = same_class_element(*g, a, rng);
                ok = ok && closure_member(GeometryClass{a2}, bs2, *g) == v0;
            }
            ck.expect(ok, [&] { return inst(ctx, {{"A", set_str(g->base())}, {"a", a.str()}}); });
        }
    }
}

inline void naive_closure_counterexample(const PropertyConfig&, SuiteReport& r) {
    Check ck{&r};
    for (int64_t p : {2, 3}) {
        for (int N : {2, 3}) {
            Context ctx(p, N, 3);
            Vector b0 = Vector::unit(ctx, 0), b1 = Vector::unit(ctx, 1), b2 = Vector::unit(ctx, 2);
            Vector belt = b1 - p * b2;
            Vector c = p * b0 + b1;
            Vector a = b0 + b2;
            GeometrySpace g(ctx, {}, b0);
            ck.count();
            const bool naive_c = naive_closure_member(c, {belt}, g);
            const bool naive_a_bc = naive_closure_member(a, {belt, c}, g);
            const bool naive_a_b = naive_closure_member(a, {belt}, g);
            GeometryClass cb{belt}, cc{c}, ca{a};
            const bool quot_c = closure_member(cc, {cb}, g);
            const bool quot_a_bc = closure_member(ca, {cb, cc}, g);
            const bool quot_a_b = closure_member(ca, {cb}, g);
            // naive closure reproduces the failure triple; the quotient
            // closure stays idempotent on the same instance
            const bool ok = naive_c && naive_a_bc && !naive_a_b && quot_c && !quot_a_bc && !quot_a_b;
            ck.expect(ok, [&] {
                return "p=" + std::to_string(p) + " N=" + std::to_string(N) + " naive=(" +
                       std::to_string(naive_c) + "," + std::to_string(naive_a_bc) + "," +
                       std::to_string(naive_a_b) + ") quot=(" + std::to_string(quot_c) + "," +
                       std::to_string(quot_a_bc) + "," + std::to_string(quot_a_b) + ")";
            });
        }
    }
}

inline void fp_line_correspondence(const PropertyConfig&, SuiteReport& r) {
    Check ck{&r};
    Context ctx(2, 2, 3);
    GeometrySpace g(ctx, {}, Vector::unit(ctx, 0));
    std::vector<Vector> units;
    for (const auto& x : enumerate_module(ctx))
        if (norm(x) == Distance::one()) units.push_back(x);
    for (size_t i = 0; i < units.size(); ++i)
        for (size_t j = i; j < units.size(); ++j) {
            ck.count();
            const bool fe = forks_equiv(units[i], units[j], g);
            const bool fl = fp_line(units[i], g) == fp_line(units[j], g);
            ck.expect(fe == fl, [&] {
                return inst(ctx, {{"b", units[i].str()}, {"b2", units[j].str()}});
            });
        }
}

inline void closure_monotone_finite(const PropertyConfig& cfg, SuiteReport& r) {
    Check ck{&r};
    for (size_t ci = 0; ci < cfg.geometry_contexts.size(); ++ci) {
        Context ctx = cfg.geometry_contexts[ci].make();
        Rng rng(ctx_seed(cfg, r.suite, ci));
        for (int i = 0; i < cfg.instances; ++i) {
            auto g = rand_space(rng, ctx, std::max(0, ctx.dim() - 2));
            if (!g) continue;
            Vector a = g->sample(rng.next(), 0);
            std::vector<GeometryClass> bs{GeometryClass{g->sample(rng.next(), 1)}};
            auto cs = bs;
            cs.push_back(GeometryClass{g->sample(rng.next(), 2)});
            GeometryClass ca{a};
            ck.count();
            bool ok = closure_member(ca, {ca}, *g);
            if (closure_member(ca, bs, *g)) ok = ok && closure_member(ca, cs, *g);
            ck.expect(ok, [&] { return inst(ctx, {{"A", set_str(g->base())}, {"a", a.str()}}); });
        }
    }
}

}  // namespace suites_impl

inline const std::map<std::string, std::function<void(const PropertyConfig&, SuiteReport&)>>&
suite_registry() {
    static const std::map<std::string, std::function<void(const PropertyConfig&, SuiteReport&)>> reg = {
        {"ultrametric", suites_impl::ultrametric},
        {"translation_invariance", suites_impl::translation_invariance},
        {"scaling", suites_impl::scaling},
        {"valuation_identities", suites_impl::valuation_identities},
        {"saturate_idempotent", suites_impl::saturate_idempotent},
        {"span_in_saturation", suites_impl::span_in_saturation},
        {"purity_exhaustive", suites_impl::purity_exhaustive},
        {"dist_oracle", suites_impl::dist_oracle},
        {"dist_monotonicity", suites_impl::dist_monotonicity},
        {"closest_properties", suites_impl::closest_properties},
        {"witness_isometry", suites_impl::witness_isometry},
        {"same_type_equivalence", suites_impl::same_type_equivalence},
        {"same_type_witness_crosscheck", suites_impl::same_type_witness_crosscheck},
        {"indep_rank_identity", suites_impl::indep_rank_identity},
        {"prop66_symmetry", suites_impl::prop66_symmetry},
        {"eps_coherence", suites_impl::eps_coherence},
        {"eps_monotonicity", suites_impl::eps_monotonicity},
        {"eps_transitivity", suites_impl::eps_transitivity},
        {"local_character", suites_impl::local_character},
        {"rank_invariance", suites_impl::rank_invariance},
        {"almost_summability", suites_impl::almost_summability},
        {"moduli_chain", suites_impl::moduli_chain},
        {"type_distance_oracle", suites_impl::type_distance_oracle},
        {"anchor_insensitivity", suites_impl::anchor_insensitivity},
        {"eps_finite_extension", suites_impl::eps_finite_extension},
        {"dp_base_stability", suites_impl::dp_base_stability},
        {"exchange", suites_impl::exchange},
        {"quotient_idempotence", suites_impl::quotient_idempotence},
        {"forks_equiv_transitivity", suites_impl::forks_equiv_transitivity},
        {"representative_independence", suites_impl::representative_independence},
        {"naive_closure_counterexample", suites_impl::naive_closure_counterexample},
        {"fp_line_correspondence", suites_impl::fp_line_correspondence},
        {"closure_monotone_finite", suites_impl::closure_monotone_finite},
    };
    return reg;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : suite_registry()) out.push_back(k);
    return out;
}

/// Runs one named suite; deterministic for a given config.
inline SuiteReport run_suite(const std::string& name, const PropertyConfig& cfg) {
    const auto& reg = suite_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw unknown_suite("no suite named '" + name + "'");
    SuiteReport report;
    report.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    it->second(cfg, report);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

inline std::vector<SuiteReport> run_all_suites(const PropertyConfig& cfg) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg));
    return out;
}

}  // namespace padlab
