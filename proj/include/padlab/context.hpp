#pragma once

#include <cstdint>
#include <string>

#include "padlab/errors.hpp"

namespace padlab {

/// Ambient parameters of the truncated module (Z/p^N)^n.
///
/// Every vector and submodule carries a copy; operations on values from
/// different contexts throw context_mismatch. Immutable after construction.
class Context {
public:
    Context(int64_t p, int N, int n) : p_(p), N_(N), n_(n) {
        if (p < 2 || !is_prime(p)) throw non_prime("p = " + std::to_string(p) + " is not prime");
        if (N < 1) throw invalid_context("precision N must be >= 1");
        if (n < 1) throw invalid_context("dimension n must be >= 1");
        modulus_ = 1;
        for (int i = 0; i < N; ++i) {
            if (modulus_ > (int64_t{1} << 31) / p)
                throw invalid_context("p^N exceeds the supported scalar range (2^31)");
            modulus_ *= p;
        }
    }

    int64_t p() const { return p_; }
    int precision() const { return N_; }
    int dim() const { return n_; }
    int64_t modulus() const { return modulus_; }  // p^N

    /// p^k for 0 <= k <= N.
    int64_t pow(int k) const {
        int64_t r = 1;
        for (int i = 0; i < k; ++i) r *= p_;
        return r;
    }

    /// Canonical residue in [0, p^N) of an arbitrary integer.
    int64_t reduce(int64_t x) const {
        int64_t r = x % modulus_;
        return r < 0 ? r + modulus_ : r;
    }

    /// Valuation of a residue: max{k <= N : p^k | x}, with v(0) = N.
    int valuation(int64_t residue) const {
        if (residue % modulus_ == 0) return N_;
        int v = 0;
        int64_t x = reduce(residue);
        while (x % p_ == 0) {
            x /= p_;
            ++v;
        }
        return v;
    }

    friend bool operator==(const Context& a, const Context& b) {
        return a.p_ == b.p_ && a.N_ == b.N_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

    std::string str() const {
        return "(p=" + std::to_string(p_) + ", N=" + std::to_string(N_) + ", n=" + std::to_string(n_) + ")";
    }

private:
    static bool is_prime(int64_t p) {
        if (p < 2) return false;
        for (int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    int64_t p_;
    int N_;
    int n_;
    int64_t modulus_;
};

inline void require_same(const Context& a, const Context& b) {
    if (a != b) throw context_mismatch("context " + a.str() + " vs " + b.str());
}

/// Residue scalar in Z/p^N.
class Scalar {
public:
    Scalar(Context ctx, int64_t value) : ctx_(std::move(ctx)), r_(ctx_.reduce(value)) {}

    const Context& context() const { return ctx_; }
    int64_t residue() const { return r_; }
    int valuation() const { return ctx_.valuation(r_); }
    bool is_unit() const { return r_ % ctx_.p() != 0; }
    bool is_zero() const { return r_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same(a.ctx_, b.ctx_);
        return Scalar(a.ctx_, a.r_ + b.r_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(a.ctx_, -a.r_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same(a.ctx_, b.ctx_);
        return Scalar(a.ctx_, a.r_ * b.r_);
    }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ctx_ == b.ctx_ && a.r_ == b.r_;
    }

private:
    Context ctx_;
    int64_t r_;
};

/// Modular inverse of a unit residue mod m (extended gcd).
inline int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw non_unit("no inverse mod " + std::to_string(m));
    return t0 < 0 ? t0 + m : t0;
}

inline Scalar unit_inverse(const Scalar& x) {
    if (!x.is_unit()) throw non_unit("unit_inverse of residue " + std::to_string(x.residue()));
    return Scalar(x.context(), mod_inverse(x.residue(), x.context().modulus()));
}

}  // namespace padlab
