#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "padlab/context.hpp"
#include "padlab/distance.hpp"

namespace padlab {

/// Element of M = (Z/p^N)^n. Coordinates are canonical residues in [0, p^N).
class Vector {
public:
    Vector(Context ctx, std::vector<int64_t> coords) : ctx_(std::move(ctx)) {
        if (static_cast<int>(coords.size()) != ctx_.dim())
            throw dimension_mismatch("vector has " + std::to_string(coords.size()) +
                                     " coordinates, context wants " + std::to_string(ctx_.dim()));
        c_.reserve(coords.size());
        for (int64_t x : coords) c_.push_back(ctx_.reduce(x));
    }

    static Vector zero(const Context& ctx) {
        return Vector(ctx, std::vector<int64_t>(ctx.dim(), 0));
    }
    static Vector unit(const Context& ctx, int i) {
        std::vector<int64_t> c(ctx.dim(), 0);
        c[i] = 1;
        return Vector(ctx, std::move(c));
    }

    const Context& context() const { return ctx_; }
    int dim() const { return static_cast<int>(c_.size()); }
    int64_t operator[](int i) const { return c_[i]; }
    const std::vector<int64_t>& coords() const { return c_; }
    Scalar at(int i) const { return Scalar(ctx_, c_[i]); }

    bool is_zero() const {
        for (int64_t x : c_)
            if (x != 0) return false;
        return true;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        require_same(a.ctx_, b.ctx_);
        std::vector<int64_t> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_.reduce(c[i] + b.c_[i]);
        return Vector(a.ctx_, std::move(c));
    }
    friend Vector operator-(const Vector& a) {
        std::vector<int64_t> c(a.c_);
        for (auto& x : c) x = a.ctx_.reduce(-x);
        return Vector(a.ctx_, std::move(c));
    }
    friend Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }
    friend Vector operator*(int64_t t, const Vector& a) {
        std::vector<int64_t> c(a.c_);
        for (auto& x : c) x = a.ctx_.reduce(a.ctx_.reduce(t) * x);
        return Vector(a.ctx_, std::move(c));
    }
    friend bool operator==(const Vector& a, const Vector& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

private:
    Context ctx_;
    std::vector<int64_t> c_;
};

/// Ultrametric on M: p^(-min_i v(a_i - b_i)); below precision iff a = b.
inline Distance distance(const Vector& a, const Vector& b) {
    require_same(a.context(), b.context());
    const Context& ctx = a.context();
    int best = ctx.precision();
    for (int i = 0; i < a.dim(); ++i) best = std::min(best, ctx.valuation(a[i] - b[i]));
    return best == ctx.precision() ? Distance::below() : Distance::pow_neg(best);
}

inline Distance norm(const Vector& a) { return distance(a, Vector::zero(a.context())); }

}  // namespace padlab
