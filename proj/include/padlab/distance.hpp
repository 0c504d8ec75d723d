#pragma once

#include <limits>
#include <string>

#include "padlab/errors.hpp"

namespace padlab {

/// Value of the ultrametric at precision N: p^(-k) for k in {0..N}, or
/// below_precision ("indistinguishable from 0 at precision N").
///
/// Total order: below_precision < p^(-k) for every k, and p^(-k) < p^(-j)
/// iff k > j. Exponents never carry the prime; two distances from different
/// contexts compare by exponent alone (callers keep contexts straight).
class Distance {
public:
    static Distance below() { return Distance(kBelow); }
    static Distance pow_neg(int k) {
        if (k < 0) throw precondition_violated("distance exponent must be >= 0");
        return Distance(k);
    }
    static Distance one() { return pow_neg(0); }

    bool is_below() const { return e_ == kBelow; }
    /// Exponent k of p^(-k); only valid when !is_below().
    int exponent() const {
        if (is_below()) throw precondition_violated("below-precision distance has no exponent");
        return e_;
    }

    friend bool operator==(const Distance& a, const Distance& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Distance& a, const Distance& b) { return a.e_ != b.e_; }
    friend bool operator<(const Distance& a, const Distance& b) { return a.key() > b.key(); }
    friend bool operator<=(const Distance& a, const Distance& b) { return a.key() >= b.key(); }
    friend bool operator>(const Distance& a, const Distance& b) { return b < a; }
    friend bool operator>=(const Distance& a, const Distance& b) { return b <= a; }

    friend Distance max(const Distance& a, const Distance& b) { return a < b ? b : a; }
    friend Distance min(const Distance& a, const Distance& b) { return a < b ? a : b; }

    /// Exact textual form: "p^-<k>" or "0".
    std::string str() const { return is_below() ? "0" : "p^-" + std::to_string(e_); }

    /// Parses "p^-<k>", "1" (= p^-0) or "0" (below precision).
    static Distance parse(const std::string& s) {
        if (s == "0") return below();
        if (s == "1") return one();
        if (s.rfind("p^-", 0) == 0) {
            const std::string tail = s.substr(3);
            if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
                return pow_neg(std::stoi(tail));
        }
        throw precondition_violated("bad distance literal '" + s + "' (want p^-<k>, 1 or 0)");
    }

private:
    explicit Distance(int e) : e_(e) {}
    // larger key = smaller distance; below-precision is the minimum
    long key() const { return e_ == kBelow ? std::numeric_limits<long>::max() : e_; }

    static constexpr int kBelow = -1;
    int e_;
};

}  // namespace padlab
