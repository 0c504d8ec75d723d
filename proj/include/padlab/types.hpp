#pragma once

#include <utility>

#include "padlab/submodule.hpp"

namespace padlab {

/// The data that determines a Galois type over a generator set: the pure
/// closure of the base, the distance of the element to it, and one closest
/// element. Types with positive radius are "unbounded"; a below-precision
/// radius means the element sits inside the closure at this precision.
struct TypeInvariant {
    Submodule base;   // saturated
    Distance radius;
    Vector anchor;    // member of base; the element itself for bounded types
};

using TypeDistance = Distance;

inline TypeInvariant galois_type(const Vector& a, Submodule base) {
    if (!base.saturated()) throw precondition_violated("type base must be a pure closure");
    Distance radius = base.dist_to(a);
    Vector anchor = base.closest(a);
    return TypeInvariant{std::move(base), radius, std::move(anchor)};
}

inline TypeInvariant galois_type(const Vector& a, const std::vector<Vector>& base_gens) {
    return galois_type(a, pure_closure(a.context(), base_gens));
}

/// Equality of type invariants over a common base. For a positive radius the
/// closed balls of closest elements intersect iff they coincide, so a single
/// anchor comparison decides; below precision the orbit is the element
/// itself.
inline bool same_type(const TypeInvariant& q1, const TypeInvariant& q2) {
    if (!(q1.base == q2.base)) throw precondition_violated("type invariants over different bases");
    if (q1.radius != q2.radius) return false;
    if (q1.radius.is_below()) return q1.anchor == q2.anchor;
    return distance(q1.anchor, q2.anchor) <= q1.radius;
}

inline bool same_type(const Vector& a, const Vector& b, const std::vector<Vector>& base_gens) {
    require_same(a.context(), b.context());
    return same_type(galois_type(a, base_gens), galois_type(b, base_gens));
}

/// Infimum distance between the realization sets of two types over a common
/// base. Closed form, validated exactly against the enumeration oracle.
inline TypeDistance type_distance(const TypeInvariant& q1, const TypeInvariant& q2) {
    if (!(q1.base == q2.base)) throw precondition_violated("type distance needs a common base");
    if (same_type(q1, q2)) return Distance::below();
    return max(max(q1.radius, q2.radius), distance(q1.anchor, q2.anchor));
}

}  // namespace padlab
