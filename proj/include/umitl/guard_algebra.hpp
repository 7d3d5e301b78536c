// ============================================================================
// umitl/guard_algebra.hpp — Difference-interval sets behind guard synthesis
// ============================================================================
//
// The compilers need boolean combinations (including negation and
// disjunction) of atomic guard comparisons, but a transition carries only a
// conjunction and sibling transitions must be pairwise disjoint.  This module
// works in the space of per-clock constraints on the real quantity
// d_x = T - nu(x): a `DiffBox` maps clocks to one interval each (conjunction),
// a `DiffSet` is a disjoint union of boxes (disjunction).  Emission converts
// each box back into guard atoms, splitting at 0 where a box spans both signs
// because a single T-x / x-T atom cannot.
//
// ============================================================================

#ifndef UMITL_GUARD_ALGEBRA_HPP
#define UMITL_GUARD_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "umitl/automaton.hpp"

namespace umitl {

// One-dimensional interval over the reals with open/closed ends;
// absent endpoint = unbounded on that side.
struct DiffInterval {
    std::optional<std::int64_t> lo, hi;
    bool lo_open = false, hi_open = false;

    static DiffInterval all() { return {}; }
    bool is_all() const { return !lo && !hi; }
    bool empty() const;
    static DiffInterval at_least(std::int64_t v, bool open) { return {v, std::nullopt, open, false}; }
    static DiffInterval at_most(std::int64_t v, bool open) { return {std::nullopt, v, false, open}; }
    static DiffInterval point(std::int64_t v) { return {v, v, false, false}; }

    DiffInterval intersect(const DiffInterval& o) const;
    // Complement as up to two intervals.
    std::vector<DiffInterval> complement() const;
};

struct DiffBox {
    std::map<std::uint32_t, DiffInterval> by_clock;  // absent clock = unconstrained
    bool empty() const;
    DiffBox intersect(const DiffBox& o) const;
};

// Disjoint union of boxes.  All combinators preserve disjointness.
struct DiffSet {
    std::vector<DiffBox> boxes;

    static DiffSet none() { return {}; }
    static DiffSet all() { return DiffSet{{DiffBox{}}}; }
    static DiffSet from_atom(std::uint32_t clock, DiffInterval iv);

    bool is_false() const { return boxes.empty(); }
    DiffSet set_and(const DiffSet& o) const;
    DiffSet set_or(const DiffSet& o) const;
    DiffSet set_not() const;
};

// Convert a guard atom to its difference-interval and back.
DiffInterval atom_to_interval(const GuardAtom& a);
DiffSet guard_to_diffset(const Guard& g);

// Emit a box as one or more conjunctive guards (splitting at zero so that
// the implicit sign conditions of T-x / x-T atoms never cut anything off).
std::vector<Guard> emit_box(const DiffBox& box);
std::vector<Guard> emit_diffset(const DiffSet& s);

}  // namespace umitl

#endif
