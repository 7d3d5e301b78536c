// ============================================================================
// umitl/interval.hpp — Timing intervals with integer-or-infinite endpoints
// ============================================================================

#ifndef UMITL_INTERVAL_HPP
#define UMITL_INTERVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umitl/rational.hpp"

namespace umitl {

// An interval <l,u> with independent open/closed flags on each side.
// upper == nullopt means +infinity (always open on that side).
struct Interval {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;  // nullopt = infinity
    bool lower_open = false;
    bool upper_open = false;

    Interval() = default;
    Interval(std::int64_t lo, std::optional<std::int64_t> hi, bool lo_open, bool hi_open);

    bool is_bounded() const { return upper.has_value(); }
    bool is_punctual() const { return upper && lower == *upper; }
    // Shapes used by the fragment classifier.  Lower-bound: <l,inf).
    bool is_lower_bound_shape() const { return !upper.has_value(); }
    // Upper-bound: [0,u> with closed lower endpoint at 0 (u may be infinite).
    bool is_upper_bound_shape() const { return lower == 0 && !lower_open; }
    bool is_bounded_nonpunctual() const { return is_bounded() && !is_punctual(); }
    // True when the interval is a unit piece [r,r+1), any openness combo.
    bool is_unit() const { return upper && *upper == lower + 1; }

    bool contains(const Rational& v) const;
    bool empty() const;

    // Shift by an integer; endpoints move, flags are preserved.
    Interval shifted(std::int64_t k) const;

    // Partition a bounded non-punctual interval into unit-length pieces:
    // (3,6] -> {(3,4), [4,5), [5,6]}.
    std::vector<Interval> unit_split() const;

    std::string to_string() const;
    static Interval parse(const std::string& text);

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lower == b.lower && a.upper == b.upper &&
               a.lower_open == b.lower_open && a.upper_open == b.upper_open;
    }
};

inline Interval closed(std::int64_t l, std::int64_t u) { return Interval(l, u, false, false); }
inline Interval open(std::int64_t l, std::int64_t u) { return Interval(l, u, true, true); }
inline Interval left_closed(std::int64_t l, std::int64_t u) { return Interval(l, u, false, true); }
inline Interval left_open(std::int64_t l, std::int64_t u) { return Interval(l, u, true, false); }
inline Interval lower_bound_iv(std::int64_t l, bool open_l) {
    return Interval(l, std::nullopt, open_l, true);
}

}  // namespace umitl

#endif
