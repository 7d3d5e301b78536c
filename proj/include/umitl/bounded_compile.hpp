// ============================================================================
// umitl/bounded_compile.hpp — Bounded fragment to po2DTA via unit intervals
// ============================================================================
//
// Truth of a bounded unit modality at a stamp inside [r,r+1) is a condition
// over the first/last occurrences of its modarg in one or two neighbouring
// unit intervals.  The closure set collects every (modarg, unit interval)
// pair the evaluation can reach from [0,1); each pair gets a first- and a
// last-occurrence clock and one scan pass that freezes both.
//
// ============================================================================

#ifndef UMITL_BOUNDED_COMPILE_HPP
#define UMITL_BOUNDED_COMPILE_HPP

#include <map>

#include "umitl/automaton.hpp"
#include "umitl/guard_algebra.hpp"
#include "umitl/normal_form.hpp"

namespace umitl {

struct ClosureItem {
    std::uint32_t modarg;  // normal-form node index
    std::int64_t unit;     // the interval [unit, unit+1), unit >= 0
    friend bool operator<(const ClosureItem& a, const ClosureItem& b) {
        return a.modarg != b.modarg ? a.modarg < b.modarg : a.unit < b.unit;
    }
    friend bool operator==(const ClosureItem& a, const ClosureItem& b) {
        return a.modarg == b.modarg && a.unit == b.unit;
    }
};

// Closure rules, applied from (node, [r,r+1)):
//   - the pair itself, plus the expansion of each immediate modal literal;
//   - F_I / P_I first split I into unit pieces;
//   - F_<l,l+1> m from [r,r+1) needs m at [r+l,r+l+1) and [r+l+1,r+l+2);
//   - P_<l,l+1> m needs m at [r-l-1,r-l) and [r-l,r-l+1).
// Units that would start below 0 are dropped: no stamp is negative, so their
// occurrence sets are empty and the guard clauses referencing them are false.
struct ClosureSet {
    std::vector<ClosureItem> items;  // bottom-up over modargs, units ascending
    bool contains(const ClosureItem& it) const;
};

ClosureSet closure(const NormalForm& nf, std::uint32_t node, std::int64_t unit);

struct BoundedClockPlan {
    std::uint32_t zero_clock = 0;
    std::map<ClosureItem, std::pair<std::uint32_t, std::uint32_t>> clocks;  // (first, last)
};

// Truth condition of a bounded modal literal psi at stamps within [r,r+1),
// phrased over the closure clocks.  Clauses whose unit starts below 0 vanish.
DiffSet bounded_condition_set(const NormalForm& nf, const ModalAtom& psi, std::int64_t r,
                              const BoundedClockPlan& plan);

DiffSet bounded_letter_guard(const NormalForm& nf, BExprId b, std::int64_t r,
                             const BoundedClockPlan& plan);

// Scan pass for one closure item: rewind to the begin marker, forward scan
// freezing the first qualifying position into the x clock, then backward
// from the end marker freezing the last into the y clock.  Never rejects.
Po2dta build_unit_pass(const NormalForm& nf, const ClosureItem& item,
                       const BoundedClockPlan& plan);

struct BoundedCompilation {
    Po2dta automaton;
    BoundedClockPlan plan;
    ClosureSet closure_set;
    NormalForm nf;
};

// reset pass (first-occurrence clocks seeded with the final stamp);
// one unit pass per closure item bottom-up; final check of the top-level
// disjunction at the stamp-0 cell.
BoundedCompilation compile_bounded_full(const FormulaFactory& f, FormulaId phi,
                                        const std::vector<std::string>& alphabet);

inline Po2dta compile_bounded(const FormulaFactory& f, FormulaId phi,
                              const std::vector<std::string>& alphabet) {
    return compile_bounded_full(f, phi, alphabet).automaton;
}

}  // namespace umitl

#endif
