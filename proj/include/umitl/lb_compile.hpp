// ============================================================================
// umitl/lb_compile.hpp — Lower-bound fragment to po2DTA
// ============================================================================
//
// Each F-type modarg gets a clock freezing the stamp of its last occurrence;
// each P-type modarg a clock for its first occurrence.  One scan pass per
// modarg sets the clock; truth of a lower-bound modality then reduces to a
// comparison between the current time and that clock.  A reserved clock z0 is
// never reset and stays 0, letting absolute-time comparisons T ~ c be spelled
// T - z0 ~ c inside the fixed guard grammar.
//
// ============================================================================

#ifndef UMITL_LB_COMPILE_HPP
#define UMITL_LB_COMPILE_HPP

#include "umitl/automaton.hpp"
#include "umitl/guard_algebra.hpp"
#include "umitl/normal_form.hpp"

namespace umitl {

struct LbClockPlan {
    std::uint32_t zero_clock = 0;
    // Clock ids per normal-form node index, or -1 when the polarity is unused.
    std::vector<std::uint32_t> last_clock;   // y: F-type modargs
    std::vector<std::uint32_t> first_clock;  // x: P-type modargs
};

// Difference-set form of the truth condition for a lower-bound modal literal:
//   F_[l,inf) m :  y_m - T >= l  and  y_m - T > 0
//   F_(l,inf) m :  y_m - T >  l
//   P_[l,inf) m :  T - x_m >= l  and  T - x_m > 0
//   P_(l,inf) m :  T - x_m >  l
DiffSet lb_condition_set(const ModalAtom& psi, const LbClockPlan& plan);

// B_a with every modal literal replaced by its condition set.
DiffSet lb_letter_guard(const NormalForm& nf, BExprId b, const LbClockPlan& plan);

// Scan pass for one modarg.  For F-type: walk to the end marker, then scan
// backward and freeze the first qualifying position (the last occurrence)
// into the modarg's y clock.  P-type is the mirror image.
Po2dta build_lb_modarg_pass(const NormalForm& nf, std::uint32_t modarg, bool future,
                            const LbClockPlan& plan);

struct LbCompilation {
    Po2dta automaton;
    LbClockPlan plan;
    NormalForm nf;
};

// Full pipeline: initial pass seeding the first-occurrence clocks with the
// final stamp, one pass per modarg bottom-up, then a final check that the
// top-level disjunction holds at the stamp-0 cell.
LbCompilation compile_lb_full(const FormulaFactory& f, FormulaId phi,
                              const std::vector<std::string>& alphabet);

inline Po2dta compile_lb(const FormulaFactory& f, FormulaId phi,
                         const std::vector<std::string>& alphabet) {
    return compile_lb_full(f, phi, alphabet).automaton;
}

}  // namespace umitl

#endif
