// ============================================================================
// umitl/extract.hpp — From po2DTA back to lower-bound formulas
// ============================================================================
//
// For each path of progress edges from the start state we build a formula
// that pins down exactly the position where its last edge fires; the language
// formula is the disjunction over accepting paths.  Determinism makes the
// firing positions unique, which is what lets punctual and two-sided guard
// constraints be written with lower-bound modalities alone.  The output is a
// formula over the extended alphabet (markers included), to be evaluated on
// extended words re-indexed from 1.
//
// ============================================================================

#ifndef UMITL_EXTRACT_HPP
#define UMITL_EXTRACT_HPP

#include "umitl/automaton.hpp"
#include "umitl/formula.hpp"

namespace umitl {

// A chained sequence of progress edges starting at the start state; stored as
// indices into the automaton's transition list.
using ProgressPath = std::vector<std::size_t>;

// All progress-edge paths from start to accept (the transition graph is a
// DAG, so paths are simple).
std::vector<ProgressPath> accepting_paths(const Po2dta& a);

// Longest prefix of `path` ending with a transition that resets `clock`,
// or an empty path when the clock is never reset.
ProgressPath pref(const Po2dta& a, const ProgressPath& path, std::uint32_t clock);

// Formula holding exactly at the positions (of the extended word, 1-indexed)
// where the run's partial traversal fires exactly the edges of `path`, with
// the last firing at the evaluation position.
FormulaId enable_formula(FormulaFactory& f, const Po2dta& a, const ProgressPath& path);

// Formula equivalent, at the position where `path`'s last edge fired, to the
// guard g holding under the valuation accumulated along `path`.
FormulaId gsat(FormulaFactory& f, const Po2dta& a, const ProgressPath& path, const Guard& g);

// The language formula: disjunction over accepting paths of "the path's last
// edge fires here or strictly later".  accepts(a, w) iff the result holds at
// position 1 of w.extended().
FormulaId extract_formula(FormulaFactory& f, const Po2dta& a);

}  // namespace umitl

#endif
