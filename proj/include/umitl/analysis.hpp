// ============================================================================
// umitl/analysis.hpp — Bounded emptiness, satisfiability, equivalence checks
// ============================================================================

#ifndef UMITL_ANALYSIS_HPP
#define UMITL_ANALYSIS_HPP

#include <optional>
#include <string>

#include "umitl/automaton.hpp"
#include "umitl/formula.hpp"

namespace umitl {

// Candidate words: length <= max_len, stamps strictly increasing multiples of
// 1/grid_denominator within [0, horizon], first stamp 0.
struct SearchBounds {
    std::size_t max_len = 4;
    std::int64_t grid_denominator = 5;
    Rational horizon = Rational(8);

    std::string to_string() const;
};

// Defaults derived from the automaton: enough positions for every progress
// edge to fire plus slack, a grid finer than the position count, and a
// horizon past the largest guard constant.
SearchBounds default_bounds(const Po2dta& a);

struct SearchStats {
    std::uint64_t words_checked = 0;
    double seconds = 0.0;
};

struct SatVerdict {
    bool satisfiable = false;  // false means: no witness within the bounds
    std::optional<TimedWord> witness;
    std::optional<RunResult> witness_run;
    SearchBounds bounds;
    SearchStats stats;

    std::string to_json() const;
    std::string to_text() const;
};

// Exhaustive shortlex search (length first, then letters, then stamps) with
// prefix pruning: a branch is cut once the run rejects while reading only the
// known prefix.  Deterministic: equal inputs yield the identical witness.
SatVerdict witness_search(const Po2dta& a, const std::vector<std::string>& alphabet,
                          const SearchBounds& bounds);

// Classify, compile with the matching compiler, search; SAT witnesses are
// re-verified against the brute-force semantics of phi.
SatVerdict is_satisfiable(const FormulaFactory& f, FormulaId phi,
                          const std::vector<std::string>& alphabet,
                          const std::optional<SearchBounds>& bounds = std::nullopt);

// --- sampled equivalence -------------------------------------------------------

// One side of an equivalence check: an automaton, or a formula evaluated
// either as a plain language membership (tau_1 = 0 words over Sigma) or on
// the extended word at position 1 (the contract of extracted formulas).
struct EquivSide {
    enum class Kind { Automaton, FormulaPlain, FormulaExtended } kind;
    const Po2dta* automaton = nullptr;
    const FormulaFactory* factory = nullptr;
    FormulaId formula = kNoFormula;

    static EquivSide of_automaton(const Po2dta& a);
    static EquivSide of_formula(const FormulaFactory& f, FormulaId id, bool extended = false);
    bool decide(const TimedWord& w) const;
};

struct EquivConfig {
    std::size_t max_len = 5;
    std::int64_t grid_denominator = 4;
    Rational horizon = Rational(8);
    std::size_t samples = 1000;   // random samples when exhaustion is too big
    std::uint64_t seed = 20120917;
};

struct EquivReport {
    bool equivalent = true;
    std::size_t words_checked = 0;
    std::optional<TimedWord> counterexample;
    bool lhs_value = false;  // verdicts on the counterexample
    bool rhs_value = false;

    std::string to_json() const;
    std::string to_text() const;
};

// Samples words over `alphabet` on the configured grid, plus boundary stamps
// at integer offsets +-1/g around every constant appearing on either side.
EquivReport sampled_equivalence(const EquivSide& lhs, const EquivSide& rhs,
                                const std::vector<std::string>& alphabet,
                                const EquivConfig& cfg = {});

// --- size metrics ----------------------------------------------------------------

struct SizeReport {
    ModalDagSize formula_size;
    std::string fragment;
    std::optional<std::size_t> lb_states, lb_clocks, lb_edges;
    std::optional<std::size_t> bounded_states, bounded_clocks, bounded_edges;
    std::optional<std::size_t> closure_items;
    std::string to_json() const;
};

SizeReport size_report(const FormulaFactory& f, FormulaId phi,
                       const std::vector<std::string>& alphabet);

}  // namespace umitl

#endif
