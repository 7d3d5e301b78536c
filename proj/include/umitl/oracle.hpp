// ============================================================================
// umitl/oracle.hpp — Brute-force pointwise semantics (ground truth)
// ============================================================================
//
// F_I phi holds at i iff some strictly later j has phi with tau_j - tau_i in
// I; P_I dually over the strict past.  This module is the semantics authority
// for every compiler and extractor; it is deliberately naive.
//
// ============================================================================

#ifndef UMITL_ORACLE_HPP
#define UMITL_ORACLE_HPP

#include <optional>
#include <set>

#include "umitl/formula.hpp"
#include "umitl/timed_word.hpp"

namespace umitl {

// Memoized pointwise evaluation; i must lie in dom(w).
bool holds_at(const FormulaFactory& f, const TimedWord& w, std::size_t i, FormulaId phi);

// Unmemoized reference path (checked equal to holds_at in the test suite).
bool holds_at_naive(const FormulaFactory& f, const TimedWord& w, std::size_t i, FormulaId phi);

// w, 1 |= phi.  Requires a nonempty word with tau_1 == 0.
bool language_member(const FormulaFactory& f, const TimedWord& w, FormulaId phi);

// Positions, first stamp and last stamp of phi within interval I.
// Empty-index convention: first = tau_#w, last = tau_1.
struct OccurrenceMap {
    std::set<std::size_t> positions;
    Rational first;
    Rational last;
    bool empty() const { return positions.empty(); }
};

OccurrenceMap occurrence(const FormulaFactory& f, const TimedWord& w, FormulaId phi,
                         const std::optional<Interval>& iv = std::nullopt);

// Right-hand side of the first/last-occurrence characterization for a
// lower-bound modality <l,inf) applied to phi, evaluated at position i.
//   future, closed:  tau_i <= L - l  and  tau_i < L
//   future, open:    tau_i <  L - l
//   past,   closed:  tau_i >= Fo + l and  tau_i > Fo
//   past,   open:    tau_i >  Fo + l
bool lb_condition(const FormulaFactory& f, const TimedWord& w, std::size_t i,
                  bool future, bool open_lower, std::int64_t l, FormulaId phi);

}  // namespace umitl

#endif
