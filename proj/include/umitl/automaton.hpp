// ============================================================================
// umitl/automaton.hpp — Partially ordered two-way deterministic timed automata
// ============================================================================
//
// States are partially ordered with a single maximal start state and the two
// terminals (accept, reject) as only minimal elements.  Non-terminal states
// carry a scan direction: Fwd states are entered from the left and loop
// rightward, Bwd states loop leftward.  Progress transitions strictly descend
// the order, may reset clocks to the current stamp, and per (state, letter)
// their guards must be pairwise disjoint.  Anything not covered by a progress
// transition self-loops in the scan direction.
//
// The run engine walks the extended word (^,0) w ($,tau_n) with head indices
// 0..n+1; runs start at head index 1 (the first letter).
//
// ============================================================================

#ifndef UMITL_AUTOMATON_HPP
#define UMITL_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umitl/rational.hpp"
#include "umitl/timed_word.hpp"

namespace umitl {

// --- guards -------------------------------------------------------------------

enum class Rel : std::uint8_t { Lt, Le, Gt, Ge, Eq };

std::string rel_to_string(Rel r);

// One comparison between the current time T and a frozen clock value.
// t_minus_clock selects T - x (current time ahead of the reset point);
// otherwise x - T.  Either way the difference is implicitly required to be
// non-negative, per the guard grammar.
struct GuardAtom {
    std::uint32_t clock;
    bool t_minus_clock;
    Rel rel;
    std::int64_t constant;  // natural
};

// Conjunction of atoms; empty list is `true`.
struct Guard {
    std::vector<GuardAtom> atoms;
    bool is_true() const { return atoms.empty(); }
};

using ClockValuation = std::vector<Rational>;  // indexed by clock id

bool guard_holds(const ClockValuation& nu, const Rational& now, const Guard& g);

// True iff g1 && g2 is unsatisfiable over arbitrary valuations and times.
// Each clock constrains the single quantity T - x independently, so the
// conjunction is satisfiable iff every clock's intersected interval on that
// quantity is nonempty.
bool guards_disjoint(const Guard& g1, const Guard& g2);

std::string guard_to_string(const Guard& g, const std::vector<std::string>& clock_names);
Guard parse_guard(const std::string& text, const std::vector<std::string>& clock_names);

// --- automaton ----------------------------------------------------------------

enum class StateDir : std::uint8_t { Fwd, Bwd, Terminal };

struct AutomatonState {
    std::string name;
    StateDir dir = StateDir::Fwd;
};

struct Transition {
    std::uint32_t from;
    std::string letter;  // from Sigma, or "^" / "$"
    Guard guard;
    std::vector<std::uint32_t> resets;
    std::uint32_t to;
};

struct Po2dta {
    std::vector<AutomatonState> states;
    std::vector<std::string> clocks;
    std::vector<std::string> alphabet;  // Sigma, without the markers
    std::vector<Transition> transitions;
    std::uint32_t start = 0;
    std::uint32_t accept = 0;
    std::uint32_t reject = 0;

    std::uint32_t add_state(const std::string& name, StateDir dir);
    std::uint32_t add_clock(const std::string& name);
    std::uint32_t clock_id(const std::string& name) const;
    void add_transition(std::uint32_t from, std::string letter, Guard g,
                        std::vector<std::uint32_t> resets, std::uint32_t to);

    std::size_t progress_edge_count() const { return transitions.size(); }
    std::int64_t max_guard_constant() const;

    std::string to_json() const;
    static Po2dta from_json(const std::string& text);
    std::string to_dot() const;
};

// Structural validation; an empty report means the automaton is valid.
std::vector<std::string> validate(const Po2dta& a);
inline bool is_valid(const Po2dta& a) { return validate(a).empty(); }

// --- runs ---------------------------------------------------------------------

enum class Verdict : std::uint8_t { Accept, Reject, FellOff };

struct RunStep {
    std::uint32_t state;
    std::int64_t head;                 // extended-word index 0..n+1
    std::optional<std::size_t> fired;  // transition index, if a progress edge fired
};

struct RunResult {
    Verdict verdict = Verdict::Reject;
    ClockValuation valuation;
    std::int64_t head = 0;
    std::vector<RunStep> trace;
};

// Run from (start, nu, head k) over the extended word; k in 0..n+1.
// Throws std::logic_error if two progress transitions are enabled at once
// (the validator should have rejected such an automaton).
RunResult run(const Po2dta& a, const TimedWord& w, const ClockValuation& nu,
              std::int64_t k, bool keep_trace = false);

// Run on a word prefix whose continuation is unknown: cells at head index
// > known_len are unavailable.  Outcome Unknown means the head needed one.
enum class PrefixOutcome : std::uint8_t { Accept, Reject, Unknown };
PrefixOutcome run_on_prefix(const Po2dta& a, const TimedWord& prefix);

ClockValuation initial_valuation(const Po2dta& a);

// Language membership: run from the first letter with all clocks zero.
bool accepts(const Po2dta& a, const TimedWord& w);

// Sequential composition: the accept state of a becomes the start of b;
// rejects are merged.  Clocks with equal names are shared deliberately.
Po2dta sequential_compose(const Po2dta& a, const Po2dta& b);

// Complement by swapping the terminals (deterministic automata only).
Po2dta complement(const Po2dta& a);

// The worked two-clock example automaton: accepts words having a b in [1,2]
// (absolute time) such that a c occurs exactly 1 time unit before the first
// such b.
Po2dta example_automaton();

}  // namespace umitl

#endif
