// ============================================================================
// umitl/formula.hpp — AST for unary metric temporal formulas
// ============================================================================
//
// Formulas live in an interned DAG: structurally equal subformulas share one
// FormulaId, so equality is O(1) and modal sharing is the default.  Kinds:
//
//   Atom      : event letter
//   True/False: boolean constants (kept as sugar, not desugared)
//   Not       : negation, child[0]
//   And / Or  : child[0], child[1]  (And is sugar, kept in the AST)
//   F         : eventually within interval, strict future
//   P         : previously within interval, strict past
//
// ============================================================================

#ifndef UMITL_FORMULA_HPP
#define UMITL_FORMULA_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "umitl/interval.hpp"

namespace umitl {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = static_cast<FormulaId>(-1);

enum class FormulaKind : std::uint8_t { Atom, True, False, Not, And, Or, F, P };

struct FormulaNode {
    FormulaKind kind;
    FormulaId child0 = kNoFormula;
    FormulaId child1 = kNoFormula;
    std::string atom;    // Atom only
    Interval interval;   // F/P only
};

class FormulaFactory {
public:
    FormulaId atom(const std::string& name);
    FormulaId truth();
    FormulaId falsity();
    FormulaId negation(FormulaId a);
    FormulaId conj(FormulaId a, FormulaId b);
    FormulaId disj(FormulaId a, FormulaId b);
    FormulaId eventually(const Interval& iv, FormulaId a);
    FormulaId previously(const Interval& iv, FormulaId a);
    FormulaId implies(FormulaId a, FormulaId b) { return disj(negation(a), b); }

    FormulaId conj_all(const std::vector<FormulaId>& xs);
    FormulaId disj_all(const std::vector<FormulaId>& xs);

    const FormulaNode& node(FormulaId id) const { return nodes_.at(id); }
    std::size_t node_count() const { return nodes_.size(); }

    std::string to_string(FormulaId id) const;
    std::set<std::string> atoms_of(FormulaId id) const;

private:
    FormulaId intern(FormulaNode n);
    std::vector<FormulaNode> nodes_;
    std::unordered_map<std::string, FormulaId> index_;
};

// --- parsing ----------------------------------------------------------------

// Grammar (whitespace insensitive):
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | 'true' | 'false' | atom | '(' expr ')' | '[' expr ']'
//           | ('F'|'P') interval factor
//   interval := ('['|'(') nat ',' (nat|'inf') (']'|')')
//   atom   := identifier | '^' | '$'
// Atoms must belong to `alphabet`; pass an empty set to accept any atom.
FormulaId parse_formula(FormulaFactory& f, const std::string& text,
                        const std::set<std::string>& alphabet = {});

// --- fragment classification -------------------------------------------------

enum class FragmentKind : std::uint8_t {
    NonMitl,     // contains a punctual interval
    LowerBound,  // all intervals <l,inf)
    UpperBound,  // all intervals [0,u>
    Bounded,     // all intervals bounded non-punctual
    ZeroInf,     // all intervals one-sided ([0,u> or <l,inf)) but mixed
    Full,
};

struct FragmentTag {
    FragmentKind kind = FragmentKind::Full;
    bool future_only = true;
    std::string to_string() const;
};

FragmentTag classify_fragment(const FormulaFactory& f, FormulaId id);

// Shape predicates used by the compilers ("or stricter" dispatch).
bool all_intervals_lower_bound(const FormulaFactory& f, FormulaId id);
bool all_intervals_bounded_nonpunctual(const FormulaFactory& f, FormulaId id);

// --- size metrics -------------------------------------------------------------

struct ModalDagSize {
    std::size_t modal_nodes = 0;   // distinct F/P nodes in the DAG
    std::size_t constant_bits = 0; // total bits of interval constants
    std::size_t total = 0;         // modal_nodes + constant_bits
};

ModalDagSize modal_dag_size(const FormulaFactory& f, FormulaId id);

}  // namespace umitl

#endif
