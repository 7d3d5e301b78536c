// ============================================================================
// umitl/normal_form.hpp — Normal form with shared modal arguments
// ============================================================================
//
// A normal-form node is a disjunction over letters a of (a && B_a) where B_a
// is a boolean combination of modal literals F_I(m) / P_I(m) and each m — a
// "modarg" — is itself a normal-form node.  Modargs are deduplicated by
// structure and stored in bottom-up order (children strictly before parents),
// ties broken by first occurrence in a left-to-right traversal.
//
// ============================================================================

#ifndef UMITL_NORMAL_FORM_HPP
#define UMITL_NORMAL_FORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umitl/formula.hpp"
#include "umitl/timed_word.hpp"

namespace umitl {

using BExprId = std::uint32_t;
inline constexpr BExprId kNoBExpr = static_cast<BExprId>(-1);

enum class BKind : std::uint8_t { True, False, Lit, Not, And, Or };

// Boolean expression over modal literals; interned per NormalForm.
struct BExprNode {
    BKind kind;
    BExprId a = kNoBExpr;
    BExprId b = kNoBExpr;
    std::uint32_t literal = 0;  // index into NormalForm::modal_atoms (Lit only)
};

// One modal literal psi_i = F_I(m) or P_I(m).
struct ModalAtom {
    bool is_future;
    Interval interval;
    std::uint32_t modarg;  // index into NormalForm::nodes
};

// Disjunction over letters; letters with B_a == False are omitted.
struct NormalNode {
    std::vector<std::pair<std::string, BExprId>> disjuncts;
    bool used_as_future = false;  // appears under some F
    bool used_as_past = false;    // appears under some P
};

class NormalForm {
public:
    std::vector<NormalNode> nodes;       // bottom-up; nodes[top] is last
    std::vector<ModalAtom> modal_atoms;  // deduplicated (op, interval, modarg)
    std::vector<BExprNode> bexprs;
    std::uint32_t top = 0;
    std::vector<std::string> alphabet;

    // Indices of proper modargs (every node except the top) in bottom-up order.
    std::vector<std::uint32_t> modarg_order() const;

    const BExprNode& bexpr(BExprId id) const { return bexprs.at(id); }

    // Direct evaluation of a normal node at position i of w (1-based).
    bool eval_node(std::uint32_t node, const TimedWord& w, std::size_t i) const;
    bool eval_top(const TimedWord& w, std::size_t i) const { return eval_node(top, w, i); }

    // Render a node back into the plain-formula factory (for printing and for
    // oracle cross-checks).
    FormulaId to_formula(FormulaFactory& f, std::uint32_t node) const;

    // Builder interface (used by to_normal_form).
    BExprId b_true();
    BExprId b_false();
    BExprId b_lit(std::uint32_t literal);
    BExprId b_not(BExprId a);
    BExprId b_and(BExprId a, BExprId b);
    BExprId b_or(BExprId a, BExprId b);

private:
    BExprId intern_bexpr(BExprNode n);
    std::unordered_map<std::string, BExprId> bexpr_index_;
    friend NormalForm to_normal_form(const FormulaFactory&, FormulaId,
                                     const std::vector<std::string>&);
};

// Normal-form construction per the disjunctive-normal-form procedure with
// modal subformulas treated as atomic; letter atoms inside B_a collapse to
// constants (a && b == false for distinct letters).
NormalForm to_normal_form(const FormulaFactory& f, FormulaId id,
                          const std::vector<std::string>& alphabet);

}  // namespace umitl

#endif
