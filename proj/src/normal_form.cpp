// ============================================================================
// normal_form.cpp — Construction and evaluation of the shared-modarg form
// ============================================================================
//
// build(phi, a) interprets every letter atom against the fixed letter a
// (b collapses to true when b == a, false otherwise) and every modal
// subformula as an opaque literal over the recursively normalized modarg.
// Constant folding keeps B_a small; a letter whose B_a folds to false drops
// out of the disjunction entirely.
//
// ============================================================================

#include "umitl/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace umitl {

// --- interned boolean expressions ------------------------------------------

namespace {
std::string bexpr_key(const BExprNode& n) {
    return std::to_string(static_cast<int>(n.kind)) + "|" + std::to_string(n.a) + "|" +
           std::to_string(n.b) + "|" + std::to_string(n.literal);
}
}  // namespace

BExprId NormalForm::intern_bexpr(BExprNode n) {
    std::string key = bexpr_key(n);
    auto it = bexpr_index_.find(key);
    if (it != bexpr_index_.end()) return it->second;
    BExprId id = static_cast<BExprId>(bexprs.size());
    bexprs.push_back(n);
    bexpr_index_.emplace(std::move(key), id);
    return id;
}

BExprId NormalForm::b_true() { return intern_bexpr({BKind::True}); }
BExprId NormalForm::b_false() { return intern_bexpr({BKind::False}); }

BExprId NormalForm::b_lit(std::uint32_t literal) {
    BExprNode n{BKind::Lit};
    n.literal = literal;
    return intern_bexpr(n);
}

BExprId NormalForm::b_not(BExprId a) {
    if (bexprs[a].kind == BKind::True) return b_false();
    if (bexprs[a].kind == BKind::False) return b_true();
    if (bexprs[a].kind == BKind::Not) return bexprs[a].a;
    BExprNode n{BKind::Not};
    n.a = a;
    return intern_bexpr(n);
}

BExprId NormalForm::b_and(BExprId a, BExprId b) {
    if (bexprs[a].kind == BKind::False || bexprs[b].kind == BKind::False) return b_false();
    if (bexprs[a].kind == BKind::True) return b;
    if (bexprs[b].kind == BKind::True) return a;
    if (a == b) return a;
    BExprNode n{BKind::And};
    n.a = a;
    n.b = b;
    return intern_bexpr(n);
}

BExprId NormalForm::b_or(BExprId a, BExprId b) {
    if (bexprs[a].kind == BKind::True || bexprs[b].kind == BKind::True) return b_true();
    if (bexprs[a].kind == BKind::False) return b;
    if (bexprs[b].kind == BKind::False) return a;
    if (a == b) return a;
    BExprNode n{BKind::Or};
    n.a = a;
    n.b = b;
    return intern_bexpr(n);
}

// --- construction -----------------------------------------------------------

namespace {

struct Builder {
    const FormulaFactory& f;
    NormalForm& nf;
    std::unordered_map<FormulaId, std::uint32_t> node_memo;  // formula -> NF node
    std::unordered_map<std::string, std::uint32_t> atom_memo;
    std::unordered_map<std::string, std::uint32_t> node_dedup;

    std::uint32_t normalize(FormulaId phi) {
        auto it = node_memo.find(phi);
        if (it != node_memo.end()) return it->second;

        std::vector<std::pair<std::string, BExprId>> disjuncts;
        for (const std::string& a : nf.alphabet) {
            BExprId b = build(phi, a);
            if (nf.bexpr(b).kind != BKind::False) disjuncts.emplace_back(a, b);
        }
        // Dedup structurally (disjunct lists are canonical: alphabet order,
        // interned BExpr ids).
        std::string key;
        for (auto& [a, b] : disjuncts) {
            key += a;
            key += ':';
            key += std::to_string(b);
            key += ';';
        }
        std::uint32_t id;
        auto dit = node_dedup.find(key);
        if (dit != node_dedup.end()) {
            id = dit->second;
        } else {
            id = static_cast<std::uint32_t>(nf.nodes.size());
            NormalNode nn;
            nn.disjuncts = std::move(disjuncts);
            nf.nodes.push_back(std::move(nn));
            node_dedup.emplace(key, id);
        }
        node_memo.emplace(phi, id);
        return id;
    }

    std::uint32_t modal_literal(bool is_future, const Interval& iv, FormulaId arg) {
        std::uint32_t m = normalize(arg);
        std::string key = (is_future ? "F" : "P") + iv.to_string() + "#" + std::to_string(m);
        auto it = atom_memo.find(key);
        if (it != atom_memo.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(nf.modal_atoms.size());
        nf.modal_atoms.push_back(ModalAtom{is_future, iv, m});
        if (is_future)
            nf.nodes[m].used_as_future = true;
        else
            nf.nodes[m].used_as_past = true;
        atom_memo.emplace(std::move(key), id);
        return id;
    }

    BExprId build(FormulaId phi, const std::string& a) {
        const FormulaNode& n = f.node(phi);
        switch (n.kind) {
            case FormulaKind::Atom: return n.atom == a ? nf.b_true() : nf.b_false();
            case FormulaKind::True: return nf.b_true();
            case FormulaKind::False: return nf.b_false();
            case FormulaKind::Not: return nf.b_not(build(n.child0, a));
            case FormulaKind::And: return nf.b_and(build(n.child0, a), build(n.child1, a));
            case FormulaKind::Or: return nf.b_or(build(n.child0, a), build(n.child1, a));
            case FormulaKind::F:
                return nf.b_lit(modal_literal(true, n.interval, n.child0));
            case FormulaKind::P:
                return nf.b_lit(modal_literal(false, n.interval, n.child0));
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace

NormalForm to_normal_form(const FormulaFactory& f, FormulaId id,
                          const std::vector<std::string>& alphabet) {
    NormalForm nf;
    nf.alphabet = alphabet;
    Builder b{f, nf, {}, {}, {}};
    nf.top = b.normalize(id);
    return nf;
}

std::vector<std::uint32_t> NormalForm::modarg_order() const {
    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < nodes.size(); ++i)
        if (i != top) order.push_back(i);
    return order;
}

// --- evaluation ---------------------------------------------------------------

namespace {
struct NfEval {
    const NormalForm& nf;
    const TimedWord& w;
    // memo[node][pos-1]: -1 unknown, 0 false, 1 true
    std::vector<std::vector<signed char>> memo;

    NfEval(const NormalForm& n, const TimedWord& word)
        : nf(n), w(word), memo(n.nodes.size(), std::vector<signed char>(word.size(), -1)) {}

    bool node_at(std::uint32_t node, std::size_t i) {
        signed char& m = memo[node][i - 1];
        if (m >= 0) return m == 1;
        bool v = false;
        for (const auto& [a, b] : nf.nodes[node].disjuncts) {
            if (w.event(i) == a) {
                v = bexpr_at(b, i);
                break;
            }
        }
        m = v ? 1 : 0;
        return v;
    }

    bool bexpr_at(BExprId b, std::size_t i) {
        const BExprNode& n = nf.bexpr(b);
        switch (n.kind) {
            case BKind::True: return true;
            case BKind::False: return false;
            case BKind::Not: return !bexpr_at(n.a, i);
            case BKind::And: return bexpr_at(n.a, i) && bexpr_at(n.b, i);
            case BKind::Or: return bexpr_at(n.a, i) || bexpr_at(n.b, i);
            case BKind::Lit: {
                const ModalAtom& psi = nf.modal_atoms[n.literal];
                if (psi.is_future) {
                    for (std::size_t j = i + 1; j <= w.size(); ++j)
                        if (psi.interval.contains(w.stamp(j) - w.stamp(i)) &&
                            node_at(psi.modarg, j))
                            return true;
                } else {
                    for (std::size_t j = 1; j < i; ++j)
                        if (psi.interval.contains(w.stamp(i) - w.stamp(j)) &&
                            node_at(psi.modarg, j))
                            return true;
                }
                return false;
            }
        }
        throw std::logic_error("unreachable");
    }
};
}  // namespace

bool NormalForm::eval_node(std::uint32_t node, const TimedWord& w, std::size_t i) const {
    if (i < 1 || i > w.size()) throw std::out_of_range("position out of range");
    NfEval ev(*this, w);
    return ev.node_at(node, i);
}

// --- rendering ----------------------------------------------------------------

namespace {
FormulaId render_bexpr(const NormalForm& nf, FormulaFactory& f, BExprId b,
                       std::vector<FormulaId>& node_cache);

FormulaId render_node(const NormalForm& nf, FormulaFactory& f, std::uint32_t node,
                      std::vector<FormulaId>& node_cache) {
    if (node_cache[node] != kNoFormula) return node_cache[node];
    std::vector<FormulaId> parts;
    for (const auto& [a, b] : nf.nodes[node].disjuncts) {
        FormulaId ba = render_bexpr(nf, f, b, node_cache);
        parts.push_back(f.conj(f.atom(a), ba));
    }
    FormulaId out = f.disj_all(parts);
    node_cache[node] = out;
    return out;
}

FormulaId render_bexpr(const NormalForm& nf, FormulaFactory& f, BExprId b,
                       std::vector<FormulaId>& node_cache) {
    const BExprNode& n = nf.bexpr(b);
    switch (n.kind) {
        case BKind::True: return f.truth();
        case BKind::False: return f.falsity();
        case BKind::Not: return f.negation(render_bexpr(nf, f, n.a, node_cache));
        case BKind::And:
            return f.conj(render_bexpr(nf, f, n.a, node_cache),
                          render_bexpr(nf, f, n.b, node_cache));
        case BKind::Or:
            return f.disj(render_bexpr(nf, f, n.a, node_cache),
                          render_bexpr(nf, f, n.b, node_cache));
        case BKind::Lit: {
            const ModalAtom& psi = nf.modal_atoms[n.literal];
            FormulaId arg = render_node(nf, f, psi.modarg, node_cache);
            return psi.is_future ? f.eventually(psi.interval, arg)
                                 : f.previously(psi.interval, arg);
        }
    }
    throw std::logic_error("unreachable");
}
}  // namespace

FormulaId NormalForm::to_formula(FormulaFactory& f, std::uint32_t node) const {
    std::vector<FormulaId> cache(nodes.size(), kNoFormula);
    return render_node(*this, f, node, cache);
}

}  // namespace umitl
