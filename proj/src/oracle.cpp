// ============================================================================
// oracle.cpp — Reference semantics, occurrence maps, lower-bound conditions
// ============================================================================

#include "umitl/oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace umitl {

namespace {
bool eval(const FormulaFactory& f, const TimedWord& w, std::size_t i, FormulaId phi,
          std::map<std::pair<FormulaId, std::size_t>, bool>* memo) {
    if (memo) {
        auto it = memo->find({phi, i});
        if (it != memo->end()) return it->second;
    }
    const FormulaNode& n = f.node(phi);
    bool v = false;
    switch (n.kind) {
        case FormulaKind::Atom: v = (w.event(i) == n.atom); break;
        case FormulaKind::True: v = true; break;
        case FormulaKind::False: v = false; break;
        case FormulaKind::Not: v = !eval(f, w, i, n.child0, memo); break;
        case FormulaKind::And:
            v = eval(f, w, i, n.child0, memo) && eval(f, w, i, n.child1, memo);
            break;
        case FormulaKind::Or:
            v = eval(f, w, i, n.child0, memo) || eval(f, w, i, n.child1, memo);
            break;
        case FormulaKind::F:
            for (std::size_t j = i + 1; j <= w.size() && !v; ++j)
                v = n.interval.contains(w.stamp(j) - w.stamp(i)) && eval(f, w, j, n.child0, memo);
            break;
        case FormulaKind::P:
            for (std::size_t j = 1; j < i && !v; ++j)
                v = n.interval.contains(w.stamp(i) - w.stamp(j)) && eval(f, w, j, n.child0, memo);
            break;
    }
    if (memo) memo->emplace(std::make_pair(phi, i), v);
    return v;
}
}  // namespace

bool holds_at(const FormulaFactory& f, const TimedWord& w, std::size_t i, FormulaId phi) {
    if (i < 1 || i > w.size()) throw std::out_of_range("position out of range");
    std::map<std::pair<FormulaId, std::size_t>, bool> memo;
    return eval(f, w, i, phi, &memo);
}

bool holds_at_naive(const FormulaFactory& f, const TimedWord& w, std::size_t i, FormulaId phi) {
    if (i < 1 || i > w.size()) throw std::out_of_range("position out of range");
    return eval(f, w, i, phi, nullptr);
}

bool language_member(const FormulaFactory& f, const TimedWord& w, FormulaId phi) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (!w.starts_at_zero()) throw std::invalid_argument("word must start at time 0");
    return holds_at(f, w, 1, phi);
}

OccurrenceMap occurrence(const FormulaFactory& f, const TimedWord& w, FormulaId phi,
                         const std::optional<Interval>& iv) {
    OccurrenceMap out;
    std::map<std::pair<FormulaId, std::size_t>, bool> memo;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (iv && !iv->contains(w.stamp(i))) continue;
        if (eval(f, w, i, phi, &memo)) out.positions.insert(i);
    }
    if (out.positions.empty()) {
        // min over the empty set is the final position, max the first.
        out.first = w.empty() ? Rational(0) : w.stamp(w.size());
        out.last = w.empty() ? Rational(0) : w.stamp(1);
    } else {
        out.first = w.stamp(*out.positions.begin());
        out.last = w.stamp(*out.positions.rbegin());
    }
    return out;
}

bool lb_condition(const FormulaFactory& f, const TimedWord& w, std::size_t i,
                  bool future, bool open_lower, std::int64_t l, FormulaId phi) {
    if (i < 1 || i > w.size()) throw std::out_of_range("position out of range");
    if (l < 0) throw std::invalid_argument("negative lower bound");
    OccurrenceMap occ = occurrence(f, w, phi);
    Rational t = w.stamp(i);
    Rational bound(l);
    if (future) {
        if (open_lower) return t < occ.last - bound;
        return t <= occ.last - bound && t < occ.last;
    }
    if (open_lower) return t > occ.first + bound;
    return t >= occ.first + bound && t > occ.first;
}

}  // namespace umitl
