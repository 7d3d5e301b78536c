// ============================================================================
// bounded_compile.cpp — Bounded fragment compiler (unit-interval stacking)
// ============================================================================

#include "umitl/bounded_compile.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace umitl {

// --- closure -----------------------------------------------------------------

namespace {
void collect_literals(const NormalForm& nf, BExprId b, std::set<std::uint32_t>& out) {
    const BExprNode& n = nf.bexpr(b);
    switch (n.kind) {
        case BKind::Lit: out.insert(n.literal); break;
        case BKind::Not: collect_literals(nf, n.a, out); break;
        case BKind::And:
        case BKind::Or:
            collect_literals(nf, n.a, out);
            collect_literals(nf, n.b, out);
            break;
        default: break;
    }
}

std::set<std::uint32_t> node_literals(const NormalForm& nf, std::uint32_t node) {
    std::set<std::uint32_t> lits;
    for (const auto& [a, b] : nf.nodes[node].disjuncts) collect_literals(nf, b, lits);
    return lits;
}
}  // namespace

bool ClosureSet::contains(const ClosureItem& it) const {
    return std::find(items.begin(), items.end(), it) != items.end();
}

ClosureSet closure(const NormalForm& nf, std::uint32_t node, std::int64_t unit) {
    std::set<ClosureItem> acc;
    std::function<void(std::uint32_t, std::int64_t)> go = [&](std::uint32_t m, std::int64_t r) {
        if (r < 0) return;  // no stamp is negative; such items stay empty forever
        ClosureItem it{m, r};
        if (acc.count(it)) return;
        acc.insert(it);
        for (std::uint32_t lit : node_literals(nf, m)) {
            const ModalAtom& psi = nf.modal_atoms[lit];
            if (!psi.interval.is_bounded_nonpunctual())
                throw std::invalid_argument("closure requires bounded non-punctual intervals");
            for (const Interval& piece : psi.interval.unit_split()) {
                std::int64_t l = piece.lower;
                if (psi.is_future) {
                    go(psi.modarg, r + l);
                    go(psi.modarg, r + l + 1);
                } else {
                    go(psi.modarg, r - l - 1);
                    go(psi.modarg, r - l);
                }
            }
        }
    };
    go(node, unit);

    ClosureSet out;
    out.items.assign(acc.begin(), acc.end());
    // bottom-up over modargs (node indices are created children-first),
    // intervals ascending within one modarg
    std::sort(out.items.begin(), out.items.end());
    return out;
}

// --- conditions ----------------------------------------------------------------

namespace {
DiffSet unit_range(std::uint32_t z0, std::int64_t r) {
    // r <= T - z0 < r+1
    DiffInterval iv = DiffInterval::at_least(r, false).intersect(
        DiffInterval::at_most(r + 1, true));
    return DiffSet::from_atom(z0, iv);
}
}  // namespace

DiffSet bounded_condition_set(const NormalForm& nf, const ModalAtom& psi, std::int64_t r,
                              const BoundedClockPlan& plan) {
    if (!psi.interval.is_bounded_nonpunctual())
        throw std::invalid_argument("not a bounded non-punctual modality: " +
                                    psi.interval.to_string());
    auto clocks_of = [&](std::int64_t unit) {
        return plan.clocks.at(ClosureItem{psi.modarg, unit});
    };
    DiffSet acc = DiffSet::none();
    for (const Interval& piece : psi.interval.unit_split()) {
        std::int64_t l = piece.lower;
        bool a_open = piece.lower_open;
        bool b_open = piece.upper_open;
        if (psi.is_future) {
            // witnesses in [r+l, r+l+1): the last occurrence gives the
            // sharpest lower-bound margin
            {
                std::int64_t j = r + l;
                if (j >= 0) {
                    auto [x, y] = clocks_of(j);
                    DiffBox box;
                    box.by_clock[y] = DiffInterval::at_most(0, true)  // T < last
                                          .intersect(DiffInterval::at_most(-l, a_open));
                    box.by_clock[plan.zero_clock] = DiffInterval::at_least(r, false);
                    acc = acc.set_or(DiffSet{{box}});
                    (void)x;
                }
            }
            // witnesses in [r+l+1, r+l+2): the first occurrence gives the
            // sharpest upper-bound margin
            {
                std::int64_t j = r + l + 1;
                if (j >= 0) {
                    auto [x, y] = clocks_of(j);
                    DiffBox box;
                    box.by_clock[y] = DiffInterval::at_most(0, true);  // T < last (nonempty)
                    box.by_clock[x] =
                        DiffInterval::at_least(-(l + 1), b_open);  // T >_b first-(l+1)
                    box.by_clock[plan.zero_clock] = DiffInterval::at_most(r + 1, true);
                    acc = acc.set_or(DiffSet{{box}});
                }
            }
        } else {
            // witnesses in [r-l-1, r-l)
            {
                std::int64_t j = r - l - 1;
                if (j >= 0) {
                    auto [x, y] = clocks_of(j);
                    DiffBox box;
                    box.by_clock[x] = DiffInterval::at_least(0, true);  // T > first
                    box.by_clock[y] =
                        DiffInterval::at_most(l + 1, b_open);  // T <_b last+(l+1)
                    box.by_clock[plan.zero_clock] = DiffInterval::at_least(r, false);
                    acc = acc.set_or(DiffSet{{box}});
                }
            }
            // witnesses in [r-l, r-l+1)
            {
                std::int64_t j = r - l;
                if (j >= 0) {
                    auto [x, y] = clocks_of(j);
                    DiffBox box;
                    box.by_clock[x] = DiffInterval::at_least(0, true)  // T > first
                                          .intersect(DiffInterval::at_least(l, a_open));
                    box.by_clock[plan.zero_clock] = DiffInterval::at_most(r + 1, true);
                    acc = acc.set_or(DiffSet{{box}});
                    (void)y;
                }
            }
        }
    }
    return acc;
}

DiffSet bounded_letter_guard(const NormalForm& nf, BExprId b, std::int64_t r,
                             const BoundedClockPlan& plan) {
    const BExprNode& n = nf.bexpr(b);
    switch (n.kind) {
        case BKind::True: return DiffSet::all();
        case BKind::False: return DiffSet::none();
        case BKind::Lit: return bounded_condition_set(nf, nf.modal_atoms[n.literal], r, plan);
        case BKind::Not: return bounded_letter_guard(nf, n.a, r, plan).set_not();
        case BKind::And:
            return bounded_letter_guard(nf, n.a, r, plan)
                .set_and(bounded_letter_guard(nf, n.b, r, plan));
        case BKind::Or:
            return bounded_letter_guard(nf, n.a, r, plan)
                .set_or(bounded_letter_guard(nf, n.b, r, plan));
    }
    throw std::logic_error("unreachable");
}

// --- passes -------------------------------------------------------------------

namespace {
void install_bounded_clocks(Po2dta& a, const ClosureSet& cl) {
    a.add_clock("z0");
    for (const ClosureItem& it : cl.items) {
        a.add_clock("x" + std::to_string(it.modarg) + "u" + std::to_string(it.unit));
        a.add_clock("y" + std::to_string(it.modarg) + "u" + std::to_string(it.unit));
    }
}
}  // namespace

Po2dta build_unit_pass(const NormalForm& nf, const ClosureItem& item,
                       const BoundedClockPlan& plan) {
    Po2dta a;
    a.alphabet = nf.alphabet;
    // every pass automaton carries the full shared clock table, so the
    // composition threads values through by name
    {
        ClosureSet cl;
        for (const auto& [it, ids] : plan.clocks) cl.items.push_back(it);
        std::sort(cl.items.begin(), cl.items.end());
        install_bounded_clocks(a, cl);
    }

    std::string tag = std::to_string(item.modarg) + "u" + std::to_string(item.unit);
    std::uint32_t rew = a.add_state("rew" + tag, StateDir::Bwd);
    std::uint32_t first_scan = a.add_state("first" + tag, StateDir::Fwd);
    std::uint32_t mid = a.add_state("mid" + tag, StateDir::Fwd);
    std::uint32_t last_scan = a.add_state("last" + tag, StateDir::Bwd);
    std::uint32_t t = a.add_state("t" + tag, StateDir::Terminal);
    std::uint32_t r = a.add_state("r" + tag, StateDir::Terminal);
    a.start = rew;
    a.accept = t;
    a.reject = r;

    auto [x_clock, y_clock] = plan.clocks.at(item);
    a.add_transition(rew, kBeginMarker, Guard{}, {}, first_scan);
    DiffSet range = unit_range(plan.zero_clock, item.unit);
    for (const auto& [letter, b] : nf.nodes[item.modarg].disjuncts) {
        DiffSet ds = bounded_letter_guard(nf, b, item.unit, plan).set_and(range);
        for (Guard& g : emit_diffset(ds)) {
            a.add_transition(first_scan, letter, g, {x_clock}, mid);
            a.add_transition(last_scan, letter, std::move(g), {y_clock}, t);
        }
    }
    // nothing qualifying on the way out: both clocks keep their defaults
    a.add_transition(first_scan, kEndMarker, Guard{}, {}, t);
    a.add_transition(mid, kEndMarker, Guard{}, {}, last_scan);
    a.add_transition(last_scan, kBeginMarker, Guard{}, {}, t);  // unreachable
    return a;
}

// --- full pipeline ---------------------------------------------------------------

BoundedCompilation compile_bounded_full(const FormulaFactory& f, FormulaId phi,
                                        const std::vector<std::string>& alphabet) {
    if (!all_intervals_bounded_nonpunctual(f, phi))
        throw std::invalid_argument("formula is not in the bounded fragment");

    BoundedCompilation out;
    out.nf = to_normal_form(f, phi, alphabet);
    NormalForm& nf = out.nf;
    out.closure_set = closure(nf, nf.top, 0);
    const ClosureSet& cl = out.closure_set;

    BoundedClockPlan& plan = out.plan;
    plan.zero_clock = 0;
    std::uint32_t next = 1;
    for (const ClosureItem& it : cl.items) {
        plan.clocks[it] = {next, next + 1};
        next += 2;
    }

    std::vector<Po2dta> parts;

    // reset pass: every first-occurrence clock starts as the final stamp
    {
        Po2dta init;
        init.alphabet = nf.alphabet;
        install_bounded_clocks(init, cl);
        std::uint32_t s = init.add_state("init", StateDir::Fwd);
        std::uint32_t t = init.add_state("tinit", StateDir::Terminal);
        std::uint32_t r = init.add_state("rinit", StateDir::Terminal);
        init.start = s;
        init.accept = t;
        init.reject = r;
        std::vector<std::uint32_t> x_clocks;
        for (const ClosureItem& it : cl.items) x_clocks.push_back(plan.clocks[it].first);
        init.add_transition(s, kEndMarker, Guard{}, std::move(x_clocks), t);
        parts.push_back(std::move(init));
    }

    for (const ClosureItem& it : cl.items) parts.push_back(build_unit_pass(nf, it, plan));

    // final check: top-level disjunction at the stamp-0 cell (decidable from
    // the sub-item clocks; avoids the first-occurrence default ambiguity on
    // single-letter words)
    {
        Po2dta fin;
        fin.alphabet = nf.alphabet;
        install_bounded_clocks(fin, cl);
        std::uint32_t rew = fin.add_state("finrew", StateDir::Bwd);
        std::uint32_t fwd = fin.add_state("fincheck", StateDir::Fwd);
        std::uint32_t t = fin.add_state("t", StateDir::Terminal);
        std::uint32_t r = fin.add_state("r", StateDir::Terminal);
        fin.start = rew;
        fin.accept = t;
        fin.reject = r;
        fin.add_transition(rew, kBeginMarker, Guard{}, {}, fwd);
        DiffSet at_zero = DiffSet::from_atom(plan.zero_clock, DiffInterval::at_most(0, false));
        for (const auto& [letter, b] : nf.nodes[nf.top].disjuncts) {
            DiffSet ds = bounded_letter_guard(nf, b, 0, plan).set_and(at_zero);
            for (Guard& g : emit_diffset(ds)) fin.add_transition(fwd, letter, std::move(g), {}, t);
        }
        fin.add_transition(fwd, kEndMarker, Guard{}, {}, r);
        parts.push_back(std::move(fin));
    }

    Po2dta composed = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        composed = sequential_compose(composed, parts[i]);
    out.automaton = std::move(composed);

    auto report = validate(out.automaton);
    if (!report.empty())
        throw std::logic_error("compiled automaton failed validation: " + report.front());
    return out;
}

}  // namespace umitl
