// ============================================================================
// lb_compile.cpp — Lower-bound fragment compiler
// ============================================================================

#include "umitl/lb_compile.hpp"

#include <stdexcept>

namespace umitl {

namespace {
constexpr std::uint32_t kUnusedClock = static_cast<std::uint32_t>(-1);
}

DiffSet lb_condition_set(const ModalAtom& psi, const LbClockPlan& plan) {
    if (!psi.interval.is_lower_bound_shape())
        throw std::invalid_argument("not a lower-bound modality: " + psi.interval.to_string());
    std::int64_t l = psi.interval.lower;
    bool open = psi.interval.lower_open;
    if (psi.is_future) {
        std::uint32_t y = plan.last_clock.at(psi.modarg);
        // time until the last occurrence must exceed l (resp. reach it, while
        // still lying strictly before the occurrence)
        DiffInterval iv = open ? DiffInterval::at_most(-l, true)
                               : DiffInterval::at_most(-l, false).intersect(
                                     DiffInterval::at_most(0, true));
        return DiffSet::from_atom(y, iv);
    }
    std::uint32_t x = plan.first_clock.at(psi.modarg);
    DiffInterval iv = open ? DiffInterval::at_least(l, true)
                           : DiffInterval::at_least(l, false).intersect(
                                 DiffInterval::at_least(0, true));
    return DiffSet::from_atom(x, iv);
}

DiffSet lb_letter_guard(const NormalForm& nf, BExprId b, const LbClockPlan& plan) {
    const BExprNode& n = nf.bexpr(b);
    switch (n.kind) {
        case BKind::True: return DiffSet::all();
        case BKind::False: return DiffSet::none();
        case BKind::Lit: return lb_condition_set(nf.modal_atoms[n.literal], plan);
        case BKind::Not: return lb_letter_guard(nf, n.a, plan).set_not();
        case BKind::And:
            return lb_letter_guard(nf, n.a, plan).set_and(lb_letter_guard(nf, n.b, plan));
        case BKind::Or:
            return lb_letter_guard(nf, n.a, plan).set_or(lb_letter_guard(nf, n.b, plan));
    }
    throw std::logic_error("unreachable");
}

namespace {

// All pass automata share the same clock table so that composition by name
// threads values through unchanged.
void install_clocks(Po2dta& a, const NormalForm& nf, const LbClockPlan& plan) {
    a.add_clock("z0");
    for (std::uint32_t m = 0; m < nf.nodes.size(); ++m) {
        if (plan.last_clock[m] != kUnusedClock) a.add_clock("y" + std::to_string(m));
        if (plan.first_clock[m] != kUnusedClock) a.add_clock("x" + std::to_string(m));
    }
}

std::string uniq(const std::string& base, std::uint32_t k) {
    return base + std::to_string(k);
}

}  // namespace

Po2dta build_lb_modarg_pass(const NormalForm& nf, std::uint32_t modarg, bool future,
                            const LbClockPlan& plan) {
    Po2dta a;
    a.alphabet = nf.alphabet;
    // clock table laid out by the caller's plan
    install_clocks(a, nf, plan);

    std::string tag = (future ? "F" : "P") + std::to_string(modarg);
    std::uint32_t rew = a.add_state("rew" + tag, future ? StateDir::Fwd : StateDir::Bwd);
    std::uint32_t scan = a.add_state("scan" + tag, future ? StateDir::Bwd : StateDir::Fwd);
    std::uint32_t t = a.add_state("t" + tag, StateDir::Terminal);
    std::uint32_t r = a.add_state("r" + tag, StateDir::Terminal);
    a.start = rew;
    a.accept = t;
    a.reject = r;

    std::uint32_t target_clock =
        future ? plan.last_clock.at(modarg) : plan.first_clock.at(modarg);
    if (target_clock == kUnusedClock) throw std::logic_error("modarg has no clock planned");

    // F-type: run to the end marker, scan backward, freeze the last occurrence.
    // P-type: run to the begin marker, scan forward, freeze the first one.
    a.add_transition(rew, future ? kEndMarker : kBeginMarker, Guard{}, {}, scan);
    for (const auto& [letter, b] : nf.nodes[modarg].disjuncts) {
        DiffSet ds = lb_letter_guard(nf, b, plan);
        for (Guard& g : emit_diffset(ds))
            a.add_transition(scan, letter, std::move(g), {target_clock}, t);
    }
    a.add_transition(scan, future ? kBeginMarker : kEndMarker, Guard{}, {}, t);
    return a;
}

LbCompilation compile_lb_full(const FormulaFactory& f, FormulaId phi,
                              const std::vector<std::string>& alphabet) {
    if (!all_intervals_lower_bound(f, phi))
        throw std::invalid_argument("formula is not in the lower-bound fragment");

    LbCompilation out;
    out.nf = to_normal_form(f, phi, alphabet);
    NormalForm& nf = out.nf;

    // clock numbering mirrors install_clocks
    LbClockPlan& plan = out.plan;
    plan.zero_clock = 0;
    plan.last_clock.assign(nf.nodes.size(), kUnusedClock);
    plan.first_clock.assign(nf.nodes.size(), kUnusedClock);
    std::uint32_t next = 1;
    for (std::uint32_t m = 0; m < nf.nodes.size(); ++m) {
        if (nf.nodes[m].used_as_future) plan.last_clock[m] = next++;
        if (nf.nodes[m].used_as_past) plan.first_clock[m] = next++;
    }

    std::vector<Po2dta> parts;

    // initial pass: seed every first-occurrence clock with the final stamp
    std::vector<std::uint32_t> x_clocks;
    for (std::uint32_t m = 0; m < nf.nodes.size(); ++m)
        if (plan.first_clock[m] != kUnusedClock) x_clocks.push_back(plan.first_clock[m]);
    if (!x_clocks.empty()) {
        Po2dta init;
        init.alphabet = nf.alphabet;
        install_clocks(init, nf, plan);
        std::uint32_t s = init.add_state("init", StateDir::Fwd);
        std::uint32_t t = init.add_state("tinit", StateDir::Terminal);
        std::uint32_t r = init.add_state("rinit", StateDir::Terminal);
        init.start = s;
        init.accept = t;
        init.reject = r;
        init.add_transition(s, kEndMarker, Guard{}, x_clocks, t);
        parts.push_back(std::move(init));
    }

    // one pass per modarg, innermost first; a modarg used with both polarities
    // gets both passes (each only reads clocks of strict subformulas)
    for (std::uint32_t m : nf.modarg_order()) {
        if (nf.nodes[m].used_as_past) parts.push_back(build_lb_modarg_pass(nf, m, false, plan));
        if (nf.nodes[m].used_as_future) parts.push_back(build_lb_modarg_pass(nf, m, true, plan));
    }

    // final check: the top-level disjunction at the stamp-0 cell
    {
        Po2dta fin;
        fin.alphabet = nf.alphabet;
        install_clocks(fin, nf, plan);
        std::uint32_t rew = fin.add_state("finrew", StateDir::Bwd);
        std::uint32_t fwd = fin.add_state("fincheck", StateDir::Fwd);
        std::uint32_t t = fin.add_state("t", StateDir::Terminal);
        std::uint32_t r = fin.add_state("r", StateDir::Terminal);
        fin.start = rew;
        fin.accept = t;
        fin.reject = r;
        fin.add_transition(rew, kBeginMarker, Guard{}, {}, fwd);
        DiffSet at_zero =
            DiffSet::from_atom(plan.zero_clock, DiffInterval::at_most(0, false));
        for (const auto& [letter, b] : nf.nodes[nf.top].disjuncts) {
            DiffSet ds = lb_letter_guard(nf, b, plan).set_and(at_zero);
            for (Guard& g : emit_diffset(ds))
                fin.add_transition(fwd, letter, std::move(g), {}, t);
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
