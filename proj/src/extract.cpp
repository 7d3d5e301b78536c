// ============================================================================
// extract.cpp — Language formulas from po2DTA runs
// ============================================================================
//
// Enable(path) holds exactly where the path's last progress edge fires; the
// untimed step modalities inside it are positional ([0,inf) works across the
// stamp ties at the word ends).  Guard satisfaction is rephrased through the
// position where each clock was last reset; the boundary cases (evaluating at
// the reset position itself, or at a marker cell tied to it) use an explicit
// at-or-after / at-or-before disjunct so the formula matches the run engine
// exactly.
//
// ============================================================================

#include "umitl/extract.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace umitl {

std::vector<ProgressPath> accepting_paths(const Po2dta& a) {
    std::vector<std::vector<std::size_t>> edges(a.states.size());
    for (std::size_t t = 0; t < a.transitions.size(); ++t)
        edges[a.transitions[t].from].push_back(t);

    std::vector<ProgressPath> out;
    ProgressPath cur;
    std::function<void(std::uint32_t)> dfs = [&](std::uint32_t q) {
        if (q == a.accept) {
            out.push_back(cur);
            return;
        }
        for (std::size_t t : edges[q]) {
            cur.push_back(t);
            dfs(a.transitions[t].to);
            cur.pop_back();
        }
    };
    dfs(a.start);
    return out;
}

ProgressPath pref(const Po2dta& a, const ProgressPath& path, std::uint32_t clock) {
    for (std::size_t i = path.size(); i > 0; --i) {
        const Transition& t = a.transitions.at(path[i - 1]);
        for (std::uint32_t c : t.resets)
            if (c == clock) return ProgressPath(path.begin(), path.begin() + i);
    }
    return {};
}

namespace {

Interval untimed() { return lower_bound_iv(0, false); }  // [0,inf)

struct Extractor {
    FormulaFactory& f;
    const Po2dta& a;
    std::map<ProgressPath, FormulaId> memo;

    FormulaId here_or_after(FormulaId anchor) {
        return f.disj(anchor, f.previously(untimed(), anchor));
    }
    FormulaId here_or_before(FormulaId anchor) {
        return f.disj(anchor, f.eventually(untimed(), anchor));
    }

    FormulaId gsat_atom(const ProgressPath& path, const GuardAtom& atom) {
        FormulaId anchor = enable(pref(a, path, atom.clock));
        std::int64_t c = atom.constant;
        bool tmx = atom.t_minus_clock;
        auto within = [&](std::int64_t l, bool open) {
            Interval iv = lower_bound_iv(l, open);
            return tmx ? f.previously(iv, anchor) : f.eventually(iv, anchor);
        };
        switch (atom.rel) {
            case Rel::Gt: return within(c, true);
            case Rel::Ge:
                if (c == 0) return tmx ? here_or_after(anchor) : here_or_before(anchor);
                return within(c, false);
            case Rel::Lt:
                if (c == 0) return f.falsity();  // difference is implicitly >= 0
                return f.conj(tmx ? here_or_after(anchor) : here_or_before(anchor),
                              f.negation(within(c, false)));
            case Rel::Le:
                return f.conj(tmx ? here_or_after(anchor) : here_or_before(anchor),
                              f.negation(within(c, true)));
            case Rel::Eq:
                if (c == 0)
                    return f.conj(tmx ? here_or_after(anchor) : here_or_before(anchor),
                                  f.negation(within(0, true)));
                return f.conj(within(c, false), f.negation(within(c, true)));
        }
        throw std::logic_error("unreachable");
    }

    FormulaId gsat(const ProgressPath& path, const Guard& g) {
        FormulaId acc = f.truth();
        for (const GuardAtom& atom : g.atoms) acc = f.conj(acc, gsat_atom(path, atom));
        return acc;
    }

    FormulaId enable(const ProgressPath& path) {
        auto it = memo.find(path);
        if (it != memo.end()) return it->second;
        FormulaId result;
        if (path.empty()) {
            // no strictly earlier stamp: the begin marker, plus the first
            // letter when it shares stamp 0
            result = f.negation(f.previously(lower_bound_iv(0, true), f.truth()));
        } else {
            ProgressPath head(path.begin(), path.end() - 1);
            const Transition& e = a.transitions.at(path.back());
            bool fwd = a.states[e.from].dir == StateDir::Fwd;
            bool first_edge = head.empty();
            FormulaId prev = enable(head);

            // after (resp. before) the position where the previous edge fired;
            // the run starts at the first letter, which for a backward start
            // state is itself a candidate firing cell
            FormulaId side;
            if (fwd)
                side = f.previously(untimed(), prev);
            else
                side = first_edge ? here_or_before(prev) : f.eventually(untimed(), prev);

            // no transition of the looping state may be enabled strictly
            // between that position and here
            std::vector<FormulaId> blockers;
            for (std::size_t t = 0; t < a.transitions.size(); ++t) {
                const Transition& tr = a.transitions[t];
                if (tr.from != e.from) continue;
                FormulaId fires = f.conj(f.atom(tr.letter), gsat(head, tr.guard));
                FormulaId between;
                if (fwd)
                    between = f.previously(untimed(),
                                           f.conj(fires, f.previously(untimed(), prev)));
                else if (first_edge)
                    between = f.eventually(untimed(), f.conj(fires, here_or_before(prev)));
                else
                    between = f.eventually(untimed(),
                                           f.conj(fires, f.eventually(untimed(), prev)));
                blockers.push_back(between);
            }

            FormulaId fire_here = f.conj(f.atom(e.letter), gsat(head, e.guard));
            result = f.conj(fire_here, f.conj(side, f.negation(f.disj_all(blockers))));
        }
        memo.emplace(path, result);
        return result;
    }
};

}  // namespace

FormulaId enable_formula(FormulaFactory& f, const Po2dta& a, const ProgressPath& path) {
    Extractor ex{f, a, {}};
    return ex.enable(path);
}

FormulaId gsat(FormulaFactory& f, const Po2dta& a, const ProgressPath& path, const Guard& g) {
    Extractor ex{f, a, {}};
    return ex.gsat(path, g);
}

FormulaId extract_formula(FormulaFactory& f, const Po2dta& a) {
    Extractor ex{f, a, {}};
    std::vector<FormulaId> parts;
    for (const ProgressPath& p : accepting_paths(a)) {
        FormulaId en = ex.enable(p);
        parts.push_back(f.disj(en, f.eventually(untimed(), en)));
    }
    return f.disj_all(parts);
}

}  // namespace umitl
