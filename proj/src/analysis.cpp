// ============================================================================
// analysis.cpp — Bounded witness search and sampled equivalence
// ============================================================================

#include "umitl/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "umitl/bounded_compile.hpp"
#include "umitl/lb_compile.hpp"
#include "umitl/oracle.hpp"

#include <json.hpp>

namespace umitl {

std::string SearchBounds::to_string() const {
    return "N=" + std::to_string(max_len) + ", g=" + std::to_string(grid_denominator) +
           ", Tmax=" + horizon.to_string();
}

SearchBounds default_bounds(const Po2dta& a) {
    SearchBounds b;
    b.max_len = 2 * a.progress_edge_count() + 2;
    b.grid_denominator = static_cast<std::int64_t>(b.max_len) + 1;
    b.horizon = Rational((a.max_guard_constant() + 1) *
                         static_cast<std::int64_t>(b.max_len));
    return b;
}

// --- witness search ------------------------------------------------------------

namespace {
std::vector<Rational> grid_stamps(std::int64_t g, const Rational& horizon) {
    std::vector<Rational> out;
    for (std::int64_t k = 0;; ++k) {
        Rational v(k, g);
        if (v > horizon) break;
        out.push_back(v);
    }
    return out;
}
}  // namespace

SatVerdict witness_search(const Po2dta& a, const std::vector<std::string>& alphabet,
                          const SearchBounds& bounds) {
    auto t0 = std::chrono::steady_clock::now();
    SatVerdict verdict;
    verdict.bounds = bounds;

    std::vector<std::string> letters = alphabet;
    std::sort(letters.begin(), letters.end());
    std::vector<Rational> stamps = grid_stamps(bounds.grid_denominator, bounds.horizon);

    std::vector<std::string> ev;
    std::vector<Rational> st;

    // shortlex: shorter words first, then positionwise by (letter, stamp)
    std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t pos,
                                                               std::size_t target_len) -> bool {
        if (pos == target_len) {
            TimedWord w(ev, st);
            ++verdict.stats.words_checked;
            RunResult res = run(a, w, initial_valuation(a), 1, true);
            if (res.verdict == Verdict::Accept) {
                verdict.satisfiable = true;
                verdict.witness = w;
                verdict.witness_run = std::move(res);
                return true;
            }
            return false;
        }
        for (const std::string& letter : letters) {
            for (const Rational& s : stamps) {
                if (pos == 0 && !(s == Rational(0))) break;  // tau_1 = 0
                if (pos > 0 && !(st.back() < s)) continue;
                ev.push_back(letter);
                st.push_back(s);
                bool prune = false;
                if (pos + 1 < target_len) {
                    // cut the branch once the run rejects on the known prefix
                    TimedWord p(ev, st);
                    prune = run_on_prefix(a, p) == PrefixOutcome::Reject;
                }
                if (!prune && extend(pos + 1, target_len)) return true;
                ev.pop_back();
                st.pop_back();
            }
        }
        return false;
    };

    for (std::size_t len = 1; len <= bounds.max_len; ++len) {
        if (extend(0, len)) break;
    }
    verdict.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

SatVerdict is_satisfiable(const FormulaFactory& f, FormulaId phi,
                          const std::vector<std::string>& alphabet,
                          const std::optional<SearchBounds>& bounds) {
    Po2dta a;
    if (all_intervals_lower_bound(f, phi))
        a = compile_lb(f, phi, alphabet);
    else if (all_intervals_bounded_nonpunctual(f, phi))
        a = compile_bounded(f, phi, alphabet);
    else
        throw std::invalid_argument(
            "satisfiability needs the lower-bound or the bounded fragment; got " +
            classify_fragment(f, phi).to_string());

    SatVerdict v = witness_search(a, alphabet, bounds.value_or(default_bounds(a)));
    if (v.satisfiable) {
        // the witness must satisfy the source formula, not just the automaton
        if (!language_member(f, *v.witness, phi))
            throw std::logic_error("witness fails the brute-force semantics: " +
                                   v.witness->to_string());
    }
    return v;
}

// --- equivalence -----------------------------------------------------------------

EquivSide EquivSide::of_automaton(const Po2dta& a) {
    EquivSide s;
    s.kind = Kind::Automaton;
    s.automaton = &a;
    return s;
}

EquivSide EquivSide::of_formula(const FormulaFactory& f, FormulaId id, bool extended) {
    EquivSide s;
    s.kind = extended ? Kind::FormulaExtended : Kind::FormulaPlain;
    s.factory = &f;
    s.formula = id;
    return s;
}

bool EquivSide::decide(const TimedWord& w) const {
    switch (kind) {
        case Kind::Automaton: return accepts(*automaton, w);
        case Kind::FormulaPlain: return language_member(*factory, w, formula);
        case Kind::FormulaExtended: return holds_at(*factory, w.extended(), 1, formula);
    }
    throw std::logic_error("unreachable");
}

namespace {
void side_constants(const EquivSide& s, std::set<std::int64_t>& out) {
    if (s.kind == EquivSide::Kind::Automaton) {
        for (const Transition& t : s.automaton->transitions)
            for (const GuardAtom& a : t.guard.atoms) out.insert(a.constant);
        return;
    }
    std::function<void(FormulaId)> walk = [&](FormulaId id) {
        const FormulaNode& n = s.factory->node(id);
        switch (n.kind) {
            case FormulaKind::F:
            case FormulaKind::P:
                out.insert(n.interval.lower);
                if (n.interval.upper) out.insert(*n.interval.upper);
                walk(n.child0);
                break;
            case FormulaKind::Not: walk(n.child0); break;
            case FormulaKind::And:
            case FormulaKind::Or:
                walk(n.child0);
                walk(n.child1);
                break;
            default: break;
        }
    };
    walk(s.formula);
}
}  // namespace

EquivReport sampled_equivalence(const EquivSide& lhs, const EquivSide& rhs,
                                const std::vector<std::string>& alphabet,
                                const EquivConfig& cfg) {
    EquivReport report;

    // candidate stamps: the grid plus +-1/g around every constant of either side
    std::set<Rational> stamp_set;
    for (const Rational& r : grid_stamps(cfg.grid_denominator, cfg.horizon)) stamp_set.insert(r);
    std::set<std::int64_t> consts;
    side_constants(lhs, consts);
    side_constants(rhs, consts);
    Rational eps(1, cfg.grid_denominator);
    for (std::int64_t c : consts) {
        for (Rational v : {Rational(c) - eps, Rational(c), Rational(c) + eps})
            if (!(v < Rational(0)) && v <= cfg.horizon) stamp_set.insert(v);
    }
    std::vector<Rational> stamps(stamp_set.begin(), stamp_set.end());

    std::vector<std::string> letters = alphabet;
    std::sort(letters.begin(), letters.end());

    auto check = [&](const TimedWord& w) -> bool {
        ++report.words_checked;
        bool l = lhs.decide(w), r = rhs.decide(w);
        if (l != r) {
            report.equivalent = false;
            report.counterexample = w;
            report.lhs_value = l;
            report.rhs_value = r;
            return false;
        }
        return true;
    };

    // exhaust when the space is small enough, otherwise sample
    double space = 0;
    {
        double per_len = 1;
        for (std::size_t len = 1; len <= cfg.max_len; ++len) {
            per_len *= static_cast<double>(letters.size()) * static_cast<double>(stamps.size());
            space += per_len;
        }
    }
    if (space <= static_cast<double>(cfg.samples) * 4) {
        std::vector<std::string> ev;
        std::vector<Rational> st;
        std::function<bool(std::size_t)> rec = [&](std::size_t len) -> bool {
            if (!ev.empty()) {
                if (!check(TimedWord(ev, st))) return false;
            }
            if (len == cfg.max_len) return true;
            for (const std::string& a : letters) {
                for (const Rational& s : stamps) {
                    if (ev.empty() && !(s == Rational(0))) break;
                    if (!ev.empty() && !(st.back() < s)) continue;
                    ev.push_back(a);
                    st.push_back(s);
                    bool go_on = rec(len + 1);
                    ev.pop_back();
                    st.pop_back();
                    if (!go_on) return false;
                }
            }
            return true;
        };
        rec(0);
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t k = 0; k < cfg.samples; ++k) {
            std::uniform_int_distribution<std::size_t> len_d(1, cfg.max_len);
            std::size_t len = len_d(rng);
            std::vector<std::size_t> idx(stamps.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            // choose len increasing stamps starting at 0 (stamps[0] == 0)
            if (stamps.empty() || !(stamps[0] == Rational(0))) break;
            std::vector<std::size_t> chosen{0};
            std::set<std::size_t> pool;
            for (std::size_t i = 1; i < stamps.size(); ++i) pool.insert(i);
            if (pool.size() + 1 < len) continue;
            while (chosen.size() < len) {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                auto it = pool.begin();
                std::advance(it, pick(rng));
                chosen.push_back(*it);
                pool.erase(it);
            }
            std::sort(chosen.begin(), chosen.end());
            std::vector<std::string> ev;
            std::vector<Rational> st;
            std::uniform_int_distribution<std::size_t> letter_d(0, letters.size() - 1);
            for (std::size_t i : chosen) {
                ev.push_back(letters[letter_d(rng)]);
                st.push_back(stamps[i]);
            }
            if (!check(TimedWord(ev, st))) break;
        }
    }
    return report;
}

// --- serialization -----------------------------------------------------------------

std::string SatVerdict::to_json() const {
    nlohmann::json j;
    j["verdict"] = satisfiable ? "SAT" : "UNSAT-within-bounds";
    if (witness) j["witness"] = witness->to_string();
    j["bounds"]["N"] = bounds.max_len;
    j["bounds"]["g"] = bounds.grid_denominator;
    j["bounds"]["Tmax"] = bounds.horizon.to_string();
    j["statistics"]["words_checked"] = stats.words_checked;
    j["statistics"]["time"] = stats.seconds;
    return j.dump(2);
}

std::string SatVerdict::to_text() const {
    std::ostringstream oss;
    if (satisfiable)
        oss << "SAT  witness: " << witness->to_string();
    else
        oss << "UNSAT-within-bounds (" << bounds.to_string() << ")";
    oss << "  [" << stats.words_checked << " words, " << stats.seconds << "s]";
    return oss.str();
}

std::string EquivReport::to_json() const {
    nlohmann::json j;
    j["equivalent"] = equivalent;
    j["words_checked"] = words_checked;
    if (counterexample) {
        j["counterexample"] = counterexample->to_string();
        j["lhs"] = lhs_value;
        j["rhs"] = rhs_value;
    }
    return j.dump(2);
}

std::string EquivReport::to_text() const {
    std::ostringstream oss;
    if (equivalent)
        oss << "equivalent on " << words_checked << " sampled words";
    else
        oss << "counterexample: " << counterexample->to_string() << "  (lhs=" << lhs_value
            << ", rhs=" << rhs_value << ")";
    return oss.str();
}

SizeReport size_report(const FormulaFactory& f, FormulaId phi,
                       const std::vector<std::string>& alphabet) {
    SizeReport r;
    r.formula_size = modal_dag_size(f, phi);
    r.fragment = classify_fragment(f, phi).to_string();
    if (all_intervals_lower_bound(f, phi)) {
        LbCompilation c = compile_lb_full(f, phi, alphabet);
        r.lb_states = c.automaton.states.size();
        r.lb_clocks = c.automaton.clocks.size();
        r.lb_edges = c.automaton.transitions.size();
    }
    if (all_intervals_bounded_nonpunctual(f, phi)) {
        BoundedCompilation c = compile_bounded_full(f, phi, alphabet);
        r.bounded_states = c.automaton.states.size();
        r.bounded_clocks = c.automaton.clocks.size();
        r.bounded_edges = c.automaton.transitions.size();
        r.closure_items = c.closure_set.items.size();
    }
    return r;
}

std::string SizeReport::to_json() const {
    nlohmann::json j;
    j["formula"]["modal_nodes"] = formula_size.modal_nodes;
    j["formula"]["constant_bits"] = formula_size.constant_bits;
    j["formula"]["modal_dag_size"] = formula_size.total;
    j["fragment"] = fragment;
    if (lb_states) {
        j["lower_bound"]["states"] = *lb_states;
        j["lower_bound"]["clocks"] = *lb_clocks;
        j["lower_bound"]["transitions"] = *lb_edges;
    }
    if (bounded_states) {
        j["bounded"]["states"] = *bounded_states;
        j["bounded"]["clocks"] = *bounded_clocks;
        j["bounded"]["transitions"] = *bounded_edges;
        j["bounded"]["closure_items"] = *closure_items;
    }
    return j.dump(2);
}

}  // namespace umitl
