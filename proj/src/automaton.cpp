// ============================================================================
// automaton.cpp — po2DTA model, validator, two-way run engine, composition
// ============================================================================

#include "umitl/automaton.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "umitl/guard_algebra.hpp"

#include <json.hpp>

namespace umitl {

// --- guards -------------------------------------------------------------------

std::string rel_to_string(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Gt: return ">";
        case Rel::Ge: return ">=";
        case Rel::Eq: return "=";
    }
    return "?";
}

namespace {
bool rel_holds(const Rational& v, Rel r, std::int64_t c) {
    Rational rc(c);
    switch (r) {
        case Rel::Lt: return v < rc;
        case Rel::Le: return v <= rc;
        case Rel::Gt: return v > rc;
        case Rel::Ge: return v >= rc;
        case Rel::Eq: return v == rc;
    }
    return false;
}
}  // namespace

bool guard_holds(const ClockValuation& nu, const Rational& now, const Guard& g) {
    for (const GuardAtom& a : g.atoms) {
        if (a.clock >= nu.size()) throw std::out_of_range("guard references unknown clock");
        Rational diff = a.t_minus_clock ? now - nu[a.clock] : nu[a.clock] - now;
        // implicit side condition: the selected difference is non-negative
        if (diff < Rational(0)) return false;
        if (!rel_holds(diff, a.rel, a.constant)) return false;
    }
    return true;
}

bool guards_disjoint(const Guard& g1, const Guard& g2) {
    Guard both;
    both.atoms = g1.atoms;
    both.atoms.insert(both.atoms.end(), g2.atoms.begin(), g2.atoms.end());
    DiffSet s = guard_to_diffset(both);
    return s.is_false();
}

std::string guard_to_string(const Guard& g, const std::vector<std::string>& clock_names) {
    if (g.is_true()) return "true";
    std::ostringstream oss;
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        if (i > 0) oss << " & ";
        const GuardAtom& a = g.atoms[i];
        const std::string& x = clock_names.at(a.clock);
        if (a.t_minus_clock)
            oss << "T-" << x;
        else
            oss << x << "-T";
        oss << ' ' << rel_to_string(a.rel) << ' ' << a.constant;
    }
    return oss.str();
}

Guard parse_guard(const std::string& text, const std::vector<std::string>& clock_names) {
    auto clock_of = [&](const std::string& name) -> std::uint32_t {
        for (std::uint32_t i = 0; i < clock_names.size(); ++i)
            if (clock_names[i] == name) return i;
        throw std::invalid_argument("unknown clock in guard: " + name);
    };
    Guard g;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "true") return g;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        std::size_t amp = trimmed.find('&', pos);
        std::string part = trimmed.substr(pos, amp == std::string::npos ? amp : amp - pos);
        pos = amp == std::string::npos ? trimmed.size() : amp + 1;
        std::size_t rel_at = part.find_first_of("<>=");
        if (rel_at == std::string::npos) throw std::invalid_argument("bad guard atom: " + part);
        std::string lhs = part.substr(0, rel_at);
        Rel rel;
        std::size_t rel_len = 1;
        if (part[rel_at] == '<')
            rel = (rel_at + 1 < part.size() && part[rel_at + 1] == '=') ? (rel_len = 2, Rel::Le)
                                                                        : Rel::Lt;
        else if (part[rel_at] == '>')
            rel = (rel_at + 1 < part.size() && part[rel_at + 1] == '=') ? (rel_len = 2, Rel::Ge)
                                                                        : Rel::Gt;
        else
            rel = Rel::Eq;
        std::int64_t c = std::stoll(part.substr(rel_at + rel_len));
        GuardAtom atom;
        atom.rel = rel;
        atom.constant = c;
        if (lhs.rfind("T-", 0) == 0) {
            atom.t_minus_clock = true;
            atom.clock = clock_of(lhs.substr(2));
        } else {
            auto dash = lhs.rfind("-T");
            if (dash == std::string::npos || dash + 2 != lhs.size())
                throw std::invalid_argument("bad guard atom: " + part);
            atom.t_minus_clock = false;
            atom.clock = clock_of(lhs.substr(0, dash));
        }
        g.atoms.push_back(atom);
    }
    return g;
}

// --- construction helpers -------------------------------------------------------

std::uint32_t Po2dta::add_state(const std::string& name, StateDir dir) {
    states.push_back({name, dir});
    return static_cast<std::uint32_t>(states.size() - 1);
}

std::uint32_t Po2dta::add_clock(const std::string& name) {
    clocks.push_back(name);
    return static_cast<std::uint32_t>(clocks.size() - 1);
}

std::uint32_t Po2dta::clock_id(const std::string& name) const {
    for (std::uint32_t i = 0; i < clocks.size(); ++i)
        if (clocks[i] == name) return i;
    throw std::invalid_argument("unknown clock: " + name);
}

void Po2dta::add_transition(std::uint32_t from, std::string letter, Guard g,
                            std::vector<std::uint32_t> resets, std::uint32_t to) {
    transitions.push_back({from, std::move(letter), std::move(g), std::move(resets), to});
}

std::int64_t Po2dta::max_guard_constant() const {
    std::int64_t m = 0;
    for (const Transition& t : transitions)
        for (const GuardAtom& a : t.guard.atoms) m = std::max(m, a.constant);
    return m;
}

// --- validation -----------------------------------------------------------------

std::vector<std::string> validate(const Po2dta& a) {
    std::vector<std::string> bad;
    auto name = [&](std::uint32_t q) { return a.states.at(q).name; };
    std::size_t n = a.states.size();
    if (a.start >= n || a.accept >= n || a.reject >= n) {
        bad.push_back("start/accept/reject out of range");
        return bad;
    }
    if (a.accept == a.reject || a.start == a.accept || a.start == a.reject)
        bad.push_back("start, accept and reject must be distinct states");
    if (a.states[a.accept].dir != StateDir::Terminal ||
        a.states[a.reject].dir != StateDir::Terminal)
        bad.push_back("accept and reject must be terminal states");
    for (std::uint32_t q = 0; q < n; ++q) {
        if (q != a.accept && q != a.reject && a.states[q].dir == StateDir::Terminal)
            bad.push_back("non-terminal state " + name(q) + " tagged terminal");
    }

    std::vector<std::vector<std::size_t>> out_edges(n);
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t t = 0; t < a.transitions.size(); ++t) {
        const Transition& tr = a.transitions[t];
        if (tr.from >= n || tr.to >= n) {
            bad.push_back("transition with out-of-range state");
            continue;
        }
        if (tr.from == a.accept || tr.from == a.reject)
            bad.push_back("terminal state " + name(tr.from) + " has an outgoing transition");
        if (tr.to == a.start)
            bad.push_back("start state " + name(a.start) + " has an incoming transition");
        if (tr.from == tr.to)
            bad.push_back("progress self-loop at state " + name(tr.from));
        for (std::uint32_t c : tr.resets)
            if (c >= a.clocks.size()) bad.push_back("transition resets unknown clock");
        out_edges[tr.from].push_back(t);
        ++in_degree[tr.to];

        // marker transitions must move away from the marker (or stop)
        if (tr.letter == kEndMarker && tr.to != a.accept && tr.to != a.reject &&
            a.states[tr.to].dir != StateDir::Bwd)
            bad.push_back("transition on the end marker from " + name(tr.from) +
                          " enters a forward state");
        if (tr.letter == kBeginMarker && tr.to != a.accept && tr.to != a.reject &&
            a.states[tr.to].dir != StateDir::Fwd)
            bad.push_back("transition on the begin marker from " + name(tr.from) +
                          " enters a backward state");
    }

    // acyclicity of the progress graph = existence of the strict partial order
    {
        std::vector<int> mark(n, 0);  // 0 unvisited, 1 on stack, 2 done
        bool cyclic = false;
        std::function<void(std::uint32_t)> dfs = [&](std::uint32_t q) {
            mark[q] = 1;
            for (std::size_t t : out_edges[q]) {
                std::uint32_t v = a.transitions[t].to;
                if (mark[v] == 1) cyclic = true;
                else if (mark[v] == 0) dfs(v);
            }
            mark[q] = 2;
        };
        for (std::uint32_t q = 0; q < n && !cyclic; ++q)
            if (mark[q] == 0) dfs(q);
        if (cyclic) bad.push_back("progress transitions do not descend a partial order");
    }

    for (std::uint32_t q = 0; q < n; ++q) {
        if (q == a.accept || q == a.reject) continue;
        if (q != a.start && in_degree[q] == 0)
            bad.push_back("state " + name(q) + " is unreachable from the start state");
        if (out_edges[q].empty())
            bad.push_back("non-terminal state " + name(q) + " has no outgoing transition");
        // fall-off protection: a forward scanner must be able to leave the end
        // marker, a backward scanner the begin marker
        bool has_end = false, has_begin = false;
        for (std::size_t t : out_edges[q]) {
            if (a.transitions[t].letter == kEndMarker) has_end = true;
            if (a.transitions[t].letter == kBeginMarker) has_begin = true;
        }
        if (a.states[q].dir == StateDir::Fwd && !has_end)
            bad.push_back("forward state " + name(q) + " has no end-marker transition");
        if (a.states[q].dir == StateDir::Bwd && !has_begin)
            bad.push_back("backward state " + name(q) + " has no begin-marker transition");

        // determinism: per letter, guards pairwise disjoint
        for (std::size_t i = 0; i < out_edges[q].size(); ++i) {
            for (std::size_t j = i + 1; j < out_edges[q].size(); ++j) {
                const Transition& t1 = a.transitions[out_edges[q][i]];
                const Transition& t2 = a.transitions[out_edges[q][j]];
                if (t1.letter != t2.letter) continue;
                if (!guards_disjoint(t1.guard, t2.guard))
                    bad.push_back("overlapping guards on (" + name(q) + ", " + t1.letter + ")");
            }
        }
    }
    return bad;
}

// --- run engine -------------------------------------------------------------------

ClockValuation initial_valuation(const Po2dta& a) {
    return ClockValuation(a.clocks.size(), Rational(0));
}

namespace {
struct Cell {
    const std::string* letter;
    Rational stamp;
};

// Extended-word cell at head index 0..n+1.
Cell cell_at(const TimedWord& w, std::int64_t head) {
    if (head == 0) return {&kBeginMarker, Rational(0)};
    if (head == static_cast<std::int64_t>(w.size()) + 1)
        return {&kEndMarker, w.empty() ? Rational(0) : w.stamp(w.size())};
    return {&w.event(static_cast<std::size_t>(head)), w.stamp(static_cast<std::size_t>(head))};
}
}  // namespace

RunResult run(const Po2dta& a, const TimedWord& w, const ClockValuation& nu0,
              std::int64_t k, bool keep_trace) {
    if (nu0.size() != a.clocks.size()) throw std::invalid_argument("valuation size mismatch");
    std::int64_t n = static_cast<std::int64_t>(w.size());
    if (k < 0 || k > n + 1) throw std::out_of_range("start head position out of range");

    // transitions grouped per state
    std::vector<std::vector<std::size_t>> edges(a.states.size());
    for (std::size_t t = 0; t < a.transitions.size(); ++t)
        edges[a.transitions[t].from].push_back(t);

    RunResult res;
    res.valuation = nu0;
    std::uint32_t q = a.start;
    std::int64_t head = k;
    // progress fires at most once per state on the order chain; self-loop
    // segments are bounded by the word length
    std::uint64_t step_cap = (a.states.size() + 2) * static_cast<std::uint64_t>(n + 3) + 16;

    for (std::uint64_t step = 0;; ++step) {
        if (step > step_cap) throw std::logic_error("run exceeded its termination bound");
        if (keep_trace) res.trace.push_back({q, head, std::nullopt});
        if (q == a.accept || q == a.reject) {
            res.verdict = q == a.accept ? Verdict::Accept : Verdict::Reject;
            res.head = head;
            return res;
        }
        if (head < 0 || head > n + 1) {
            res.verdict = Verdict::FellOff;
            res.head = head;
            return res;
        }
        Cell c = cell_at(w, head);
        std::optional<std::size_t> fired;
        for (std::size_t t : edges[q]) {
            const Transition& tr = a.transitions[t];
            if (tr.letter != *c.letter) continue;
            if (!guard_holds(res.valuation, c.stamp, tr.guard)) continue;
            if (fired) throw std::logic_error("two progress transitions enabled at once");
            fired = t;
        }
        if (fired) {
            const Transition& tr = a.transitions[*fired];
            if (keep_trace) res.trace.back().fired = fired;
            for (std::uint32_t x : tr.resets) res.valuation[x] = c.stamp;
            q = tr.to;
            if (q == a.accept || q == a.reject) {
                // terminal: head stays put
            } else if (a.states[q].dir == StateDir::Fwd) {
                ++head;
            } else {
                --head;
            }
        } else {
            head += a.states[q].dir == StateDir::Fwd ? 1 : -1;
        }
    }
}

PrefixOutcome run_on_prefix(const Po2dta& a, const TimedWord& prefix) {
    // Same engine, but the cell at index size()+1 (and beyond) is unknown:
    // reaching it means the verdict depends on the unwritten continuation.
    std::int64_t n = static_cast<std::int64_t>(prefix.size());
    std::vector<std::vector<std::size_t>> edges(a.states.size());
    for (std::size_t t = 0; t < a.transitions.size(); ++t)
        edges[a.transitions[t].from].push_back(t);

    ClockValuation nu = initial_valuation(a);
    std::uint32_t q = a.start;
    std::int64_t head = 1;
    std::uint64_t step_cap = (a.states.size() + 2) * static_cast<std::uint64_t>(n + 3) + 16;
    for (std::uint64_t step = 0;; ++step) {
        if (step > step_cap) throw std::logic_error("run exceeded its termination bound");
        if (q == a.accept) return PrefixOutcome::Accept;
        if (q == a.reject) return PrefixOutcome::Reject;
        if (head > n) return PrefixOutcome::Unknown;  // needs a cell past the prefix
        if (head < 0) return PrefixOutcome::Reject;   // fell off; rejects every completion
        Cell c = head == 0 ? Cell{&kBeginMarker, Rational(0)}
                           : Cell{&prefix.event(static_cast<std::size_t>(head)),
                                  prefix.stamp(static_cast<std::size_t>(head))};
        std::optional<std::size_t> fired;
        for (std::size_t t : edges[q]) {
            const Transition& tr = a.transitions[t];
            if (tr.letter != *c.letter) continue;
            if (!guard_holds(nu, c.stamp, tr.guard)) continue;
            if (fired) throw std::logic_error("two progress transitions enabled at once");
            fired = t;
        }
        if (fired) {
            const Transition& tr = a.transitions[*fired];
            for (std::uint32_t x : tr.resets) nu[x] = c.stamp;
            q = tr.to;
            if (q != a.accept && q != a.reject)
                head += a.states[q].dir == StateDir::Fwd ? 1 : -1;
        } else {
            head += a.states[q].dir == StateDir::Fwd ? 1 : -1;
        }
    }
}

bool accepts(const Po2dta& a, const TimedWord& w) {
    return run(a, w, initial_valuation(a), 1).verdict == Verdict::Accept;
}

// --- composition ------------------------------------------------------------------

Po2dta sequential_compose(const Po2dta& a, const Po2dta& b) {
    Po2dta out;
    out.alphabet = a.alphabet;
    for (const std::string& s : b.alphabet)
        if (std::find(out.alphabet.begin(), out.alphabet.end(), s) == out.alphabet.end())
            out.alphabet.push_back(s);

    // shared clock names keep their values across the seam
    out.clocks = a.clocks;
    auto clock_map_b = std::vector<std::uint32_t>(b.clocks.size());
    for (std::size_t i = 0; i < b.clocks.size(); ++i) {
        auto it = std::find(out.clocks.begin(), out.clocks.end(), b.clocks[i]);
        if (it == out.clocks.end()) {
            out.clocks.push_back(b.clocks[i]);
            clock_map_b[i] = static_cast<std::uint32_t>(out.clocks.size() - 1);
        } else {
            clock_map_b[i] = static_cast<std::uint32_t>(it - out.clocks.begin());
        }
    }

    // b's states first (so a's accept can collapse onto b's start); names are
    // kept as-is unless they clash.
    std::set<std::string> used;
    auto fresh_name = [&used](const std::string& base, const char* prefix) {
        std::string n = base;
        while (used.count(n)) n = prefix + n;
        used.insert(n);
        return n;
    };
    std::vector<std::uint32_t> map_b(b.states.size());
    for (std::uint32_t q = 0; q < b.states.size(); ++q)
        map_b[q] = out.add_state(fresh_name(b.states[q].name, "b."), b.states[q].dir);
    std::vector<std::uint32_t> map_a(a.states.size());
    for (std::uint32_t q = 0; q < a.states.size(); ++q) {
        if (q == a.accept)
            map_a[q] = map_b[b.start];
        else if (q == a.reject)
            map_a[q] = map_b[b.reject];
        else
            map_a[q] = out.add_state(fresh_name(a.states[q].name, "a."), a.states[q].dir);
    }

    auto remap_resets = [](const std::vector<std::uint32_t>& resets,
                           const std::vector<std::uint32_t>* table) {
        std::vector<std::uint32_t> r;
        for (std::uint32_t c : resets) r.push_back(table ? (*table)[c] : c);
        return r;
    };
    auto remap_guard = [](const Guard& g, const std::vector<std::uint32_t>& table) {
        Guard r = g;
        for (GuardAtom& at : r.atoms) at.clock = table[at.clock];
        return r;
    };
    for (const Transition& t : b.transitions)
        out.add_transition(map_b[t.from], t.letter, remap_guard(t.guard, clock_map_b),
                           remap_resets(t.resets, &clock_map_b), map_b[t.to]);
    for (const Transition& t : a.transitions)
        out.add_transition(map_a[t.from], t.letter, t.guard, remap_resets(t.resets, nullptr),
                           map_a[t.to]);

    out.start = map_a[a.start];
    out.accept = map_b[b.accept];
    out.reject = map_b[b.reject];
    return out;
}

Po2dta complement(const Po2dta& a) {
    Po2dta out = a;
    std::swap(out.accept, out.reject);
    return out;
}

// --- fixture -----------------------------------------------------------------------

Po2dta example_automaton() {
    Po2dta a;
    a.alphabet = {"b", "c"};
    std::uint32_t x = a.add_clock("x");
    std::uint32_t s = a.add_state("S", StateDir::Fwd);
    std::uint32_t q = a.add_state("A", StateDir::Bwd);
    std::uint32_t t = a.add_state("t", StateDir::Terminal);
    std::uint32_t r = a.add_state("r", StateDir::Terminal);
    a.start = s;
    a.accept = t;
    a.reject = r;
    // first b whose stamp lies in [1,2] (x is still 0 here), freezing its stamp
    Guard g1;
    g1.atoms.push_back({x, true, Rel::Ge, 1});
    g1.atoms.push_back({x, true, Rel::Le, 2});
    a.add_transition(s, "b", g1, {x}, q);
    a.add_transition(s, kEndMarker, Guard{}, {}, r);  // no such b
    // backward: a c exactly one time unit before the frozen stamp
    Guard g2;
    g2.atoms.push_back({x, false, Rel::Eq, 1});
    a.add_transition(q, "c", g2, {}, t);
    a.add_transition(q, kBeginMarker, Guard{}, {}, r);
    return a;
}

// --- serialization -------------------------------------------------------------------

std::string Po2dta::to_json() const {
    nlohmann::json j;
    // ranks: topological depth from the start along progress edges
    std::vector<std::size_t> rank(states.size(), 0);
    {
        std::vector<std::vector<std::uint32_t>> succ(states.size());
        for (const Transition& t : transitions) succ[t.from].push_back(t.to);
        std::function<void(std::uint32_t)> dfs = [&](std::uint32_t q) {
            for (std::uint32_t v : succ[q]) {
                if (rank[v] < rank[q] + 1) {
                    rank[v] = rank[q] + 1;
                    dfs(v);
                }
            }
        };
        dfs(start);
    }
    for (std::uint32_t q = 0; q < states.size(); ++q) {
        nlohmann::json s;
        s["name"] = states[q].name;
        s["direction"] = states[q].dir == StateDir::Fwd   ? "L"
                         : states[q].dir == StateDir::Bwd ? "R"
                                                          : "T";
        s["order-rank"] = rank[q];
        j["states"].push_back(s);
    }
    j["clocks"] = clocks;
    j["alphabet"] = alphabet;
    j["start"] = states[start].name;
    j["accept"] = states[accept].name;
    j["reject"] = states[reject].name;
    j["transitions"] = nlohmann::json::array();
    for (const Transition& t : transitions) {
        nlohmann::json tr;
        tr["from"] = states[t.from].name;
        tr["letter"] = t.letter;
        tr["guard"] = guard_to_string(t.guard, clocks);
        tr["resets"] = nlohmann::json::array();
        for (std::uint32_t c : t.resets) tr["resets"].push_back(clocks[c]);
        tr["to"] = states[t.to].name;
        j["transitions"].push_back(tr);
    }
    return j.dump(2);
}

Po2dta Po2dta::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Po2dta a;
    std::map<std::string, std::uint32_t> by_name;
    for (const auto& s : j.at("states")) {
        std::string dir = s.at("direction").get<std::string>();
        StateDir d = dir == "L" ? StateDir::Fwd : dir == "R" ? StateDir::Bwd : StateDir::Terminal;
        std::uint32_t id = a.add_state(s.at("name").get<std::string>(), d);
        by_name[a.states[id].name] = id;
    }
    for (const auto& c : j.at("clocks")) a.add_clock(c.get<std::string>());
    if (j.contains("alphabet"))
        for (const auto& s : j.at("alphabet")) a.alphabet.push_back(s.get<std::string>());
    a.start = by_name.at(j.at("start").get<std::string>());
    a.accept = by_name.at(j.at("accept").get<std::string>());
    a.reject = by_name.at(j.at("reject").get<std::string>());
    for (const auto& tr : j.at("transitions")) {
        Guard g = parse_guard(tr.at("guard").get<std::string>(), a.clocks);
        std::vector<std::uint32_t> resets;
        for (const auto& c : tr.at("resets")) resets.push_back(a.clock_id(c.get<std::string>()));
        a.add_transition(by_name.at(tr.at("from").get<std::string>()),
                         tr.at("letter").get<std::string>(), std::move(g), std::move(resets),
                         by_name.at(tr.at("to").get<std::string>()));
    }
    return a;
}

std::string Po2dta::to_dot() const {
    std::ostringstream oss;
    oss << "digraph po2dta {\n  rankdir=LR;\n";
    for (std::uint32_t q = 0; q < states.size(); ++q) {
        const char* shape = (q == accept || q == reject) ? "doublecircle" : "circle";
        std::string tag = states[q].dir == StateDir::Fwd   ? "→"
                          : states[q].dir == StateDir::Bwd ? "←"
                                                           : "";
        oss << "  q" << q << " [shape=" << shape << ", label=\"" << states[q].name;
        if (!tag.empty()) oss << " " << tag;
        oss << "\"];\n";
    }
    for (const Transition& t : transitions) {
        oss << "  q" << t.from << " -> q" << t.to << " [label=\"" << t.letter;
        if (!t.guard.is_true()) oss << ", " << guard_to_string(t.guard, clocks);
        if (!t.resets.empty()) {
            oss << ", {";
            for (std::size_t i = 0; i < t.resets.size(); ++i) {
                if (i) oss << ",";
                oss << clocks[t.resets[i]] << ":=T";
            }
            oss << "}";
        }
        oss << "\"];\n";
    }
    oss << "}\n";
    return oss.str();
}

}  // namespace umitl
