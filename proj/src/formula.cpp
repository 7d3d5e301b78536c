// ============================================================================
// formula.cpp — Interned formula DAG, concrete syntax, fragment classifier
// ============================================================================

#include "umitl/formula.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace umitl {

// --- factory -----------------------------------------------------------------

namespace {
std::string node_key(const FormulaNode& n) {
    std::string k = std::to_string(static_cast<int>(n.kind));
    k += '|';
    k += std::to_string(n.child0);
    k += '|';
    k += std::to_string(n.child1);
    k += '|';
    k += n.atom;
    if (n.kind == FormulaKind::F || n.kind == FormulaKind::P) {
        k += '|';
        k += n.interval.to_string();
    }
    return k;
}
}  // namespace

FormulaId FormulaFactory::intern(FormulaNode n) {
    std::string key = node_key(n);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.emplace(std::move(key), id);
    return id;
}

FormulaId FormulaFactory::atom(const std::string& name) {
    FormulaNode n;
    n.kind = FormulaKind::Atom;
    n.atom = name;
    return intern(std::move(n));
}

FormulaId FormulaFactory::truth() {
    FormulaNode n;
    n.kind = FormulaKind::True;
    return intern(std::move(n));
}

FormulaId FormulaFactory::falsity() {
    FormulaNode n;
    n.kind = FormulaKind::False;
    return intern(std::move(n));
}

FormulaId FormulaFactory::negation(FormulaId a) {
    FormulaNode n;
    n.kind = FormulaKind::Not;
    n.child0 = a;
    return intern(std::move(n));
}

FormulaId FormulaFactory::conj(FormulaId a, FormulaId b) {
    FormulaNode n;
    n.kind = FormulaKind::And;
    n.child0 = a;
    n.child1 = b;
    return intern(std::move(n));
}

FormulaId FormulaFactory::disj(FormulaId a, FormulaId b) {
    FormulaNode n;
    n.kind = FormulaKind::Or;
    n.child0 = a;
    n.child1 = b;
    return intern(std::move(n));
}

FormulaId FormulaFactory::eventually(const Interval& iv, FormulaId a) {
    FormulaNode n;
    n.kind = FormulaKind::F;
    n.child0 = a;
    n.interval = iv;
    return intern(std::move(n));
}

FormulaId FormulaFactory::previously(const Interval& iv, FormulaId a) {
    FormulaNode n;
    n.kind = FormulaKind::P;
    n.child0 = a;
    n.interval = iv;
    return intern(std::move(n));
}

FormulaId FormulaFactory::conj_all(const std::vector<FormulaId>& xs) {
    if (xs.empty()) return truth();
    FormulaId acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = conj(acc, xs[i]);
    return acc;
}

FormulaId FormulaFactory::disj_all(const std::vector<FormulaId>& xs) {
    if (xs.empty()) return falsity();
    FormulaId acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = disj(acc, xs[i]);
    return acc;
}

std::set<std::string> FormulaFactory::atoms_of(FormulaId id) const {
    std::set<std::string> out;
    std::function<void(FormulaId)> walk = [&](FormulaId x) {
        const FormulaNode& n = node(x);
        switch (n.kind) {
            case FormulaKind::Atom: out.insert(n.atom); break;
            case FormulaKind::True:
            case FormulaKind::False: break;
            case FormulaKind::Not:
            case FormulaKind::F:
            case FormulaKind::P: walk(n.child0); break;
            case FormulaKind::And:
            case FormulaKind::Or:
                walk(n.child0);
                walk(n.child1);
                break;
        }
    };
    walk(id);
    return out;
}

// --- printing ----------------------------------------------------------------
//
// Precedence: '|' < '&' < '!' and modalities.  Modal arguments are always
// bracketed so the output re-parses to the same DAG.

namespace {
void print_rec(const FormulaFactory& f, FormulaId id, int parent_prec, std::string& out) {
    const FormulaNode& n = f.node(id);
    switch (n.kind) {
        case FormulaKind::Atom: out += n.atom; return;
        case FormulaKind::True: out += "true"; return;
        case FormulaKind::False: out += "false"; return;
        case FormulaKind::Not:
            out += '!';
            print_rec(f, n.child0, 3, out);
            return;
        case FormulaKind::And: {
            bool paren = parent_prec > 2;
            if (paren) out += '(';
            print_rec(f, n.child0, 2, out);
            out += " & ";
            print_rec(f, n.child1, 2, out);
            if (paren) out += ')';
            return;
        }
        case FormulaKind::Or: {
            bool paren = parent_prec > 1;
            if (paren) out += '(';
            print_rec(f, n.child0, 1, out);
            out += " | ";
            print_rec(f, n.child1, 1, out);
            if (paren) out += ')';
            return;
        }
        case FormulaKind::F:
        case FormulaKind::P:
            out += n.kind == FormulaKind::F ? 'F' : 'P';
            out += n.interval.to_string();
            out += '[';
            print_rec(f, n.child0, 0, out);
            out += ']';
            return;
    }
}
}  // namespace

std::string FormulaFactory::to_string(FormulaId id) const {
    std::string out;
    print_rec(*this, id, 0, out);
    return out;
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    FormulaFactory& f;
    const std::set<std::string>& alphabet;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("syntax error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return text.substr(start, pos - start);
    }

    Interval interval() {
        skip_ws();
        std::size_t start = pos;
        char lo_c = text[pos];
        if (lo_c != '[' && lo_c != '(') fail("expected interval");
        std::size_t close = text.find_first_of("])", pos + 1);
        if (close == std::string::npos) fail("unterminated interval");
        std::string body = text.substr(start, close - start + 1);
        // strip interior whitespace so Interval::parse sees a compact form
        std::string compact;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        pos = close + 1;
        try {
            return Interval::parse(compact);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    FormulaId expr() {
        FormulaId a = term();
        while (peek() == '|') {
            ++pos;
            a = f.disj(a, term());
        }
        return a;
    }

    FormulaId term() {
        FormulaId a = factor();
        while (peek() == '&') {
            ++pos;
            a = f.conj(a, factor());
        }
        return a;
    }

    FormulaId factor() {
        char c = peek();
        if (c == '!') {
            ++pos;
            return f.negation(factor());
        }
        if (c == '(') {
            ++pos;
            FormulaId a = expr();
            if (!eat(')')) fail("expected ')'");
            return a;
        }
        if (c == '[') {
            ++pos;
            FormulaId a = expr();
            if (!eat(']')) fail("expected ']'");
            return a;
        }
        if (c == '^' || c == '$') {
            ++pos;
            return make_atom(std::string(1, c));
        }
        if (c == '\0') fail("unexpected end of input");
        std::string id = identifier();
        if (id == "true") return f.truth();
        if (id == "false") return f.falsity();
        if ((id == "F" || id == "P")) {
            char nxt = peek();
            if (nxt != '[' && nxt != '(') fail("modality requires an interval");
            Interval iv = interval();
            FormulaId arg = factor();
            return id == "F" ? f.eventually(iv, arg) : f.previously(iv, arg);
        }
        return make_atom(id);
    }

    FormulaId make_atom(const std::string& name) {
        if (!alphabet.empty() && !alphabet.count(name)) fail("unknown atom '" + name + "'");
        return f.atom(name);
    }
};

}  // namespace

FormulaId parse_formula(FormulaFactory& f, const std::string& text,
                        const std::set<std::string>& alphabet) {
    Parser p{text, 0, f, alphabet};
    FormulaId id = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return id;
}

// --- fragment classification ---------------------------------------------------

namespace {
struct IntervalShapes {
    bool any_punctual = false;
    bool all_lower = true;
    bool all_upper = true;
    bool all_bounded = true;
    bool all_one_sided = true;
    bool any_past = false;
    bool any_modal = false;
};

void collect_shapes(const FormulaFactory& f, FormulaId id, IntervalShapes& s,
                    std::set<FormulaId>& seen) {
    if (seen.count(id)) return;
    seen.insert(id);
    const FormulaNode& n = f.node(id);
    switch (n.kind) {
        case FormulaKind::F:
        case FormulaKind::P: {
            s.any_modal = true;
            if (n.kind == FormulaKind::P) s.any_past = true;
            const Interval& iv = n.interval;
            if (iv.is_punctual()) s.any_punctual = true;
            if (!iv.is_lower_bound_shape()) s.all_lower = false;
            if (!iv.is_upper_bound_shape()) s.all_upper = false;
            if (!iv.is_bounded_nonpunctual()) s.all_bounded = false;
            if (!iv.is_lower_bound_shape() && !iv.is_upper_bound_shape())
                s.all_one_sided = false;
            collect_shapes(f, n.child0, s, seen);
            break;
        }
        case FormulaKind::Not: collect_shapes(f, n.child0, s, seen); break;
        case FormulaKind::And:
        case FormulaKind::Or:
            collect_shapes(f, n.child0, s, seen);
            collect_shapes(f, n.child1, s, seen);
            break;
        default: break;
    }
}
}  // namespace

FragmentTag classify_fragment(const FormulaFactory& f, FormulaId id) {
    IntervalShapes s;
    std::set<FormulaId> seen;
    collect_shapes(f, id, s, seen);
    FragmentTag tag;
    tag.future_only = !s.any_past;
    if (s.any_punctual)
        tag.kind = FragmentKind::NonMitl;
    else if (s.all_lower)
        tag.kind = FragmentKind::LowerBound;
    else if (s.all_upper)
        tag.kind = FragmentKind::UpperBound;
    else if (s.all_bounded)
        tag.kind = FragmentKind::Bounded;
    else if (s.all_one_sided)
        tag.kind = FragmentKind::ZeroInf;
    else
        tag.kind = FragmentKind::Full;
    return tag;
}

std::string FragmentTag::to_string() const {
    std::string base;
    switch (kind) {
        case FragmentKind::NonMitl: base = "NonMITL"; break;
        case FragmentKind::LowerBound: base = "LowerBound"; break;
        case FragmentKind::UpperBound: base = "UpperBound"; break;
        case FragmentKind::Bounded: base = "Bounded"; break;
        case FragmentKind::ZeroInf: base = "OneSided"; break;
        case FragmentKind::Full: base = "Full"; break;
    }
    if (future_only && kind != FragmentKind::NonMitl) base += "(future-only)";
    return base;
}

bool all_intervals_lower_bound(const FormulaFactory& f, FormulaId id) {
    IntervalShapes s;
    std::set<FormulaId> seen;
    collect_shapes(f, id, s, seen);
    return !s.any_punctual && s.all_lower;
}

bool all_intervals_bounded_nonpunctual(const FormulaFactory& f, FormulaId id) {
    IntervalShapes s;
    std::set<FormulaId> seen;
    collect_shapes(f, id, s, seen);
    return !s.any_punctual && s.all_bounded;
}

// --- size metrics ---------------------------------------------------------------

namespace {
std::size_t bit_width(std::int64_t c) {
    std::size_t bits = 0;
    while (c > 0) {
        ++bits;
        c >>= 1;
    }
    return bits;
}
}  // namespace

ModalDagSize modal_dag_size(const FormulaFactory& f, FormulaId id) {
    ModalDagSize out;
    std::set<FormulaId> seen;
    std::function<void(FormulaId)> walk = [&](FormulaId x) {
        if (seen.count(x)) return;
        seen.insert(x);
        const FormulaNode& n = f.node(x);
        switch (n.kind) {
            case FormulaKind::F:
            case FormulaKind::P:
                out.modal_nodes += 1;
                out.constant_bits += bit_width(n.interval.lower);
                if (n.interval.upper) out.constant_bits += bit_width(*n.interval.upper);
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
    walk(id);
    out.total = out.modal_nodes + out.constant_bits;
    return out;
}

}  // namespace umitl
