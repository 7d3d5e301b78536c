// ============================================================================
// benchgen.cpp — Tiling formula families and word encoders
// ============================================================================
//
// Shared vocabulary: XX = some tile letter, XXS = any letter, Atlast = no
// later letter.  G phi abbreviates !F[0,inf)!phi (strict future, so G never
// constrains the evaluation position itself); the bounded family replaces the
// unbounded interval.
//
// ============================================================================

#include "umitl/benchgen.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace umitl {

namespace {

std::int64_t pow2(std::int64_t n) {
    if (n < 0 || n > 30) throw std::invalid_argument("instance parameter out of range");
    return std::int64_t(1) << n;
}

struct Vocab {
    FormulaFactory& f;
    const TilingSystem& sys;

    FormulaId any_tile() const {  // XX
        std::vector<FormulaId> xs;
        for (const auto& t : sys.tiles) xs.push_back(f.atom(t));
        return f.disj_all(xs);
    }
    FormulaId any_letter() const { return f.disj(any_tile(), f.atom(kSeparator)); }  // XXS
    FormulaId at_last() const {
        return f.negation(f.eventually(lower_bound_iv(0, false), any_letter()));
    }
    FormulaId globally(FormulaId phi) const {
        return f.negation(f.eventually(lower_bound_iv(0, false), f.negation(phi)));
    }
    FormulaId globally_in(const Interval& iv, FormulaId phi) const {
        return f.negation(f.eventually(iv, f.negation(phi)));
    }
    FormulaId h_matches(const std::string& a) const {
        std::vector<FormulaId> xs;
        for (const auto& [x, y] : sys.horizontal)
            if (x == a) xs.push_back(f.atom(y));
        return f.disj_all(xs);
    }
    FormulaId v_matches(const std::string& a) const {
        std::vector<FormulaId> xs;
        for (const auto& [x, y] : sys.vertical)
            if (x == a) xs.push_back(f.atom(y));
        return f.disj_all(xs);
    }
};

void validate_system(const TilingSystem& sys) {
    if (sys.tiles.empty()) throw std::invalid_argument("tiling system without tiles");
    for (const auto& t : sys.tiles)
        if (t == kSeparator) throw std::invalid_argument("tile named like the separator");
    auto known = [&](const std::string& t) {
        return std::find(sys.tiles.begin(), sys.tiles.end(), t) != sys.tiles.end();
    };
    for (const auto& [a, b] : sys.horizontal)
        if (!known(a) || !known(b)) throw std::invalid_argument("unknown tile in relation");
    for (const auto& [a, b] : sys.vertical)
        if (!known(a) || !known(b)) throw std::invalid_argument("unknown tile in relation");
}

}  // namespace

std::vector<std::string> tiling_alphabet(const TilingSystem& sys) {
    std::vector<std::string> a = sys.tiles;
    a.push_back(kSeparator);
    return a;
}

// --- EXPSPACE family ------------------------------------------------------------
//
// Letters at integer times 0,1,2,...; rows of width 2^n; the separator ends
// each row, so vertical neighbours sit exactly 2^n + 1 apart.

FormulaId gen_expspace(FormulaFactory& f, const ExpspaceInstance& inst) {
    validate_system(inst.system);
    Vocab v{f, inst.system};
    std::int64_t N = pow2(inst.n);
    FormulaId s = f.atom(kSeparator);

    // successive letters exactly one apart (or the word ends)
    FormulaId unit_spacing = v.globally(f.implies(
        v.any_letter(),
        f.conj(f.negation(f.eventually(open(0, 1), v.any_letter())),
               f.disj(f.eventually(left_open(0, 1), v.any_letter()), v.at_last()))));

    // first separator at time 2^n, then separators exactly 2^n+1 apart
    FormulaId separators = f.conj(
        f.eventually(left_open(N - 1, N), s),
        v.globally(f.implies(
            s, f.conj(f.negation(f.eventually(left_open(0, N), s)),
                      f.disj(f.eventually(left_open(N, N + 1), s), v.at_last())))));

    FormulaId first_tile = f.atom(inst.first);

    FormulaId final_tile = f.eventually(
        lower_bound_iv(0, false),
        f.conj(f.atom(inst.final),
               f.eventually(left_open(0, 1), f.conj(s, v.at_last()))));

    std::vector<FormulaId> h_parts;
    for (const auto& a : inst.system.tiles)
        h_parts.push_back(f.implies(
            f.atom(a), f.eventually(left_open(0, 1), f.disj(s, v.h_matches(a)))));
    FormulaId horizontal = v.globally(f.conj_all(h_parts));

    std::vector<FormulaId> v_parts;
    for (const auto& a : inst.system.tiles)
        v_parts.push_back(f.implies(
            f.atom(a),
            f.disj(f.eventually(left_open(0, N + 1), v.at_last()),
                   f.eventually(left_open(N, N + 1), v.v_matches(a)))));
    FormulaId vertical = v.globally(f.conj_all(v_parts));

    return f.conj_all({unit_spacing, first_tile, final_tile, separators, horizontal, vertical});
}

// --- NEXPTIME family (bounded fragment) --------------------------------------------
//
// Same encoding; the first l = 2^n (2^n + 1) letters carry the tiling, all
// unbounded modalities become bounded by l-1, and the non-last rows live in
// [0, l-1-(2^n+1)).

FormulaId gen_nexptime(FormulaFactory& f, const NexptimeInstance& inst) {
    validate_system(inst.system);
    if (inst.bottom_prefix.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("bottom prefix must have length n");
    Vocab v{f, inst.system};
    std::int64_t N = pow2(inst.n);
    std::int64_t l = N * (N + 1);
    Interval nonlast = left_closed(0, l - 1 - (N + 1));  // [0, l-2^n-2)
    FormulaId s = f.atom(kSeparator);

    FormulaId unit_spacing = v.globally_in(
        closed(0, l - 2),
        f.implies(v.any_letter(),
                  f.conj(f.negation(f.eventually(left_closed(0, 1), v.any_letter())),
                         f.eventually(closed(0, 1), v.any_letter()))));

    FormulaId separators =
        f.conj_all({f.eventually(left_closed(0, N), f.negation(s)),
                    f.eventually(closed(0, N), s),
                    v.globally_in(nonlast,
                                  f.implies(s, f.conj(f.negation(f.eventually(closed(0, N), s)),
                                                      f.eventually(closed(0, N + 1), s))))});

    // bottom row starts with the given prefix
    FormulaId prefix = f.atom(inst.bottom_prefix.back());
    for (std::size_t i = inst.bottom_prefix.size() - 1; i-- > 0;)
        prefix = f.conj(f.atom(inst.bottom_prefix[i]), f.eventually(closed(0, 1), prefix));

    std::vector<FormulaId> h_parts;
    for (const auto& a : inst.system.tiles)
        h_parts.push_back(
            f.implies(f.atom(a), f.eventually(closed(0, 1), f.disj(s, v.h_matches(a)))));
    FormulaId horizontal = v.globally_in(closed(0, l - 2), f.conj_all(h_parts));

    std::vector<FormulaId> v_parts;
    for (const auto& a : inst.system.tiles)
        v_parts.push_back(
            f.implies(f.atom(a), f.eventually(left_open(N, N + 1), v.v_matches(a))));
    FormulaId vertical = v.globally_in(nonlast, f.conj_all(v_parts));

    return f.conj_all({unit_spacing, prefix, separators, horizontal, vertical});
}

// --- PSPACE family --------------------------------------------------------------
//
// Successive letters at a time distance inside (1,2), so F[0,2) reaches
// exactly the next position; rows have width n.

namespace {
// F[0,2)(step_1 && F[0,2)(step_2 && ... && F[0,2) last))
FormulaId next_chain(FormulaFactory& f, const std::vector<FormulaId>& steps, FormulaId last) {
    FormulaId acc = f.eventually(left_closed(0, 2), last);
    for (std::size_t i = steps.size(); i-- > 0;)
        acc = f.eventually(left_closed(0, 2), f.conj(steps[i], acc));
    return acc;
}
}  // namespace

FormulaId gen_pspace(FormulaFactory& f, const PspaceInstance& inst) {
    validate_system(inst.system);
    std::size_t n = static_cast<std::size_t>(inst.n);
    if (inst.top.size() != n || inst.bottom.size() != n)
        throw std::invalid_argument("top/bottom rows must have length n");
    Vocab v{f, inst.system};
    FormulaId s = f.atom(kSeparator);

    FormulaId spacing = v.globally(
        f.implies(v.any_letter(),
                  f.conj(f.negation(f.eventually(closed(0, 1), v.any_letter())),
                         f.disj(v.at_last(), f.eventually(left_closed(0, 2), v.any_letter())))));

    // every separator is followed by n tiles and another separator (or ends)
    FormulaId row_width;
    {
        std::vector<FormulaId> steps(n, v.any_tile());
        row_width = v.globally(f.implies(s, f.disj(v.at_last(), next_chain(f, steps, s))));
    }

    std::vector<FormulaId> h_parts;
    for (const auto& a : inst.system.tiles)
        h_parts.push_back(f.implies(
            f.atom(a), f.eventually(left_closed(0, 2), f.disj(v.h_matches(a), s))));
    FormulaId horizontal = v.globally(f.conj_all(h_parts));

    // a tile with two separators ahead is not in the last row; its vertical
    // neighbour sits n+1 positions ahead
    std::vector<FormulaId> v_parts;
    for (const auto& a : inst.system.tiles) {
        FormulaId not_last_row =
            f.conj(f.atom(a),
                   f.eventually(lower_bound_iv(0, false),
                                f.conj(s, f.eventually(lower_bound_iv(0, false), s))));
        std::vector<FormulaId> steps(n, v.any_letter());
        v_parts.push_back(
            v.globally(f.implies(not_last_row, next_chain(f, steps, v.v_matches(a)))));
    }
    FormulaId vertical = f.conj_all(v_parts);

    // bottom row at the word start
    FormulaId bottom = f.eventually(left_closed(0, 2), s);
    for (std::size_t i = n; i-- > 0;) {
        bottom = f.conj(f.atom(inst.bottom[i]), bottom);
        if (i > 0) bottom = f.eventually(left_closed(0, 2), bottom);
    }

    // top row just before the closing separator, which is last
    FormulaId top_tail = f.eventually(left_closed(0, 2), f.conj(s, v.at_last()));
    for (std::size_t i = n; i-- > 0;) {
        top_tail = f.conj(f.atom(inst.top[i]), top_tail);
        top_tail = f.eventually(left_closed(0, 2), top_tail);
    }
    FormulaId top = f.eventually(lower_bound_iv(0, false), f.conj(s, top_tail));

    std::vector<FormulaId> wl;
    for (const auto& a : inst.left_tiles) wl.push_back(f.atom(a));
    FormulaId left = v.globally(
        f.implies(s, f.disj(v.at_last(), f.eventually(left_closed(0, 2), f.disj_all(wl)))));

    std::vector<FormulaId> not_wr;
    for (const auto& a : inst.system.tiles)
        if (std::find(inst.right_tiles.begin(), inst.right_tiles.end(), a) ==
            inst.right_tiles.end())
            not_wr.push_back(f.atom(a));
    FormulaId right = f.negation(
        f.eventually(lower_bound_iv(0, false),
                     f.conj(f.disj_all(not_wr), f.eventually(left_closed(0, 2), s))));

    return f.conj_all({spacing, row_width, horizontal, vertical, bottom, top, left, right});
}

// --- encodings -------------------------------------------------------------------

TimedWord tiling_to_word(const Tiling& t, const EncodingScheme& scheme) {
    if (t.empty() || t.front().empty()) throw std::invalid_argument("empty tiling");
    std::size_t width = t.front().size();
    std::vector<std::string> ev;
    for (const auto& row : t) {
        if (row.size() != width) throw std::invalid_argument("ragged tiling");
        for (const auto& tile : row) ev.push_back(tile);
        ev.push_back(kSeparator);
    }
    std::vector<Rational> st;
    Rational step = scheme.kind == EncodingScheme::Kind::IntegerGrid ? Rational(1) : scheme.gap;
    if (scheme.kind == EncodingScheme::Kind::CorridorSpacing &&
        !(Rational(1) < scheme.gap && scheme.gap < Rational(2)))
        throw std::invalid_argument("corridor gap must lie in (1,2)");
    Rational cur(0);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        st.push_back(cur);
        cur = cur + step;
    }
    return TimedWord(std::move(ev), std::move(st));
}

std::optional<Tiling> word_to_tiling(const TimedWord& w, std::size_t width) {
    if (width == 0) return std::nullopt;
    std::size_t chunk = width + 1;
    std::size_t rows = w.size() / chunk;
    if (rows == 0) return std::nullopt;
    Tiling t;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < width; ++c) {
            const std::string& ev = w.event(r * chunk + c + 1);
            if (ev == kSeparator) return std::nullopt;
            row.push_back(ev);
        }
        if (w.event(r * chunk + width + 1) != kSeparator) return std::nullopt;
        t.push_back(std::move(row));
    }
    return t;
}

// --- checking -------------------------------------------------------------------

bool check_tiling(const Tiling& t, const TilingSystem& sys) {
    if (t.empty() || t.front().empty()) return false;
    std::size_t width = t.front().size();
    auto known = [&](const std::string& x) {
        return std::find(sys.tiles.begin(), sys.tiles.end(), x) != sys.tiles.end();
    };
    auto in_rel = [](const std::vector<std::pair<std::string, std::string>>& rel,
                     const std::string& a, const std::string& b) {
        return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
    };
    for (const auto& row : t) {
        if (row.size() != width) return false;
        for (const auto& x : row)
            if (!known(x)) return false;
        for (std::size_t i = 0; i + 1 < width; ++i)
            if (!in_rel(sys.horizontal, row[i], row[i + 1])) return false;
    }
    for (std::size_t j = 0; j + 1 < t.size(); ++j)
        for (std::size_t i = 0; i < width; ++i)
            if (!in_rel(sys.vertical, t[j][i], t[j + 1][i])) return false;
    return true;
}

bool check_tiling(const Tiling& t, const ExpspaceInstance& inst, std::size_t height) {
    if (!check_tiling(t, inst.system)) return false;
    std::size_t width = static_cast<std::size_t>(pow2(inst.n));
    if (t.front().size() != width || t.size() != height) return false;
    return t.front().front() == inst.first && t.back().back() == inst.final;
}

bool check_tiling(const Tiling& t, const NexptimeInstance& inst) {
    if (!check_tiling(t, inst.system)) return false;
    std::size_t side = static_cast<std::size_t>(pow2(inst.n));
    if (t.size() != side || t.front().size() != side) return false;
    for (std::size_t j = 0; j < inst.bottom_prefix.size(); ++j)
        if (t[0][j] != inst.bottom_prefix[j]) return false;
    return true;
}

bool check_tiling(const Tiling& t, const PspaceInstance& inst, std::size_t height) {
    if (!check_tiling(t, inst.system)) return false;
    std::size_t width = static_cast<std::size_t>(inst.n);
    if (t.front().size() != width || t.size() != height) return false;
    auto member = [](const std::vector<std::string>& xs, const std::string& x) {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
    };
    for (const auto& row : t) {
        if (!member(inst.left_tiles, row.front())) return false;
        if (!member(inst.right_tiles, row.back())) return false;
    }
    return t.front() == inst.bottom && t.back() == inst.top;
}

std::optional<Tiling> enumerate_tiling(const TilingSystem& sys, std::size_t width,
                                       std::size_t height,
                                       const std::function<bool(const Tiling&)>& check) {
    std::size_t cells = width * height;
    std::vector<std::size_t> pick(cells, 0);
    std::size_t k = sys.tiles.size();
    while (true) {
        Tiling t(height, std::vector<std::string>(width));
        for (std::size_t i = 0; i < cells; ++i) t[i / width][i % width] = sys.tiles[pick[i]];
        if (check(t)) return t;
        std::size_t i = 0;
        for (; i < cells; ++i) {
            if (++pick[i] < k) break;
            pick[i] = 0;
        }
        if (i == cells) return std::nullopt;
    }
}

// --- instance files ------------------------------------------------------------------

BenchInstance parse_instance(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    BenchInstance out;
    out.family = j.at("family").get<std::string>();
    TilingSystem sys;
    for (const auto& t : j.at("tiles")) sys.tiles.push_back(t.get<std::string>());
    for (const auto& p : j.at("mh"))
        sys.horizontal.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    for (const auto& p : j.at("mv"))
        sys.vertical.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    std::int64_t n = j.at("n").get<std::int64_t>();
    auto str_list = [&](const char* key) {
        std::vector<std::string> xs;
        for (const auto& x : j.at(key)) xs.push_back(x.get<std::string>());
        return xs;
    };
    if (out.family == "expspace") {
        ExpspaceInstance inst;
        inst.system = sys;
        inst.n = n;
        inst.first = j.at("first").get<std::string>();
        inst.final = j.at("final").get<std::string>();
        out.expspace = inst;
    } else if (out.family == "nexptime") {
        NexptimeInstance inst;
        inst.system = sys;
        inst.n = n;
        inst.bottom_prefix = str_list("bottom");
        out.nexptime = inst;
    } else if (out.family == "pspace") {
        PspaceInstance inst;
        inst.system = sys;
        inst.n = n;
        inst.left_tiles = str_list("wl");
        inst.right_tiles = str_list("wr");
        inst.top = str_list("top");
        inst.bottom = str_list("bottom");
        out.pspace = inst;
    } else {
        throw std::invalid_argument("unknown family: " + out.family);
    }
    return out;
}

}  // namespace umitl
