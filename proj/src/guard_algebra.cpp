// ============================================================================
// guard_algebra.cpp — Disjoint box algebra over per-clock time differences
// ============================================================================

#include "umitl/guard_algebra.hpp"

#include <stdexcept>

namespace umitl {

// --- intervals -----------------------------------------------------------------

bool DiffInterval::empty() const {
    if (!lo || !hi) return false;
    if (*lo < *hi) return false;
    if (*lo > *hi) return true;
    return lo_open || hi_open;
}

DiffInterval DiffInterval::intersect(const DiffInterval& o) const {
    DiffInterval r = *this;
    if (o.lo) {
        if (!r.lo || *o.lo > *r.lo) {
            r.lo = o.lo;
            r.lo_open = o.lo_open;
        } else if (*o.lo == *r.lo) {
            r.lo_open = r.lo_open || o.lo_open;
        }
    }
    if (o.hi) {
        if (!r.hi || *o.hi < *r.hi) {
            r.hi = o.hi;
            r.hi_open = o.hi_open;
        } else if (*o.hi == *r.hi) {
            r.hi_open = r.hi_open || o.hi_open;
        }
    }
    return r;
}

std::vector<DiffInterval> DiffInterval::complement() const {
    std::vector<DiffInterval> out;
    if (lo) out.push_back(DiffInterval::at_most(*lo, !lo_open));
    if (hi) out.push_back(DiffInterval::at_least(*hi, !hi_open));
    return out;
}

// --- boxes ---------------------------------------------------------------------

bool DiffBox::empty() const {
    for (const auto& [c, iv] : by_clock)
        if (iv.empty()) return true;
    return false;
}

DiffBox DiffBox::intersect(const DiffBox& o) const {
    DiffBox r = *this;
    for (const auto& [c, iv] : o.by_clock) {
        auto it = r.by_clock.find(c);
        if (it == r.by_clock.end())
            r.by_clock.emplace(c, iv);
        else
            it->second = it->second.intersect(iv);
    }
    return r;
}

// --- disjoint sets ----------------------------------------------------------------

DiffSet DiffSet::from_atom(std::uint32_t clock, DiffInterval iv) {
    if (iv.empty()) return none();
    DiffBox b;
    b.by_clock.emplace(clock, iv);
    return DiffSet{{b}};
}

DiffSet DiffSet::set_and(const DiffSet& o) const {
    DiffSet r;
    for (const DiffBox& x : boxes) {
        for (const DiffBox& y : o.boxes) {
            DiffBox z = x.intersect(y);
            if (!z.empty()) r.boxes.push_back(std::move(z));
        }
    }
    return r;
}

namespace {
// b minus cut, as disjoint boxes: peel one clock at a time.
std::vector<DiffBox> box_subtract(const DiffBox& b, const DiffBox& cut) {
    std::vector<DiffBox> out;
    DiffBox remainder = b;
    for (const auto& [c, cut_iv] : cut.by_clock) {
        DiffInterval cur = DiffInterval::all();
        auto it = remainder.by_clock.find(c);
        if (it != remainder.by_clock.end()) cur = it->second;
        for (const DiffInterval& half : cut_iv.complement()) {
            DiffInterval piece = cur.intersect(half);
            if (piece.empty()) continue;
            DiffBox shell = remainder;
            shell.by_clock[c] = piece;
            if (!shell.empty()) out.push_back(std::move(shell));
        }
        DiffInterval inside = cur.intersect(cut_iv);
        if (inside.empty()) return out;  // nothing of b lies inside cut on c
        remainder.by_clock[c] = inside;
    }
    // what is left of `remainder` lies fully inside `cut` and is discarded
    return out;
}
}  // namespace

DiffSet DiffSet::set_or(const DiffSet& o) const {
    DiffSet r = *this;
    for (const DiffBox& y : o.boxes) {
        std::vector<DiffBox> pieces{y};
        for (const DiffBox& x : boxes) {
            std::vector<DiffBox> next;
            for (const DiffBox& p : pieces) {
                auto sub = box_subtract(p, x);
                next.insert(next.end(), sub.begin(), sub.end());
            }
            pieces = std::move(next);
            if (pieces.empty()) break;
        }
        r.boxes.insert(r.boxes.end(), pieces.begin(), pieces.end());
    }
    return r;
}

DiffSet DiffSet::set_not() const {
    DiffSet acc = all();
    for (const DiffBox& b : boxes) {
        std::vector<DiffBox> next;
        for (const DiffBox& x : acc.boxes) {
            auto sub = box_subtract(x, b);
            next.insert(next.end(), sub.begin(), sub.end());
        }
        acc.boxes = std::move(next);
        if (acc.boxes.empty()) break;
    }
    return acc;
}

// --- conversion -----------------------------------------------------------------

DiffInterval atom_to_interval(const GuardAtom& a) {
    // The atom constrains d = T - nu(clock); x - T atoms mirror to negative d.
    // Implicit sign condition included.
    std::int64_t c = a.constant;
    DiffInterval iv;
    if (a.t_minus_clock) {
        switch (a.rel) {
            case Rel::Lt: iv = DiffInterval{0, c, false, true}; break;
            case Rel::Le: iv = DiffInterval{0, c, false, false}; break;
            case Rel::Gt: iv = DiffInterval::at_least(c, true); break;
            case Rel::Ge: iv = DiffInterval::at_least(c, false); break;
            case Rel::Eq: iv = DiffInterval::point(c); break;
        }
        if (iv.lo && *iv.lo < 0) iv.lo = 0;
    } else {
        switch (a.rel) {
            case Rel::Lt: iv = DiffInterval{-c, 0, true, false}; break;
            case Rel::Le: iv = DiffInterval{-c, 0, false, false}; break;
            case Rel::Gt: iv = DiffInterval::at_most(-c, true); break;
            case Rel::Ge: iv = DiffInterval::at_most(-c, false); break;
            case Rel::Eq: iv = DiffInterval::point(-c); break;
        }
        if (iv.hi && *iv.hi > 0) iv.hi = 0;
    }
    return iv;
}

DiffSet guard_to_diffset(const Guard& g) {
    DiffSet s = DiffSet::all();
    for (const GuardAtom& a : g.atoms)
        s = s.set_and(DiffSet::from_atom(a.clock, atom_to_interval(a)));
    return s;
}

// --- emission --------------------------------------------------------------------

namespace {
void emit_interval_atoms(std::uint32_t clock, const DiffInterval& iv, Guard& g) {
    // Caller guarantees the interval is sign-pure: contained in [0,inf) or
    // in (-inf,0].  Pick the matching atom orientation for each bound.
    if (iv.lo) {
        std::int64_t lo = *iv.lo;
        if (lo > 0)
            g.atoms.push_back({clock, true, iv.lo_open ? Rel::Gt : Rel::Ge, lo});
        else if (lo == 0 && iv.lo_open)
            g.atoms.push_back({clock, true, Rel::Gt, 0});
        else if (lo == 0)
            g.atoms.push_back({clock, true, Rel::Ge, 0});
        else
            g.atoms.push_back({clock, false, iv.lo_open ? Rel::Lt : Rel::Le, -lo});
    }
    if (iv.hi) {
        std::int64_t hi = *iv.hi;
        if (hi > 0)
            g.atoms.push_back({clock, true, iv.hi_open ? Rel::Lt : Rel::Le, hi});
        else if (hi == 0 && iv.hi_open)
            g.atoms.push_back({clock, false, Rel::Gt, 0});
        else if (hi == 0)
            g.atoms.push_back({clock, false, Rel::Ge, 0});
        else
            g.atoms.push_back({clock, false, iv.hi_open ? Rel::Gt : Rel::Ge, -hi});
    } else if (!iv.lo || *iv.lo < 0) {
        // unbounded above but reaching below zero: still fine, no atom needed
    }
}

bool spans_zero(const DiffInterval& iv) {
    bool below = !iv.lo || *iv.lo < 0;
    bool above = !iv.hi || *iv.hi > 0;
    return below && above;
}
}  // namespace

std::vector<Guard> emit_box(const DiffBox& box) {
    // Split every zero-spanning clock interval so that each emitted conjunct
    // is sign-pure per clock; the implicit sign conditions of the atoms then
    // never shrink what the box means.
    std::vector<DiffBox> pending{box};
    std::vector<DiffBox> pure;
    while (!pending.empty()) {
        DiffBox b = std::move(pending.back());
        pending.pop_back();
        bool split = false;
        for (const auto& [c, iv] : b.by_clock) {
            if (iv.is_all() || !spans_zero(iv)) continue;
            DiffInterval neg = iv.intersect(DiffInterval::at_most(0, true));
            DiffInterval pos = iv.intersect(DiffInterval::at_least(0, false));
            if (!neg.empty()) {
                DiffBox nb = b;
                nb.by_clock[c] = neg;
                pending.push_back(std::move(nb));
            }
            if (!pos.empty()) {
                DiffBox pb = b;
                pb.by_clock[c] = pos;
                pending.push_back(std::move(pb));
            }
            split = true;
            break;
        }
        if (!split) pure.push_back(std::move(b));
    }

    std::vector<Guard> out;
    for (const DiffBox& b : pure) {
        Guard g;
        bool feasible = true;
        for (const auto& [c, iv] : b.by_clock) {
            if (iv.is_all()) continue;
            if (iv.empty()) {
                feasible = false;
                break;
            }
            emit_interval_atoms(c, iv, g);
        }
        if (feasible) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Guard> emit_diffset(const DiffSet& s) {
    std::vector<Guard> out;
    for (const DiffBox& b : s.boxes) {
        auto gs = emit_box(b);
        out.insert(out.end(), gs.begin(), gs.end());
    }
    return out;
}

}  // namespace umitl
