#include "umitl/interval.hpp"

#include <stdexcept>

namespace umitl {

Interval::Interval(std::int64_t lo, std::optional<std::int64_t> hi, bool lo_open, bool hi_open)
    : lower(lo), upper(hi), lower_open(lo_open), upper_open(hi_open) {
    if (lo < 0) throw std::invalid_argument("interval with negative lower endpoint");
    if (upper) {
        if (*upper < lower) throw std::invalid_argument("interval with upper < lower");
        if (*upper == lower && (lower_open || upper_open))
            throw std::invalid_argument("empty interval");
    } else {
        upper_open = true;  // infinity is always open
    }
}

bool Interval::contains(const Rational& v) const {
    Rational lo(lower);
    if (lower_open ? !(v > lo) : !(v >= lo)) return false;
    if (!upper) return true;
    Rational hi(*upper);
    return upper_open ? v < hi : v <= hi;
}

bool Interval::empty() const {
    if (!upper) return false;
    if (lower < *upper) return false;
    return lower_open || upper_open;  // ctor rejects these, but keep it total
}

Interval Interval::shifted(std::int64_t k) const {
    if (lower + k < 0) throw std::invalid_argument("shift makes lower endpoint negative");
    Interval r = *this;
    r.lower += k;
    if (r.upper) *r.upper += k;
    return r;
}

std::vector<Interval> Interval::unit_split() const {
    if (!upper) throw std::invalid_argument("cannot unit-split an unbounded interval");
    if (is_punctual()) throw std::invalid_argument("cannot unit-split a punctual interval");
    std::vector<Interval> parts;
    // <_a l, u >_b  ->  <_a l, l+1), [l+1, l+2), ..., [u-1, u >_b
    for (std::int64_t k = lower; k < *upper; ++k) {
        bool lo_open = (k == lower) ? lower_open : false;
        bool hi_open = (k + 1 == *upper) ? upper_open : true;
        parts.push_back(Interval(k, k + 1, lo_open, hi_open));
    }
    return parts;
}

std::string Interval::to_string() const {
    std::string s;
    s += lower_open ? '(' : '[';
    s += std::to_string(lower);
    s += ',';
    s += upper ? std::to_string(*upper) : std::string("inf");
    s += upper ? (upper_open ? ')' : ']') : ')';
    return s;
}

Interval Interval::parse(const std::string& text) {
    if (text.size() < 5) throw std::invalid_argument("bad interval: " + text);
    char lo_c = text.front(), hi_c = text.back();
    if (lo_c != '[' && lo_c != '(') throw std::invalid_argument("bad interval: " + text);
    if (hi_c != ']' && hi_c != ')') throw std::invalid_argument("bad interval: " + text);
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad interval: " + text);
    std::string lo_s = text.substr(1, comma - 1);
    std::string hi_s = text.substr(comma + 1, text.size() - comma - 2);
    std::int64_t lo = std::stoll(lo_s);
    std::optional<std::int64_t> hi;
    if (hi_s != "inf") {
        hi = std::stoll(hi_s);
    } else if (hi_c != ')') {
        throw std::invalid_argument("infinite endpoint must be open: " + text);
    }
    return Interval(lo, hi, lo_c == '(', hi_c == ')');
}

}  // namespace umitl
