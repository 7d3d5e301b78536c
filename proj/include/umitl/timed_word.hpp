// ============================================================================
// umitl/timed_word.hpp — Finite strictly monotonic timed words
// ============================================================================
//
// Positions are 1-based: dom(w) = {1..size()}.  The extended form used by the
// two-way run engine adds a begin marker at head index 0 (stamp 0) and an end
// marker at index size()+1 (stamp of the last letter); those cells are
// addressed through the run engine, not stored here.
//
// ============================================================================

#ifndef UMITL_TIMED_WORD_HPP
#define UMITL_TIMED_WORD_HPP

#include <string>
#include <vector>

#include "umitl/rational.hpp"

namespace umitl {

// Reserved textual names for the end-marker letters.
inline const std::string kBeginMarker = "^";
inline const std::string kEndMarker = "$";

class TimedWord {
public:
    TimedWord() = default;

    // Throws std::invalid_argument unless stamps are strictly increasing and
    // non-negative.  `require_initial_zero` additionally demands tau_1 == 0
    // (the convention for language-membership words).
    TimedWord(std::vector<std::string> events, std::vector<Rational> stamps,
              bool require_initial_zero = false);

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    // 1-based access over dom(w).
    const std::string& event(std::size_t i) const { return events_.at(i - 1); }
    const Rational& stamp(std::size_t i) const { return stamps_.at(i - 1); }

    const std::vector<std::string>& events() const { return events_; }
    const std::vector<Rational>& stamps() const { return stamps_; }

    bool starts_at_zero() const { return !empty() && stamps_.front() == Rational(0); }

    // The word (^,0) w ($,tau_n) over the extended alphabet, re-indexed from 1.
    // The result is only weakly monotonic at the two marker junctions, which
    // is intentional; it is produced for formula evaluation over extended
    // words and for the automaton round-trip contract.
    TimedWord extended() const;

    // Text format: whitespace-separated "sym@stamp" tokens, e.g. "c@1/5 b@6/5".
    std::string to_string() const;
    static TimedWord parse(const std::string& text, bool require_initial_zero = false);

    friend bool operator==(const TimedWord& a, const TimedWord& b) {
        return a.events_ == b.events_ && a.stamps_ == b.stamps_;
    }

private:
    struct unchecked_tag {};
    TimedWord(unchecked_tag, std::vector<std::string> events, std::vector<Rational> stamps)
        : events_(std::move(events)), stamps_(std::move(stamps)) {}

    std::vector<std::string> events_;
    std::vector<Rational> stamps_;
};

}  // namespace umitl

#endif
