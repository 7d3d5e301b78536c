#include "umitl/timed_word.hpp"

#include <sstream>
#include <stdexcept>

namespace umitl {

TimedWord::TimedWord(std::vector<std::string> events, std::vector<Rational> stamps,
                     bool require_initial_zero)
    : events_(std::move(events)), stamps_(std::move(stamps)) {
    if (events_.size() != stamps_.size())
        throw std::invalid_argument("event/stamp length mismatch");
    for (std::size_t i = 0; i < stamps_.size(); ++i) {
        if (stamps_[i] < Rational(0))
            throw std::invalid_argument("negative time stamp");
        if (i > 0 && !(stamps_[i - 1] < stamps_[i]))
            throw std::invalid_argument("time stamps must be strictly increasing");
    }
    if (require_initial_zero) {
        if (empty()) throw std::invalid_argument("empty word");
        if (!(stamps_.front() == Rational(0)))
            throw std::invalid_argument("word must start at time 0");
    }
}

TimedWord TimedWord::extended() const {
    std::vector<std::string> ev;
    std::vector<Rational> st;
    ev.reserve(size() + 2);
    st.reserve(size() + 2);
    ev.push_back(kBeginMarker);
    st.push_back(Rational(0));
    for (std::size_t i = 0; i < size(); ++i) {
        ev.push_back(events_[i]);
        st.push_back(stamps_[i]);
    }
    ev.push_back(kEndMarker);
    st.push_back(empty() ? Rational(0) : stamps_.back());
    return TimedWord(unchecked_tag{}, std::move(ev), std::move(st));
}

std::string TimedWord::to_string() const {
    std::ostringstream oss;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i > 0) oss << ' ';
        oss << events_[i] << '@' << stamps_[i].to_string();
    }
    return oss.str();
}

TimedWord TimedWord::parse(const std::string& text, bool require_initial_zero) {
    std::vector<std::string> ev;
    std::vector<Rational> st;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok) {
        auto at = tok.rfind('@');
        if (at == std::string::npos || at == 0 || at + 1 == tok.size())
            throw std::invalid_argument("bad word token: " + tok);
        ev.push_back(tok.substr(0, at));
        st.push_back(Rational::parse(tok.substr(at + 1)));
    }
    return TimedWord(std::move(ev), std::move(st), require_initial_zero);
}

}  // namespace umitl
