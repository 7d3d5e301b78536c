#include "umitl/rational.hpp"

#include <cctype>

namespace umitl {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("bad decimal literal: " + text);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad decimal literal: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        std::int64_t mag = (w < 0 ? -w : w) * den + std::stoll(frac);
        return Rational(neg || w < 0 ? -mag : mag, den);
    }
    return Rational(std::stoll(text));
}

}  // namespace umitl
