#include "weightfilt/rational.hpp"

#include <cctype>

namespace wfl {

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!looks_like_integer(s)) throw ParseError("not a rational: '" + s + "'");
            return Rational(Integer(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!looks_like_integer(num) || !looks_like_integer(den))
            throw ParseError("not a rational: '" + s + "'");
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(Integer(num), d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

}  // namespace wfl
