#include "ellmf/rational.hpp"

#include <regex>

#include "ellmf/error.hpp"

namespace ellmf {

Rational parse_rational(std::string_view text) {
    static const std::regex grammar("-?[0-9]+(/[1-9][0-9]*)?");
    const std::string s(text);
    if (!std::regex_match(s, grammar)) throw ParseError("malformed rational literal \"" + s + "\"");
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

}  // namespace ellmf
