#include "thl/rational.hpp"

#include "thl/errors.hpp"

#include <cctype>

namespace thl {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer to_integer(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(to_integer(num));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer d = to_integer(den);
    if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    Rational r(to_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace thl
