#include "pcsub/rational.hpp"

#include <stdexcept>

namespace pcsub {

std::string to_string(const Rational& q) {
    const Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

namespace {

Integer parse_integer(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer literal: " + text);
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational make_rational(const std::string& num, const std::string& den) {
    const Integer n = parse_integer(num);
    const Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

}  // namespace pcsub
