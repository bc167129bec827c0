#include "ordinal/rational.hpp"

#include <cctype>

#include "ordinal/error.hpp"

namespace ordinal {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    boost::multiprecision::cpp_int value(std::string(text.substr(i)));
    return text[0] == '-' ? boost::multiprecision::cpp_int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const auto num = parse_integer(text.substr(0, slash), text);
    const auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace ordinal
