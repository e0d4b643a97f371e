#include "nonpos/rational.hpp"

#include "nonpos/errors.hpp"

#include <cctype>

namespace nonpos {

namespace {

bool is_plain_integer(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_plain_integer(text)) {
            throw InputError("malformed rational literal: \"" + std::string(text) + "\"");
        }
        return Rational(BigInt(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den)) {
        throw InputError("malformed rational literal: \"" + std::string(text) + "\"");
    }
    const BigInt d(std::string(den));
    if (d == 0) {
        throw InputError("zero denominator in rational literal: \"" + std::string(text) + "\"");
    }
    return Rational(BigInt(std::string(num)), d);
}

std::string to_string(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += '/';
        out += denominator(q).str();
    }
    return out;
}

} // namespace nonpos
