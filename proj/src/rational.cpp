#include "mgstab/rational.hpp"

#include "mgstab/errors.hpp"

#include <limits>

namespace mgstab {

Int floor_rational(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q); // always > 0
    Int quot = num / den;     // truncates toward zero
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

Int ceil_rational(const Rational& q) {
    return -floor_rational(-q);
}

long long to_long(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
        fail(Errc::ParseError, "integer out of supported range: " + n.str());
    }
    return n.convert_to<long long>();
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) {
            fail(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
        }
        return Rational(Int{std::string(text)});
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        fail(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
    }
    Int d{std::string(den)};
    if (d == 0) {
        fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(Int{std::string(num)}, d);
}

std::string rational_string(const Rational& q) {
    Int den = denominator(q);
    if (den == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + den.str();
}

} // namespace mgstab
