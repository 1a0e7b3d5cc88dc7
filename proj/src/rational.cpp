#include "flattorus/rational.hpp"

namespace flattorus {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = text.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: missing digits");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rational::parse: missing digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(BigInt(text));
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    check_int(a);
    check_int(b);
    return Rational(BigInt(a), BigInt(b));
}

std::optional<Rational> rational_ratio(const PlanarVector& v, const PlanarVector& w) {
    if (v.is_zero()) throw std::invalid_argument("rational_ratio: v must be nonzero");
    if (!cross(v, w).is_zero()) return std::nullopt;
    Rational r = v.x.is_zero() ? w.y / v.y : w.x / v.x;
    // Cross product zero plus one matching component pins the other one.
    return r;
}

}  // namespace flattorus
