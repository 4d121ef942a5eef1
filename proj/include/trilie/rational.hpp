#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace trilie {

// Exact rational scalar. mpq_class keeps values canonical (denominator > 0,
// gcd(|num|, den) = 1) after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar scalar_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// Accepts decimal integers and "p/q" with q > 0 after canonicalization.
// Floating-point literals are rejected on purpose.
inline std::optional<Scalar> parse_scalar(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    // mpz_class does not accept a leading '+'.
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return s;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Scalar(mpz_class(strip_plus(text)));
        }
        std::string num = strip_plus(text.substr(0, slash));
        std::string den = strip_plus(text.substr(slash + 1));
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        mpz_class d(den);
        if (d == 0) return std::nullopt;
        Scalar q(mpz_class(num), d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string scalar_str(const Scalar& q) {
    return q.get_str();
}

} // namespace trilie
