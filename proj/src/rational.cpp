#include "dilemma/rational.hpp"

#include <cctype>
#include <numeric>

namespace dilemma {

namespace {

bool parse_integer(const std::string& s, std::size_t lo, std::size_t hi, long long& out) {
    if (lo >= hi) return false;
    std::size_t p = lo;
    bool neg = false;
    if (s[p] == '-') {
        neg = true;
        ++p;
        if (p >= hi) return false;
    }
    long long v = 0;
    for (; p < hi; ++p) {
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
        const long long digit = s[p] - '0';
        if (v > (INT64_MAX - digit) / 10) return false;
        v = v * 10 + digit;
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    long long num = 0, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(text, 0, text.size(), num))
            throw std::invalid_argument("rational: malformed value '" + text + "'");
        return Rational(num);
    }
    if (!parse_integer(text, 0, slash, num) ||
        !parse_integer(text, slash + 1, text.size(), den))
        throw std::invalid_argument("rational: malformed value '" + text + "'");
    if (den <= 0)
        throw std::invalid_argument("rational: non-positive denominator in '" + text + "'");
    if (std::gcd(num, den) != 1)
        throw std::invalid_argument("rational: non-canonical value '" + text + "'");
    return Rational(num, den);
}

}  // namespace dilemma
