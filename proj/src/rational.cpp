#include "hypsurf/rational.hpp"

#include <cctype>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

BigInt parse_integer(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError("empty integer literal");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("sign without digits: '" + text + "'");
    for (size_t j = i; j < t.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw ParseError("bad integer literal: '" + text + "'");
    }
    return BigInt(t[0] == '+' ? t.substr(1) : t);  // cpp_int rejects an explicit plus
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string t = strip(text);
    size_t slash = t.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(t));
    BigInt num = parse_integer(t.substr(0, slash));
    BigInt den = parse_integer(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rat(num, den);
}

std::string format_rational(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

bool is_square_free(const BigInt& n) {
    if (n <= 0) return false;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Rat frac_part(const Rat& r) {
    BigInt fl = floor_div(numerator(r), denominator(r));
    return r - Rat(fl);
}

}  // namespace hypsurf
