#pragma once

#include <iosfwd>
#include <string>

#include "hypsurf/rational.hpp"

namespace hypsurf {

// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)), d square-free
// and >= 2.  Purely rational values keep their d tag so mixed expressions
// stay within one field; arithmetic across different d throws.
class QuadExt {
public:
    QuadExt() : d_(2) {}
    QuadExt(Rat a, Rat b, BigInt d);
    // Rational embedding (b = 0), tagged with the default field d = 2.
    QuadExt(const Rat& a) : a_(a), d_(2) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int a) : a_(a), d_(2) {}         // NOLINT(google-explicit-constructor)

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact: -1, 0, or +1.
    int sign() const;

    double to_double() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    std::string str() const;

private:
    // Matching d for binary ops: rational values adopt the other side's field.
    static BigInt merge_fields(const QuadExt& x, const QuadExt& y);

    Rat a_;
    Rat b_;
    BigInt d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

QuadExt abs(const QuadExt& q);

// Grammar (whitespace-insensitive): [a][(+|-)b*sqrt(d)] where a, b are
// rationals, b and "*" optional, and the radical spelled "sqrt(d)", "sqrtd",
// or the Unicode radical sign.  Examples: "3", "-1/2", "sqrt(2)",
// "1+2*sqrt(5)", "1/3 - sqrt2".
QuadExt parse_quad_ext(const std::string& text, const BigInt& default_d = 2);

}  // namespace hypsurf
