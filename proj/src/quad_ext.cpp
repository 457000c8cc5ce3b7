#include "hypsurf/quad_ext.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <vector>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

void check_field_tag(const BigInt& d) {
    if (d < 2 || !is_square_free(d))
        throw DomainError("field discriminant must be square-free and >= 2, got " + d.str());
}

double rat_to_double(const Rat& r) {
    return r.convert_to<double>();
}

}  // namespace

QuadExt::QuadExt(Rat a, Rat b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    check_field_tag(d_);
}

BigInt QuadExt::merge_fields(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw FieldMismatchError("cannot combine sqrt(" + x.d_.str() + ") with sqrt(" +
                                 y.d_.str() + ")");
    return x.d_;
}

int QuadExt::sign() const {
    int sa = sign_of(a_);
    int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d.  Equality would force d to be a
    // rational square, impossible for a square-free tag.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    int cmp = sign_of(lhs - rhs);
    if (cmp == 0) throw DomainError("square-free discriminant produced a rational square root");
    // |a| dominates -> sign of a, else sign of b.
    return cmp > 0 ? sa : sb;
}

double QuadExt::to_double() const {
    double root = std::sqrt(rat_to_double(Rat(d_)));
    return rat_to_double(a_) + rat_to_double(b_) * root;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = merge_fields(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = merge_fields(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    d_ = merge_fields(*this, o);
    Rat na = a_ * o.a_ + b_ * o.b_ * Rat(d_);
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    d_ = merge_fields(*this, o);
    // Norm a^2 - b^2 d vanishes only at zero (d square-free).
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d_);
    if (norm == 0) {
        if (o.is_zero()) throw DivisionByZeroError("division by zero");
        throw DomainError("zero norm for nonzero element; discriminant not square-free?");
    }
    Rat na = (a_ * o.a_ - b_ * o.b_ * Rat(d_)) / norm;
    Rat nb = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::string QuadExt::str() const {
    if (b_ == 0) return format_rational(a_);
    std::string radical = format_rational(abs(Rat(b_))) + "*sqrt(" + d_.str() + ")";
    if (a_ == 0) return (sign_of(b_) < 0 ? "-" : "") + radical;
    return format_rational(a_) + (sign_of(b_) < 0 ? " - " : " + ") + radical;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
    return os << q.str();
}

QuadExt abs(const QuadExt& q) {
    return q.sign() < 0 ? -q : q;
}

namespace {

struct Term {
    Rat coeff;
    bool radical = false;
    BigInt radicand = 0;
};

// One term of the stripped expression: [coeff][*][sqrt(d)]
Term parse_term(const std::string& t) {
    Term term;
    size_t pos = t.find("sqrt");
    if (pos == std::string::npos) {
        term.coeff = parse_rational(t);
        return term;
    }
    term.radical = true;

    std::string coeff = t.substr(0, pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    if (coeff.empty() || coeff == "+")
        term.coeff = 1;
    else if (coeff == "-")
        term.coeff = -1;
    else
        term.coeff = parse_rational(coeff);

    std::string rad = t.substr(pos + 4);
    if (rad.size() >= 2 && rad.front() == '(' && rad.back() == ')')
        rad = rad.substr(1, rad.size() - 2);
    if (rad.empty()) throw ParseError("missing radicand in '" + t + "'");
    for (char c : rad)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad radicand in '" + t + "'");
    term.radicand = BigInt(rad);
    return term;
}

}  // namespace

QuadExt parse_quad_ext(const std::string& text, const BigInt& default_d) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    // Unicode radical sign (UTF-8 E2 88 9A) -> "sqrt".
    for (size_t pos; (pos = s.find("\xE2\x88\x9A")) != std::string::npos;)
        s.replace(pos, 3, "sqrt");
    if (s.empty()) throw ParseError("empty field element");

    // Split at a top-level '+'/'-': one following a digit or ')'.
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') &&
            (std::isdigit(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == ')')) {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw ParseError("too many terms in '" + text + "'");

    Rat a = 0, b = 0;
    BigInt d = 0;
    bool saw_rational = false, saw_radical = false;
    for (const std::string& p : parts) {
        Term t = parse_term(p);
        if (t.radical) {
            if (saw_radical) throw ParseError("two radical terms in '" + text + "'");
            saw_radical = true;
            b = t.coeff;
            d = t.radicand;
        } else {
            if (saw_rational) throw ParseError("two rational terms in '" + text + "'");
            saw_rational = true;
            a = t.coeff;
        }
    }
    if (!saw_radical) return QuadExt(a, 0, default_d);
    if (b == 0) return QuadExt(a, 0, default_d);
    return QuadExt(a, b, d);
}

}  // namespace hypsurf
