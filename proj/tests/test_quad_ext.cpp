#include <doctest.h>

#include <random>

#include "hypsurf/errors.hpp"
#include "hypsurf/quad_ext.hpp"

using hypsurf::BigInt;
using hypsurf::QuadExt;
using hypsurf::Rat;

TEST_CASE("quadratic field arithmetic on frozen values") {
    QuadExt r2(Rat(0), Rat(1), BigInt(2));  // sqrt(2)
    CHECK(r2 * r2 == QuadExt(2));
    CHECK((r2 + 1) * (r2 - 1) == QuadExt(1));
    CHECK(QuadExt(Rat(3, 2)) + QuadExt(Rat(1, 2)) == QuadExt(2));

    QuadExt x(Rat(1, 3), Rat(-2, 5), BigInt(2));
    CHECK(x / x == QuadExt(1));
    CHECK(x - x == QuadExt(0));
    CHECK(x * QuadExt(0) == QuadExt(0));
}

TEST_CASE("sign is exact near hard cases") {
    QuadExt r2(Rat(0), Rat(1), BigInt(2));
    // 140/99 and 99/70 straddle sqrt(2) with tiny margins
    CHECK((r2 - QuadExt(Rat(140, 99))).sign() > 0);
    CHECK((r2 - QuadExt(Rat(99, 70))).sign() < 0);
    CHECK((r2 * r2 - 2).sign() == 0);
    // both components nonzero, opposite pulls: 7/5 < sqrt(2) < 17/12
    QuadExt y(Rat(7, 5), Rat(-1), BigInt(2));
    CHECK(y.sign() < 0);
    QuadExt z(Rat(17, 12), Rat(-1), BigInt(2));
    CHECK(z.sign() > 0);
}

TEST_CASE("ordering and abs") {
    QuadExt r3(Rat(0), Rat(1), BigInt(3));
    CHECK(QuadExt(1) < r3);
    CHECK(r3 < QuadExt(2));
    CHECK(abs(QuadExt(-5)) == QuadExt(5));
    CHECK(abs(QuadExt(Rat(0), Rat(-1), BigInt(2))) == QuadExt(Rat(0), Rat(1), BigInt(2)));
}

TEST_CASE("discriminant rules") {
    CHECK_THROWS_AS(QuadExt(Rat(1), Rat(1), BigInt(4)), hypsurf::Error);
    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), BigInt(12)), hypsurf::Error);
    QuadExt r2(Rat(0), Rat(1), BigInt(2)), r3(Rat(0), Rat(1), BigInt(3));
    CHECK_THROWS_AS(r2 + r3, hypsurf::FieldMismatchError);
    CHECK_THROWS_AS(r2 * r3, hypsurf::FieldMismatchError);
    // rationals are members of every field
    CHECK(r3 + QuadExt(Rat(1, 2)) == QuadExt(Rat(1, 2), Rat(1), BigInt(3)));
    CHECK_THROWS_AS(r2 / QuadExt(0), hypsurf::DivisionByZeroError);
}

TEST_CASE("field axioms on pseudorandom values") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    auto rnd = [&] {
        return QuadExt(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), BigInt(5));
    };
    for (int i = 0; i < 200; ++i) {
        QuadExt a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("parsing") {
    using hypsurf::parse_quad_ext;
    CHECK(parse_quad_ext("1/2") == QuadExt(Rat(1, 2)));
    CHECK(parse_quad_ext("sqrt2") == QuadExt(Rat(0), Rat(1), BigInt(2)));
    CHECK(parse_quad_ext("\xE2\x88\x9A" "2") == QuadExt(Rat(0), Rat(1), BigInt(2)));
    CHECK(parse_quad_ext("1/2 + 3/4 sqrt5") == QuadExt(Rat(1, 2), Rat(3, 4), BigInt(5)));
    CHECK(parse_quad_ext("2 - sqrt2") == QuadExt(Rat(2), Rat(-1), BigInt(2)));
    CHECK_THROWS_AS(parse_quad_ext(""), hypsurf::ParseError);
    CHECK_THROWS_AS(parse_quad_ext("sqrt4"), hypsurf::Error);
    CHECK_THROWS_AS(parse_quad_ext("1+2+3"), hypsurf::ParseError);
}
