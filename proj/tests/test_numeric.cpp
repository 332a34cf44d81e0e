#include "cased/numeric.h"
#include "cased/sqrt_sum.h"

#include <doctest.h>

using namespace cased;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational(" 2.50 ") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("rational formatting round-trips") {
    for (const char* s : {"0.1", "-3.25", "17", "0", "1/3", "-22/7"}) {
        Rational r = parse_rational(s);
        CHECK(parse_rational(format_exact(r)) == r);
    }
    CHECK(format_exact(Rational(1, 10)) == "0.1");
    CHECK(format_exact(Rational(-5, 2)) == "-2.5");
    CHECK(format_exact(Rational(1, 3)) == "1/3");
    CHECK(format_exact(Rational(7)) == "7");
    CHECK(format_approx(Rational(1, 3), 4) == "0.3333");
    CHECK(format_approx(Rational(2, 3), 4) == "0.6667");
    CHECK(format_approx(Rational(-1, 8), 2) == "-0.13");
}

TEST_CASE("perfect squares") {
    BigInt root;
    CHECK(perfect_square(BigInt(144), root));
    CHECK(root == 12);
    CHECK_FALSE(perfect_square(BigInt(145), root));
    Rational rroot;
    CHECK(perfect_square(Rational(9, 4), rroot));
    CHECK(rroot == Rational(3, 2));
    CHECK_FALSE(perfect_square(Rational(2), rroot));
}

TEST_CASE("sqrt sums: canonical forms") {
    // sqrt(8) = 2*sqrt(2), sqrt(1/2) = (1/2)*sqrt(2): all one group
    SqrtSum s = SqrtSum::of_sqrt(Rational(8));
    s += SqrtSum::of_sqrt(Rational(1, 2));
    CHECK(s.terms().size() == 1);
    CHECK(s == SqrtSum::term(Rational(5, 2), Rational(2)));

    SqrtSum z = SqrtSum::of_sqrt(Rational(2)) - SqrtSum::of_sqrt(Rational(2));
    CHECK(z.is_zero());
    CHECK(z.sign() == 0);

    // sqrt(2) + sqrt(3) != sqrt(5 + 2*sqrt(6)) in this representation, but
    // comparison against the numeric value must still order correctly.
    SqrtSum a = SqrtSum::of_sqrt(Rational(2)) + SqrtSum::of_sqrt(Rational(3));
    CHECK(a.sign() == 1);
    CHECK(SqrtSum::compare(a, SqrtSum::of_rational(Rational(314, 100))) > 0);
    CHECK(SqrtSum::compare(a, SqrtSum::of_rational(Rational(315, 100))) < 0);
}

TEST_CASE("sqrt sums: near-tie comparisons stay exact") {
    // sqrt(2)+sqrt(3) vs sqrt(5+2*sqrt(6)) are equal as reals but have
    // different canonical keys; build an actually-equal pair instead:
    // 3*sqrt(12) == 2*sqrt(27) == 6*sqrt(3).
    SqrtSum a = SqrtSum::term(3, Rational(12));
    SqrtSum b = SqrtSum::term(2, Rational(27));
    CHECK(SqrtSum::compare(a, b) == 0);
    CHECK(a == b);

    // tiny but nonzero difference
    SqrtSum c = SqrtSum::term(Rational(1000001, 1000000), Rational(2));
    SqrtSum d = SqrtSum::of_sqrt(Rational(2));
    CHECK(SqrtSum::compare(c, d) == 1);
    CHECK(SqrtSum::compare(d, c) == -1);

    // rational vs irrational close calls (continued-fraction convergents)
    CHECK(SqrtSum::compare(SqrtSum::of_rational(Rational(239, 169)),
                           SqrtSum::of_sqrt(Rational(2))) < 0);
    CHECK(SqrtSum::compare(SqrtSum::of_rational(Rational(577, 408)),
                           SqrtSum::of_sqrt(Rational(2))) > 0);
}

TEST_CASE("sqrt sums: arithmetic and queries") {
    SqrtSum s = SqrtSum::of_rational(Rational(3, 2));
    CHECK(s.as_rational() == Rational(3, 2));
    s += SqrtSum::of_sqrt(Rational(5));
    CHECK_FALSE(s.as_rational().has_value());
    CHECK(s.str() == "1.5 + sqrt(5)");
    s -= SqrtSum::of_sqrt(Rational(5));
    CHECK(s.as_rational() == Rational(3, 2));
    s.scale(Rational(2, 3));
    CHECK(s.as_rational() == Rational(1));
    CHECK(SqrtSum().sign() == 0);
    CHECK(SqrtSum::of_rational(Rational(17, 8)).approx() == doctest::Approx(2.125));
}
