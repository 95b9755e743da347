#include <catch_amalgamated.hpp>

#include <rpt/numeric.hpp>

using namespace rpt;

TEST_CASE("decimal and fraction literals parse exactly")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK(parse_rational("+.5") == Rational(1, 2));
    CHECK(parse_rational("1.5/0.25") == Rational(6));
}

TEST_CASE("malformed literals are rejected")
{
    for (const char* bad : {"", "abc", "1/0", "1e", "1.2.3", "--1", "1e5x", "0x10", "nan", "inf"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_rational(bad), ValidationError);
    }
}

TEST_CASE("exact square roots and the irrational case")
{
    CHECK(sqrt_of(Rational(9, 16)) == Rational(3, 4));
    CHECK(sqrt_of(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(sqrt_of(Rational(2)), IrrationalInExactMode);
    CHECK_THROWS_AS(sqrt_of(Rational(-4)), Error);
}

TEST_CASE("integer powers including negative exponents")
{
    CHECK(ipow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(ipow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(ipow(Rational(5), 0) == Rational(1));
    CHECK(ipow(2.0, -3) == 0.125);
}

TEST_CASE("dispatch selects the field from the context")
{
    auto name = [](auto tag) { return std::string(scalar_traits<typename decltype(tag)::type>::name); };
    CHECK(dispatch(NumericContext::exact(), name) == scalar_traits<Rational>::name);
    CHECK(dispatch(NumericContext::floating(15), name) == scalar_traits<double>::name);
    CHECK(dispatch(NumericContext::floating(40), name) == scalar_traits<Real>::name);
    CHECK_THROWS_AS(dispatch_float(NumericContext::exact(), name), ValidationError);
}

TEST_CASE("precision scope sets and restores the working precision")
{
    const unsigned before = Real::default_precision();
    {
        PrecisionScope scope(80);
        CHECK(Real::default_precision() == 80);
        const Real third = Real(1) / 3;
        CHECK(abs_of(Real(third * 3 - 1)) < ipow(Real(10), -75));
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("conversions from rationals")
{
    PrecisionScope scope(50);
    CHECK(from_rational<double>(Rational(1, 4)) == 0.25);
    const Real tenth = from_rational<Real>(Rational(1, 10));
    CHECK(abs_of(Real(tenth * 10 - 1)) < ipow(Real(10), -48));
    CHECK(to_double(Rational(3, 8)) == 0.375);
}

TEST_CASE("double formatting round-trips")
{
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) {
        CHECK(std::stod(to_string(v)) == v);
    }
}
