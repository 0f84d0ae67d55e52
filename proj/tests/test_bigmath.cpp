// Exact scalar arithmetic and matrix kernels: parsing, rendering, root
// enclosures, interval helpers, and the fraction-free determinant.

#include "oracles.hpp"
#include "recfrac/matrix.hpp"
#include "recfrac/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace recfrac;

TEST_CASE("integer parsing") {
    CHECK(parse_integer("0") == 0);
    CHECK(parse_integer("-17") == -17);
    CHECK(parse_integer("+42") == 42);
    CHECK(parse_integer("  123  ") == 123);
    CHECK(parse_integer("123456789012345678901234567890") ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("1x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("--1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("1.5"), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("3/-4") == Rational(-3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("12.") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational rendering") {
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_string(Rational(8, 4)) == "2");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(to_decimal_string(Integer(-99)) == "-99");
}

TEST_CASE("decimal rendering truncates toward zero") {
    CHECK(decimal_render(Rational(899, 2), 1) == "449.5");
    CHECK(decimal_render(Rational(1, 3), 4) == "0.3333");
    CHECK(decimal_render(Rational(808197, 1798), 6) == "449.497775");
    CHECK(decimal_render(Rational(-1, 3), 2) == "-0.33");
    CHECK(decimal_render(Rational(5), 0) == "5");
    CHECK(decimal_render(Rational(-7, 2), 0) == "-3");
    CHECK(decimal_render(Rational(1, 8), 3) == "0.125");
    CHECK(decimal_render(Rational(1, 8), 6) == "0.125000");
    CHECK(decimal_render(Rational(0), 3) == "0.000");
    CHECK_THROWS_AS(decimal_render(Rational(1), -1), std::invalid_argument);

    // Round trip: parsing the output lands within 10^-digits.
    const Rational q(22, 7);
    const Rational back = parse_rational(decimal_render(q, 10));
    CHECK(abs_rat(q - back) < Rational(1, pow10(10)));
}

TEST_CASE("powers and binomials") {
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(2, 20) == 1048576);
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rpow(Rational(0), 0) == 1);
    CHECK_THROWS_AS(rpow(Rational(0), -1), std::domain_error);
    CHECK(pow10(3) == 1000);
    CHECK_THROWS_AS(pow10(-1), std::invalid_argument);

    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("integer nth root") {
    CHECK(integer_nth_root(26, 3) == 2);
    CHECK(integer_nth_root(27, 3) == 3);
    CHECK(integer_nth_root(28, 3) == 3);
    CHECK(integer_nth_root(0, 5) == 0);
    CHECK(integer_nth_root(1, 5) == 1);
    CHECK(integer_nth_root(ipow(10, 40), 2) == ipow(10, 20));
    CHECK(integer_nth_root(ipow(10, 40) - 1, 2) == ipow(10, 20) - 1);
    CHECK_THROWS_AS(integer_nth_root(-8, 3), std::domain_error);
    CHECK_THROWS_AS(integer_nth_root(8, 0), std::invalid_argument);
}

TEST_CASE("nth root enclosures") {
    SECTION("exact roots collapse to a point") {
        const DecimalInterval r = nth_root_interval(Rational(27), 3, 5);
        CHECK(r.lower == 3);
        CHECK(r.upper == 3);
        const DecimalInterval q = nth_root_interval(Rational(9, 4), 2, 7);
        CHECK(q.lower == Rational(3, 2));
        CHECK(q.upper == q.lower);
    }
    SECTION("irrational roots are bracketed to width 10^-digits") {
        const DecimalInterval r = nth_root_interval(Rational(2), 2, 30);
        CHECK(r.upper - r.lower == Rational(1, pow10(30)));
        CHECK(rpow(r.lower, 2) <= 2);
        CHECK(rpow(r.upper, 2) > 2);
    }
    SECTION("negative radicand, odd order") {
        const DecimalInterval r = nth_root_interval(Rational(-8), 3, 4);
        CHECK(r.lower == -2);
        CHECK(r.upper == -2);
        const DecimalInterval s = nth_root_interval(Rational(-2), 3, 12);
        CHECK(s.lower < s.upper);
        CHECK(rpow(s.lower, 3) <= -2);
        CHECK(rpow(s.upper, 3) >= -2);
    }
    SECTION("even root of a negative value is rejected") {
        CHECK_THROWS_AS(nth_root_interval(Rational(-2), 2, 5), std::domain_error);
    }
}

TEST_CASE("interval arithmetic") {
    const Interval a{Rational(1), Rational(2)};
    const Interval b{Rational(-3), Rational(4)};
    const Interval p = interval_mul(a, b);
    CHECK(p.lo == -6);
    CHECK(p.hi == 8);

    const Interval s = interval_scale(Rational(-2), a);
    CHECK(s.lo == -4);
    CHECK(s.hi == -2);

    const Interval sum = interval_add(a, b);
    CHECK(sum.lo == -2);
    CHECK(sum.hi == 6);

    CHECK(interval_contains(b, Rational(0)));
    CHECK_FALSE(interval_contains(a, Rational(3)));
    CHECK(interval_width(b) == 7);

    // interval_pow is plain repeated multiplication (no dependency
    // tightening): [-2, 1]^2 = [-2, 4].
    const Interval w = interval_pow(Interval{Rational(-2), Rational(1)}, 2);
    CHECK(w.lo == -2);
    CHECK(w.hi == 4);
}

TEST_CASE("square matrix basics") {
    SquareMatrix m{{1, 2}, {3, 4}};
    CHECK(m.order() == 2);
    CHECK(m.at(1, 0) == 3);
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, -1), std::out_of_range);
    CHECK_THROWS_AS(SquareMatrix({{1, 2}, {3}}), std::invalid_argument);

    const SquareMatrix prod = multiply(m, m);
    CHECK((prod == SquareMatrix{{7, 10}, {15, 22}}));
    CHECK_THROWS_AS(multiply(m, SquareMatrix(3)), std::invalid_argument);

    const SquareMatrix big{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK((minor_matrix(big, 1, 1) == SquareMatrix{{1, 3}, {7, 9}}));
    CHECK((principal_submatrix(big, {0, 2}) == SquareMatrix{{1, 3}, {7, 9}}));
}

TEST_CASE("exact determinant") {
    CHECK(det_exact(SquareMatrix{}) == 1); // empty product convention
    CHECK(det_exact(SquareMatrix{{5}}) == 5);
    CHECK(det_exact(SquareMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(det_exact(SquareMatrix{{0, 1}, {1, 0}}) == -1); // needs a pivot swap
    CHECK(det_exact(SquareMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det_exact(SquareMatrix{{Rational(1, 2), Rational(1, 3)},
                                 {Rational(1, 4), Rational(1, 5)}}) == Rational(1, 60));

    SquareMatrix id(6);
    for (int i = 0; i < 6; ++i) id.at(i, i) = 1;
    CHECK(det_exact(id) == 1);
}

TEST_CASE("determinant matches the permutation oracle on random matrices") {
    std::mt19937 rng(20240701);
    for (int trial = 0; trial < 50; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 5);
        const SquareMatrix m = testing::random_square_matrix(rng, order, -6, 6, 3);
        CHECK(det_exact(m) == testing::det_by_permutations(m));
    }
}
