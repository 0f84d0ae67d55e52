// Triangular matrices and their two multiplicative functionals: the
// parapermanent (all compositions, plus signs) and the paradeterminant
// (alternating signs). Three independent evaluation paths are checked
// against each other: the definitional sum over compositions, the corner
// recursion, and the inscribed-table expansion around each row index.

#include "oracles.hpp"
#include "recfrac/triangular.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace recfrac;

namespace {

TriMatrix ones(int order) {
    TriMatrix A(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= i; ++j) A.a(i, j) = 1;
    return A;
}

// Two-diagonal matrix whose parapermanent walks the Fibonacci numbers.
TriMatrix fibonacci_matrix(int order) {
    TriMatrix A(order);
    for (int i = 1; i <= order; ++i) {
        A.a(i, i) = 1;
        if (i >= 2) A.a(i, i - 1) = 1;
    }
    return A;
}

} // namespace

TEST_CASE("construction and indexing") {
    TriMatrix A(3);
    CHECK(A.order() == 3);
    CHECK(A.a(3, 1) == 0);
    A.a(2, 1) = Rational(5, 2);
    CHECK(A.a(2, 1) == Rational(5, 2));
    CHECK_THROWS_AS(A.a(1, 2), std::out_of_range);
    CHECK_THROWS_AS(A.a(4, 1), std::out_of_range);
    CHECK_THROWS_AS(A.a(0, 1), std::out_of_range);

    CHECK_THROWS_AS(TriMatrix({{Rational(1)}, {Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(TriMatrix(-1), std::invalid_argument);
    CHECK(TriMatrix{}.order() == 0);
}

TEST_CASE("factorial products") {
    TriMatrix A({{Rational(2)}, {Rational(3), Rational(5)}, {Rational(7), Rational(11), Rational(13)}});
    CHECK(factorial_product(A, 1, 1) == 2);
    CHECK(factorial_product(A, 2, 1) == 15);       // 3 * 5
    CHECK(factorial_product(A, 3, 1) == 1001);     // 7 * 11 * 13
    CHECK(factorial_product(A, 3, 2) == 143);      // 11 * 13
    CHECK_THROWS_AS(factorial_product(A, 1, 2), std::out_of_range);
}

TEST_CASE("corners") {
    TriMatrix A({{Rational(2)}, {Rational(3), Rational(5)}, {Rational(7), Rational(11), Rational(13)}});
    SECTION("interior corner is the block from (j, j) to (i, i)") {
        const Corner c = corner(A, 3, 2);
        CHECK(c.matrix.order() == 2);
        CHECK(c.matrix.a(1, 1) == 5);
        CHECK(c.matrix.a(2, 1) == 11);
        CHECK(c.matrix.a(2, 2) == 13);
    }
    SECTION("degenerate corners are empty and evaluate to 1") {
        CHECK(corner(A, 0, 1).matrix.order() == 0);
        CHECK(corner(A, 3, 4).matrix.order() == 0);
        CHECK(pper(corner(A, 0, 1).matrix) == 1);
        CHECK(ddet(corner(A, 3, 4).matrix) == 1);
    }
    SECTION("out-of-range pairs are rejected") {
        CHECK_THROWS_AS(corner(A, 2, 3), std::out_of_range);
        CHECK_THROWS_AS(corner(A, 4, 1), std::out_of_range);
    }
}

TEST_CASE("small closed values") {
    SECTION("order 0 and order 1") {
        CHECK(pper(TriMatrix{}) == 1);
        CHECK(ddet(TriMatrix{}) == 1);
        TriMatrix A(1);
        A.a(1, 1) = Rational(-7, 3);
        CHECK(pper(A) == Rational(-7, 3));
        CHECK(ddet(A) == Rational(-7, 3));
    }
    SECTION("order 2 by hand") {
        // pper = a11 a22 + a21 a22, ddet = a11 a22 - a21 a22.
        TriMatrix A({{Rational(2)}, {Rational(3), Rational(5)}});
        CHECK(pper(A) == 25);
        CHECK(ddet(A) == -5);
        CHECK(pper_def(A) == 25);
        CHECK(ddet_def(A) == -5);
    }
    SECTION("all-ones matrices count compositions") {
        for (int n = 1; n <= 8; ++n) {
            CHECK(pper(ones(n)) == ipow(2, static_cast<unsigned long>(n - 1)));
            CHECK(ddet(ones(n)) == (n == 1 ? 1 : 0));
        }
    }
    SECTION("two-diagonal unit matrix yields Fibonacci numbers") {
        Rational prev = 1, cur = 1; // F_1, F_2
        for (int n = 1; n <= 10; ++n) {
            CHECK(pper(fibonacci_matrix(n)) == cur); // pper of order n is F_{n+1}
            const Rational next = prev + cur;
            prev = cur;
            cur = next;
        }
    }
}

TEST_CASE("composition enumeration is lexicographic and complete") {
    std::vector<std::vector<int>> seen;
    detail::for_each_composition(3, [&](const std::vector<int>& c) { seen.push_back(c); });
    const std::vector<std::vector<int>> expected{{1, 1, 1}, {1, 2}, {2, 1}, {3}};
    CHECK(seen == expected);

    int count = 0;
    detail::for_each_composition(8, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 128);
}

TEST_CASE("three evaluation paths agree on random matrices") {
    std::mt19937 rng(20240702);
    for (int trial = 0; trial < 60; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 7);
        const TriMatrix A = testing::random_tri_matrix(rng, order, -5, 5, 2);

        const Rational pd = pper_def(A);
        const Rational dd = ddet_def(A);
        CHECK(pper_fast(A) == pd);
        CHECK(ddet_fast(A) == dd);
        for (int i = 1; i <= order; ++i) {
            CHECK(pper_expand_table(A, i) == pd);
            CHECK(ddet_expand_table(A, i) == dd);
        }
    }
}

TEST_CASE("expansion rejects out-of-range rows") {
    TriMatrix A(3);
    CHECK_THROWS_AS(pper_expand_table(A, 0), std::out_of_range);
    CHECK_THROWS_AS(ddet_expand_table(A, 4), std::out_of_range);
}
