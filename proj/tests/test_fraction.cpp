// Recurrent fractions: truncation recurrences, the triangular-matrix
// representation of numerators and denominators, symmetric-function
// identities, and the certified dominant-root extraction.

#include "oracles.hpp"
#include "recfrac/fraction.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace recfrac;

namespace {

std::vector<Rational> rat_vec(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("monic recurrence polynomial") {
    const MonicRecurrencePoly p(rat_vec({12, -6, 1}));
    CHECK(p.order() == 3);
    CHECK(p.a(1) == 12);
    CHECK(p.a(3) == 1);
    CHECK_THROWS_AS(p.a(0), std::out_of_range);
    CHECK_THROWS_AS(p.a(4), std::out_of_range);
    CHECK(p.residual_at(Rational(0)) == -1);
    CHECK(p.residual_at(Rational(1)) == 1 - 12 + 6 - 1);

    CHECK_THROWS_AS(MonicRecurrencePoly(std::vector<Rational>{}), std::invalid_argument);
    CHECK_THROWS_AS(MonicRecurrencePoly(rat_vec({1, 0})), std::domain_error);
}

TEST_CASE("polynomial display") {
    CHECK(polynomial_display(MonicRecurrencePoly(rat_vec({12, -6, 1}))) ==
          "x^3 = 12x^2 - 6x + 1");
    CHECK(polynomial_display(MonicRecurrencePoly(rat_vec({-1, 1}))) == "x^2 = -x + 1");
    CHECK(polynomial_display(MonicRecurrencePoly(rat_vec({2, 0, -3}))) == "x^3 = 2x^2 - 3");
    CHECK(polynomial_display(MonicRecurrencePoly(rat_vec({0, 1}))) == "x^2 = 1");
    CHECK(polynomial_display(MonicRecurrencePoly({Rational(1, 2), Rational(-3, 4)})) ==
          "x^2 = 1/2x - 3/4");
    CHECK(polynomial_display(super_poly(7, 2, +1)) ==
          "x^7 = 448x^6 + 672x^5 + 560x^4 + 280x^3 + 84x^2 + 14x + 1");
}

TEST_CASE("recurrent fraction schedules") {
    const RecurrentFraction f =
        RecurrentFraction::periodic(2, {rat_vec({1, 2}), rat_vec({3, 4}), rat_vec({5, 6})});
    CHECK(f.order() == 2);
    CHECK(f.is_periodic());
    CHECK(f.stored_columns() == 3);
    CHECK(f.column(1) == rat_vec({1, 2}));
    CHECK(f.column(4) == rat_vec({1, 2})); // wraps around
    CHECK(f.column(6) == rat_vec({5, 6}));
    CHECK_THROWS_AS(f.column(0), std::out_of_range);

    const RecurrentFraction g = RecurrentFraction::finite(2, {rat_vec({1, 2}), rat_vec({3, 4})});
    CHECK_FALSE(g.is_periodic());
    CHECK(g.column(2) == rat_vec({3, 4}));
    CHECK_THROWS_AS(g.column(3), std::out_of_range);

    CHECK_THROWS_AS(RecurrentFraction::periodic(0, {rat_vec({})}), std::invalid_argument);
    CHECK_THROWS_AS(RecurrentFraction::periodic(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(RecurrentFraction::periodic(2, {rat_vec({1})}), std::invalid_argument);
}

TEST_CASE("golden ratio truncations") {
    const RecurrentFraction f = from_polynomial(MonicRecurrencePoly(rat_vec({1, 1})));
    const std::vector<Truncation> tr = truncations(f, 5);
    REQUIRE(tr.size() == 5);
    const std::vector<Rational> expected{Rational(1), Rational(2), Rational(3, 2), Rational(5, 3),
                                         Rational(8, 5)};
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(tr[i].value.has_value());
        CHECK(*tr[i].value == expected[i]);
    }
    CHECK(tr[4].p == 8);
    CHECK(tr[4].q == 5);
    CHECK(truncation(f, 5).p == 8);
}

TEST_CASE("order-1 fractions are constant") {
    const RecurrentFraction f = from_polynomial(MonicRecurrencePoly({Rational(7, 3)}));
    for (long m = 1; m <= 6; ++m) {
        const Truncation t = truncation(f, m);
        REQUIRE(t.value.has_value());
        CHECK(*t.value == Rational(7, 3));
    }
}

TEST_CASE("undefined truncations are reported, not invented") {
    // x^2 = 0x - 1: every even-index denominator vanishes.
    const RecurrentFraction f = from_polynomial(MonicRecurrencePoly(rat_vec({0, -1})));
    const std::vector<Truncation> tr = truncations(f, 6);
    CHECK(tr[0].value.has_value());
    CHECK_FALSE(tr[1].value.has_value());
    CHECK(tr[2].value.has_value());
    CHECK_FALSE(tr[3].value.has_value());
    CHECK(*tr[2].value == 0);
}

TEST_CASE("matrix representation of truncations") {
    std::mt19937 rng(20240703);
    SECTION("numerator and denominator matrices reproduce P and Q") {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            std::vector<Rational> column;
            for (int i = 0; i < n; ++i)
                column.push_back(testing::random_nonzero_rational(rng, -5, 5, 2));
            const RecurrentFraction f = RecurrentFraction::periodic(n, {column});
            const long m = 1 + static_cast<long>(rng() % 8);
            const std::vector<Truncation> tr = truncations(f, m);
            CHECK(pper(numerator_matrix(f, m)) == tr.back().p);
            CHECK(pper(denominator_matrix(f, m)) == tr.back().q);
        }
    }
    SECTION("numerator matrix layout") {
        // Column (a1, a2, a3): diagonal a1, first subdiagonal a2/a1,
        // second subdiagonal a3/a2, zero beyond the bandwidth.
        const RecurrentFraction f = RecurrentFraction::periodic(3, {rat_vec({2, 3, 5})});
        const TriMatrix A = numerator_matrix(f, 4);
        CHECK(A.a(1, 1) == 2);
        CHECK(A.a(2, 1) == Rational(3, 2));
        CHECK(A.a(3, 1) == Rational(5, 3));
        CHECK(A.a(4, 1) == 0);
        CHECK(A.a(4, 4) == 2);
    }
    SECTION("zero interior coefficient makes the ratios undefined") {
        const RecurrentFraction f = RecurrentFraction::periodic(3, {rat_vec({1, 0, 4})});
        CHECK_THROWS_AS(numerator_matrix(f, 3), std::domain_error);
    }
    SECTION("denominator lags the schedule by one column") {
        const RecurrentFraction f = RecurrentFraction::finite(
            2, {rat_vec({1, 1}), rat_vec({2, 3}), rat_vec({4, 5})});
        const TriMatrix D = denominator_matrix(f, 3);
        CHECK(D.order() == 2);
        CHECK(D.a(1, 1) == 2); // a_{1,2}
        CHECK(D.a(2, 2) == 4); // a_{1,3}
        CHECK(D.a(2, 1) == Rational(5, 4));
    }
}

TEST_CASE("the denominator of a 1-periodic fraction is the previous numerator") {
    std::mt19937 rng(20240704);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> column;
        for (int i = 0; i < n; ++i) column.push_back(testing::random_rational(rng, -4, 4, 2));
        if (column.back() == 0) column.back() = 1;
        const RecurrentFraction f = RecurrentFraction::periodic(n, {column});
        const std::vector<Truncation> tr = truncations(f, 9);
        for (long m = 2; m <= 9; ++m)
            CHECK(tr[static_cast<std::size_t>(m - 1)].q == tr[static_cast<std::size_t>(m - 2)].p);
    }
}

TEST_CASE("recurrence values and symmetric functions") {
    SECTION("elementary symmetric polynomials") {
        const std::vector<Rational> sigma = elementary_symmetric(rat_vec({1, 2, 3}));
        REQUIRE(sigma.size() == 4);
        CHECK(sigma[0] == 1);
        CHECK(sigma[1] == 6);
        CHECK(sigma[2] == 11);
        CHECK(sigma[3] == 6);
    }
    SECTION("polynomial from roots") {
        const MonicRecurrencePoly p = poly_from_roots(rat_vec({1, 2, 3}));
        CHECK(p.coefficients() == rat_vec({6, -11, 6}));
        CHECK(p.residual_at(Rational(1)) == 0);
        CHECK(p.residual_at(Rational(2)) == 0);
        CHECK(p.residual_at(Rational(3)) == 0);
        CHECK(p.residual_at(Rational(4)) == 6);
        CHECK_THROWS_AS(poly_from_roots(rat_vec({1, 0})), std::domain_error);
    }
    SECTION("recurrence value equals the 1-periodic numerator") {
        const MonicRecurrencePoly p(rat_vec({1, 1}));
        CHECK(recurrence_value(p, 0) == 1);
        CHECK(recurrence_value(p, 5) == 8);
        const std::vector<Truncation> tr = truncations(from_polynomial(p), 7);
        for (long m = 1; m <= 7; ++m)
            CHECK(recurrence_value(p, m) == tr[static_cast<std::size_t>(m - 1)].p);
    }
    SECTION("complete homogeneous values against direct enumeration") {
        std::mt19937 rng(20240705);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t count = 1 + rng() % 4;
            std::vector<Rational> xs;
            for (std::size_t i = 0; i < count; ++i)
                xs.push_back(testing::random_rational(rng, -3, 3, 2)); // zeros allowed
            const long m = static_cast<long>(rng() % 6);
            CHECK(complete_homogeneous(xs, m) == complete_homogeneous_enumerated(xs, m));
        }
        CHECK(complete_homogeneous(rat_vec({0, 0}), 3) == 0);
        CHECK(complete_homogeneous(rat_vec({0, 0}), 0) == 1);
        CHECK(complete_homogeneous(rat_vec({2, 3}), 2) == 4 + 6 + 9);
    }
}

TEST_CASE("dominant root extraction") {
    SECTION("converges to a known dominant root") {
        const MonicRecurrencePoly p = poly_from_roots({Rational(5), Rational(1, 2), Rational(-1, 3)});
        const RootResult res = dominant_root(p, 20);
        REQUIRE(res.converged);
        CHECK(abs_rat(res.approximation - 5) < Rational(1, pow10(18)));
        CHECK(res.certified_digits >= 18);
        CHECK(res.iterations_used <= 200);
        CHECK(res.trace.size() == static_cast<std::size_t>(res.iterations_used));
    }
    SECTION("rejects agreement that is not a root (oscillating truncations)") {
        const RootResult res = dominant_root(MonicRecurrencePoly(rat_vec({0, -1})), 8, 50);
        CHECK_FALSE(res.converged);
        CHECK(res.certified_digits == 0);
        CHECK(res.diagnostic.find("residual") != std::string::npos);
    }
    SECTION("reports plain non-convergence") {
        // x^2 = -1x - 1 has complex roots of equal modulus: values keep moving.
        const RootResult res = dominant_root(MonicRecurrencePoly(rat_vec({-1, -1})), 10, 40);
        CHECK_FALSE(res.converged);
    }
    SECTION("argument validation") {
        const MonicRecurrencePoly p(rat_vec({1, 1}));
        CHECK_THROWS_AS(dominant_root(p, 0), std::invalid_argument);
        CHECK_THROWS_AS(dominant_root(p, 10, 2), std::invalid_argument);
    }
}

TEST_CASE("ratio limit residual check") {
    const MonicRecurrencePoly p(rat_vec({1, 1}));
    // Golden ratio enclosure, width 10^-10.
    const DecimalInterval phi{parse_rational("1.6180339887"),
                              parse_rational("1.6180339887") + Rational(1, pow10(10)), 10};
    const auto far = lemma1_limit_check(p, phi, 5);
    const auto near = lemma1_limit_check(p, phi, 25);
    REQUIRE(far.has_value());
    REQUIRE(near.has_value());
    CHECK(*near < *far);
    CHECK(*near < Rational(1, pow10(8)));

    // Undefined ratio: u_1 = 0 for x^2 = 0x - 1.
    CHECK_FALSE(lemma1_limit_check(MonicRecurrencePoly(rat_vec({0, -1})), phi, 2).has_value());
}

TEST_CASE("super polynomials") {
    const MonicRecurrencePoly p = super_poly(7, 2, +1);
    CHECK(p.coefficients() == rat_vec({448, 672, 560, 280, 84, 14, 1}));
    CHECK(super_poly(3, 2, -1).coefficients() == rat_vec({12, -6, 1}));
    CHECK(super_poly(2, 1, +1).coefficients() == rat_vec({2, 1}));
    CHECK_THROWS_AS(super_poly(1, 2, +1), std::invalid_argument);
    CHECK_THROWS_AS(super_poly(3, 0, +1), std::invalid_argument);
    CHECK_THROWS_AS(super_poly(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(super_poly(3, 1, -1), std::domain_error);
}

TEST_CASE("catalogued degree-7 fraction truncations") {
    // x^7 = 448x^6 + 672x^5 + 560x^4 + 280x^3 + 84x^2 + 14x + 1.
    const RecurrentFraction f = super_fraction(7, 2);
    const std::vector<Truncation> tr = truncations(f, 9);
    const std::vector<std::string> expected{
        "448",
        "899/2",
        "808197/1798",
        "242188503/538798",
        "217726387201/484377006",
        "195735053879083/435452774402",
        "1231754601116629931/2740290754307162",
        "553670954436947106368/1231754601116629931",
        "1666566046544461900687/3707617998461699373"};
    REQUIRE(tr.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        REQUIRE(tr[i].value.has_value());
        CHECK(rational_to_string(*tr[i].value) == expected[i]);
    }

    // The ninth truncation is already within 10^-25 of the root.
    const RootResult res = dominant_root(super_poly(7, 2, +1), 26);
    REQUIRE(res.converged);
    CHECK(abs_rat(*tr[8].value - res.approximation) < Rational(1, pow10(25)));
}

TEST_CASE("truncation equality is a semi-decision") {
    const MonicRecurrencePoly p(rat_vec({1, 1}));
    const RecurrentFraction f = from_polynomial(p);
    const RecurrentFraction g = RecurrentFraction::periodic(2, {rat_vec({1, 1})});
    CHECK(truncations_agree(f, g, 30));

    const RecurrentFraction h = RecurrentFraction::periodic(2, {rat_vec({1, 2})});
    CHECK_FALSE(truncations_agree(f, h, 30));

    // Defined-vs-undefined counts as disagreement.
    const RecurrentFraction osc = from_polynomial(MonicRecurrencePoly(rat_vec({0, -1})));
    CHECK_FALSE(truncations_agree(f, osc, 30));
    CHECK_THROWS_AS(truncations_agree(f, g, 0), std::invalid_argument);
}
