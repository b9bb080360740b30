#include <doctest.h>

#include "fmchow/errors.hpp"
#include "fmchow/polynomial.hpp"
#include "fmchow/polynomial_io.hpp"

using namespace fmchow;

namespace {
TablePtr hx() { return make_table({"h1", "h2", "x12"}, {1, 1, 1}); }
}

TEST_CASE("arithmetic") {
    const auto t = hx();
    const auto h1 = Polynomial::variable(t, "h1");
    const auto h2 = Polynomial::variable(t, "h2");
    CHECK((h1 + h2) * (h1 - h2) == h1 * h1 - h2 * h2);
    CHECK(h1 + Polynomial(t) == h1);
    CHECK(Rational(2) * (Rational(1, 2) * h1) == h1);
    CHECK((h1 - h1).is_zero());
    CHECK((h1 + h2).pow(2) == h1 * h1 + Rational(2) * h1 * h2 + h2 * h2);
    CHECK((h1 * h2 + h1).weighted_degree() == 2);
    CHECK_FALSE((h1 * h2 + h1).is_homogeneous());
    CHECK((Rational(3) * h1 + h2).monic().leading_term().coeff == 1);
}

TEST_CASE("coefficients are stored in lowest terms") {
    const auto t = hx();
    Monomial h1;
    h1.set(0, 1);
    const auto p = Polynomial::from_terms(t, {{h1, Rational(-4, 2)}});
    CHECK(p == Polynomial::variable(t, "h1").scaled(-2));
    CHECK(p.to_string() == "-2*h1");
    CHECK(Polynomial::constant(t, Rational(6, 3)) == Polynomial::constant(t, 2));
    CHECK(Polynomial::variable(t, "h2").scaled(Rational(2, 4)) == Polynomial::variable(t, "h2").scaled(Rational(1, 2)));
}

TEST_CASE("tables must agree") {
    const auto a = hx();
    const auto b = make_table({"h1"}, {1});
    CHECK_THROWS_AS(Polynomial::variable(a, "h1") + Polynomial::variable(b, "h1"), ArgumentError);
    CHECK_THROWS_AS(Polynomial::variable(a, "y"), ArgumentError);
    CHECK_THROWS_AS(make_table({"a", "a"}, {1, 1}), ArgumentError);
}

TEST_CASE("exponent overflow") {
    const auto t = hx();
    CHECK_THROWS_AS(Polynomial::variable(t, "h1").pow(300), ResourceError);
}

TEST_CASE("term orders") {
    const auto t = hx();
    const std::vector<int> w{1, 1, 1};
    const auto a = Monomial::variable(0) * Monomial::variable(2);  // h1*x12
    const auto b = Monomial::variable(1, 2);                        // h2^2
    const TermOrder revlex(OrderKind::DegRevLex);
    const TermOrder lex(OrderKind::DegLex);
    CHECK(revlex.compare(a, b, w) < 0);
    CHECK(lex.compare(a, b, w) > 0);
    const TermOrder boundary(OrderKind::DegRevLex, {2, 0, 1});
    CHECK(boundary.compare(a, b, w) > 0);
    CHECK_THROWS_AS(TermOrder(OrderKind::DegLex, {0, 0, 1}), ArgumentError);
}

TEST_CASE("parsing") {
    const auto t = hx();
    const auto p = parse_polynomial("x12^2 - (h1+h2)*x12 + h1*h2", t);
    CHECK(p.term_count() == 4);
    CHECK(parse_polynomial("3/2*h1 - 1/2*h1", t) == Polynomial::variable(t, "h1"));
    CHECK(parse_polynomial(p.to_string(), t) == p);
    CHECK_THROWS_AS(parse_polynomial("h1 +", t), ArgumentError);
    CHECK_THROWS_AS(parse_polynomial("h3", t), ArgumentError);
    CHECK_THROWS_AS(parse_polynomial("h1/h2", t), ArgumentError);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
}

TEST_CASE("json round trip") {
    const auto t = hx();
    const auto p = parse_polynomial("-3/2*h1^2*x12 + h2 - 7", t);
    const auto j = polynomial_to_json(p);
    CHECK(polynomial_from_json(j, t) == p);
    CHECK(polynomial_to_json(polynomial_from_json(j, t)).dump() == j.dump());
    CHECK(j[0]["coeff"] == "-3/2");
}
