#include "capelli/tableaux.hpp"

#include <doctest.h>

using namespace capelli;

namespace {

SuperPolynomial xv(int i, int j) { return SuperPolynomial::variable(Symbol::x(i), j); }

} // namespace

TEST_CASE("tableau parsing and Deruyts tableaux") {
    const Tableau t = parse_tableau("x1 x2; x1");
    CHECK(t == deruyts(Partition{2, 1}));
    CHECK(t.shape() == Partition{2, 1});
    CHECK(parse_place_tableau("1 2; 1") == deruyts_places(Partition{2, 1}));
    CHECK(parse_tableau("a1 a1; a2") == coderuyts_positive(Partition{2, 1}));
    CHECK(parse_tableau("b1 b2; b1") == deruyts_negative(Partition{2, 1}));
    CHECK(transpose(parse_tableau("x1 x2; x3")) == parse_tableau("x1 x3; x2"));
    CHECK_THROWS_AS(parse_tableau("x1; x1 x2"), Error);
    CHECK_THROWS_AS(parse_place_tableau("1 z"), Error);
    CHECK(parse_tableau("").rows.empty());
}

TEST_CASE("superstandard and standard predicates") {
    CHECK(is_superstandard(parse_tableau("x1 x2; x1")));
    CHECK_FALSE(is_superstandard(parse_tableau("x1 x1; x2")));
    CHECK(is_superstandard(parse_tableau("a1 a1; a2")));
    CHECK_FALSE(is_superstandard(parse_tableau("a1 a2; a1")));
    CHECK(is_standard(parse_place_tableau("1 2; 1")));
    CHECK_FALSE(is_standard(parse_place_tableau("1 1; 2")));
    CHECK(superstandard_tableaux(Partition{2, 1}, {{Symbol::x(1), 1}, {Symbol::x(2), 1}, {Symbol::x(3), 1}}).size() == 2);
    CHECK(superstandard_tableaux(Partition{2, 1}, {{Symbol::x(1), 2}, {Symbol::x(2), 1}}).size() == 1);
    CHECK(standard_place_tableaux(Partition{2, 1}, {{1, 1}, {2, 1}, {3, 1}}).size() == 2);
}

TEST_CASE("bitableau values") {
    const auto v = highest_weight_vector(Partition{2, 1}, 2);
    const auto det = xv(1, 1) * xv(2, 2) - xv(1, 2) * xv(2, 1);
    CHECK(v == det * xv(1, 1) * Rational(-1));
    CHECK(bitableau_value(parse_tableau("x1 x2"), parse_place_tableau("1 2")) == biproduct({Symbol::x(1), Symbol::x(2)}, {1, 2}));
    CHECK(bitableau_value(parse_tableau("x1 x2"), parse_place_tableau("1; 2")).is_zero());
    CHECK(highest_weight_vector(Partition{}, 2) == SuperPolynomial::constant(1));
    CHECK_THROWS_AS(highest_weight_vector(Partition{3}, 2), Error);
}

TEST_CASE("bitableau monomials are row-major") {
    const auto w = bitableau_monomial(parse_tableau("x1 x2; x3"), parse_tableau("a1 a1; a2"));
    REQUIRE(w.size() == 3);
    CHECK(w[0] == e(Symbol::x(1), Symbol::alpha(1)));
    CHECK(w[1] == e(Symbol::x(2), Symbol::alpha(1)));
    CHECK(w[2] == e(Symbol::x(3), Symbol::alpha(2)));
    CHECK_THROWS_AS(bitableau_monomial(parse_tableau("x1"), parse_tableau("a1 a1")), Error);
}

TEST_CASE("straightening") {
    const auto p = xv(1, 2) * xv(2, 1);
    const auto s = straighten(p, {{Symbol::x(1), 1}, {Symbol::x(2), 1}}, {{1, 1}, {2, 1}});
    CHECK(s.value() == p);
    CHECK(s.terms.size() == 2);
    for (const auto& [b, c] : s.terms) {
        CHECK(is_superstandard(b.left));
        CHECK(is_standard(b.right));
    }
    CHECK(straighten(SuperPolynomial{}, {}, {}).terms.empty());
    CHECK_THROWS_AS(straighten(xv(3, 1) * xv(1, 2), {{Symbol::x(1), 1}, {Symbol::x(2), 1}}, {{1, 1}, {2, 1}}), Error);
}

TEST_CASE("scalar extraction") {
    const auto v = highest_weight_vector(Partition{2, 1}, 2);
    CHECK(extract_scalar(v, v) == 1);
    CHECK(extract_scalar(v * Rational(-7, 2), v) == Rational(-7, 2));
    CHECK(extract_scalar(SuperPolynomial{}, v) == 0);
    CHECK_THROWS_AS(extract_scalar(v + xv(1, 1), v), NotProportional);
    CHECK_THROWS_AS(extract_scalar(v, SuperPolynomial{}), Error);
}
