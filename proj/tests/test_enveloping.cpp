#include "capelli/enveloping.hpp"

#include <doctest.h>

using namespace capelli;

namespace {

const Symbol A = Symbol::alpha(1);

UElement gen(const UGenerator& g) { return UElement::generator(g); }
UElement word(const std::string& text, const Rational& c = 1) { return UElement::word(parse_word(text), c); }

} // namespace

TEST_CASE("generator parity and words") {
    CHECK(e(1, 2).parity() == 0);
    CHECK(e(Symbol::x(1), A).parity() == 1);
    CHECK(e(Symbol::beta(1), Symbol::x(2)).parity() == 0);
    const UWord w = parse_word("e[x1,a1] e[a1,x2]");
    REQUIRE(w.size() == 2);
    CHECK(word_to_string(w) == "e[x1,a1] e[a1,x2]");
    CHECK(parse_word("1").empty());
    CHECK_THROWS_AS(parse_word("e[x1]"), Error);
    CHECK_THROWS_AS(parse_word("f[x1,x2]"), Error);
}

TEST_CASE("supercommutators") {
    const Symbol x1 = Symbol::x(1), x2 = Symbol::x(2);
    CHECK(supercommutator(e(x1, A), e(A, x2)) == gen(e(x1, x2)));
    CHECK(supercommutator(e(x1, A), e(A, x1)) == gen(e(x1, x1)) + gen(e(A, A)));
    CHECK(supercommutator(e(1, 2), e(3, 4)).is_zero());
    CHECK(supercommutator(e(1, 2), e(2, 1)) == gen(e(1, 1)) - gen(e(2, 2)));
}

TEST_CASE("PBW normal form") {
    const Symbol x1 = Symbol::x(1), x2 = Symbol::x(2);
    CHECK(pbw_normal_form(gen(e(x2, A)) * gen(e(x1, A))) == gen(e(x1, A)) * gen(e(x2, A)) * Rational(-1));
    CHECK(pbw_normal_form(gen(e(x1, A)) * gen(e(x1, A))).is_zero());
    CHECK(pbw_normal_form(word("e[x2,x1] e[x1,x2]")) == word("e[x1,x2] e[x2,x1]") + word("e[x2,x2]") - word("e[x1,x1]"));
    // Already sorted input is a fixed point.
    const UElement sorted = word("e[x1,x1] e[x1,x2] e[x2,x1]");
    CHECK(pbw_normal_form(sorted) == sorted);
}

TEST_CASE("adjoint action") {
    const Symbol x1 = Symbol::x(1), x2 = Symbol::x(2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int h = 1; h <= 2; ++h) {
                const UGenerator g = e(i, j);
                const UElement a = ad(g, gen(e(Symbol::x(h), A)));
                CHECK(a == (j == h ? gen(e(Symbol::x(i), A)) : UElement{}));
                const UElement b = ad(g, gen(e(A, Symbol::x(h))));
                CHECK(b == (h == i ? gen(e(A, Symbol::x(j))) * Rational(-1) : UElement{}));
            }
    CHECK(ad(e(x1, x2), UElement::scalar(1)).is_zero());
    // The Casimir e11 + e22 is central.
    CHECK(pbw_normal_form(ad(e(1, 2), gen(e(1, 1)) + gen(e(2, 2)))).is_zero());
}

TEST_CASE("column determinant and permanent") {
    const auto m = capelli_matrix(2, {1, 0});
    CHECK(cdet(m) == word("e[x1,x1] e[x2,x2]") + word("e[x2,x2]") - word("e[x2,x1] e[x1,x2]"));
    CHECK(cper(m) == word("e[x1,x1] e[x2,x2]") + word("e[x2,x2]") + word("e[x2,x1] e[x1,x2]"));
    CHECK_THROWS_AS(cdet(AffineMatrix{{AffineEntry{}, AffineEntry{}}}), Error);
}

TEST_CASE("devirtualization") {
    const Symbol x1 = Symbol::x(1);
    CHECK(devirtualize(gen(e(x1, A)) * gen(e(A, x1))) == gen(e(x1, x1)));
    CHECK_THROWS_AS(devirtualize(gen(e(x1, A))), Error);
    CHECK(devirtualize(word("e[x1,x2]")) == word("e[x1,x2]"));
}

TEST_CASE("module action") {
    const auto p = SuperPolynomial::variable(Symbol::x(2), 1);
    CHECK(act_on_module(word("e[x1,x2]"), p) == SuperPolynomial::variable(Symbol::x(1), 1));
    CHECK(act_on_module(word("e[x2,x1]"), p).is_zero());
    CHECK(act_on_module(UElement::scalar(3), p) == p * Rational(3));
}
