#include "capelli/superalgebra.hpp"
#include "capelli/tableaux.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace capelli;

namespace {

VarId v(const Symbol& s, int j) { return make_var(s, j); }

SuperPolynomial var(const Symbol& s, int j) { return SuperPolynomial::variable(s, j); }

} // namespace

TEST_CASE("symbols and parities") {
    CHECK(Symbol::alpha(1).lie_parity() == 0);
    CHECK(Symbol::beta(1).lie_parity() == 1);
    CHECK(Symbol::x(1).lie_parity() == 1);
    CHECK(Symbol::gamma().lie_parity() == 0);
    CHECK(var_odd(v(Symbol::alpha(2), 1)));
    CHECK_FALSE(var_odd(v(Symbol::x(2), 1)));
    CHECK_FALSE(var_odd(v(Symbol::beta(2), 1)));
    CHECK(Symbol::parse("a3") == Symbol::alpha(3));
    CHECK(Symbol::parse("x12").to_string() == "x12");
    CHECK_THROWS_AS(Symbol::parse("q1"), Error);
    CHECK_THROWS_AS(Symbol::parse("x"), Error);
    CHECK_THROWS_AS(Symbol::x(0), Error);
    CHECK(Symbol::alpha(5) < Symbol::beta(1));
    CHECK(Symbol::beta(5) < Symbol::x(1));
}

TEST_CASE("supercommutative multiplication") {
    const auto a1 = var(Symbol::alpha(1), 1), a2 = var(Symbol::alpha(1), 2);
    CHECK((a1 * a1).is_zero());
    CHECK(a2 * a1 == a1 * a2 * Rational(-1));
    const auto x1 = var(Symbol::x(1), 1), x2 = var(Symbol::x(2), 2);
    CHECK(x1 * x2 == x2 * x1);
    CHECK(x1 * a1 == a1 * x1);
    CHECK(!(x1 * x1).is_zero());
    // Associativity on a mixed triple.
    CHECK((a1 * x2) * a2 == a1 * (x2 * a2));
}

TEST_CASE("polarization operators") {
    const Symbol g = Symbol::gamma(), x1 = Symbol::x(1);
    const Polarization D{x1, g};
    const auto p = var(g, 1) * var(g, 2);
    const auto expected = var(x1, 1) * var(g, 2) - var(g, 1) * var(x1, 2);
    CHECK(polarize(D, p) == expected);
    CHECK(polarize(D, SuperPolynomial::constant(5)).is_zero());
    // Even derivation on a square: D_{x2,x1}(x1|1)^2 = 2 (x1|1)(x2|1).
    const Polarization E{Symbol::x(2), x1};
    CHECK(polarize(E, var(x1, 1) * var(x1, 1)) == var(x1, 1) * var(Symbol::x(2), 1) * Rational(2));
    // Words act right to left.
    const auto q = var(Symbol::x(3), 1);
    const auto r = apply_word({Polarization{Symbol::x(1), Symbol::x(2)}, Polarization{Symbol::x(2), Symbol::x(3)}}, q);
    CHECK(r == var(Symbol::x(1), 1));
    CHECK(apply_word({Polarization{Symbol::x(2), Symbol::x(3)}, Polarization{Symbol::x(1), Symbol::x(2)}}, q).is_zero());
}

TEST_CASE("biproduct of a mixed word") {
    const Symbol a1 = Symbol::alpha(1), a2 = Symbol::alpha(2), x3 = Symbol::x(3);
    auto term = [&](Symbol s1, Symbol s2, Symbol s3) {
        return SuperPolynomial::product_of({v(s1, 1), v(s2, 2), v(s3, 3)});
    };
    // Written-order products; product_of absorbs the Koszul signs.
    const auto expected = term(x3, a2, a1) + term(x3, a1, a2) - term(a2, x3, a1) - term(a1, x3, a2) + term(a2, a1, x3) +
                          term(a1, a2, x3);
    const auto value = biproduct({a1, a2, x3}, {1, 2, 3});
    CHECK(value == expected);
    // Both Laplace expansions along the last letter and along the last place.
    const auto lap1 = biproduct({a1, a2}, {1, 2}) * biproduct({x3}, {3}) + biproduct({a1, x3}, {1, 2}) * biproduct({a2}, {3}) +
                      biproduct({a2, x3}, {1, 2}) * biproduct({a1}, {3});
    const auto lap2 = biproduct({a1, a2}, {1, 2}) * biproduct({x3}, {3}) - biproduct({a1, a2}, {1, 3}) * biproduct({x3}, {2}) +
                      biproduct({a1, a2}, {2, 3}) * biproduct({x3}, {1});
    CHECK(value == lap1);
    CHECK(value == lap2);
}

TEST_CASE("proper biproduct is a signed determinant") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Symbol> w;
        std::vector<int> places(n);
        std::iota(places.begin(), places.end(), 1);
        for (int i = 1; i <= n; ++i) w.push_back(Symbol::x(i));
        // Independent oracle: the permutation sum of the determinant of [(x_i|j)].
        SuperPolynomial det;
        std::vector<int> perm = places;
        do {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
            std::vector<VarId> vars;
            for (int i = 0; i < n; ++i) vars.push_back(v(Symbol::x(i + 1), perm[i]));
            det += SuperPolynomial::product_of(vars, inversions % 2 ? -1 : 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        const Rational sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
        CHECK(biproduct(w, places) == det * sign);
    }
}

TEST_CASE("positive virtual biproduct is a permanent") {
    const Symbol a1 = Symbol::alpha(1), a2 = Symbol::alpha(2);
    const auto value = biproduct({a1, a2}, {1, 2});
    CHECK(value.size() == 2);
    CHECK(biproduct({a2, a1}, {1, 2}) == value);
    CHECK_FALSE(biproduct({a1, a1}, {1, 2}).is_zero());
    CHECK(biproduct({Symbol::x(1), Symbol::x(1)}, {1, 2}).is_zero());
    CHECK(biproduct({a1}, {1, 2}).is_zero());
    CHECK_THROWS_AS(biproduct({Symbol::gamma()}, {1}), Error);
}

TEST_CASE("polarization commutes with biproducts") {
    const Symbol a1 = Symbol::alpha(1), x1 = Symbol::x(1), x2 = Symbol::x(2), x3 = Symbol::x(3);
    CHECK(polarize(Polarization{x2, x1}, biproduct({x1, x3}, {1, 2})) == biproduct({x2, x3}, {1, 2}));
    CHECK(polarize(Polarization{x1, a1}, biproduct({a1, x2}, {1, 2})) == biproduct({x1, x2}, {1, 2}));
    // An odd operator passing an odd-parity letter picks up a sign.
    CHECK(polarize(Polarization{x1, a1}, biproduct({x2, a1}, {1, 2})) == biproduct({x2, x1}, {1, 2}) * Rational(-1));
}
