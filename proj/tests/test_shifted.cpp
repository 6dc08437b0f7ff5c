#include "capelli/shifted.hpp"

#include <doctest.h>

using namespace capelli;

namespace {

Polynomial x(int i, int n) { return Polynomial::variable(i - 1, n); }

} // namespace

TEST_CASE("shifted elementary and complete polynomials") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto e = e_star_poly(k, n);
            const auto h = h_star_poly(k, n);
            CHECK(is_shifted_symmetric(e));
            CHECK(is_shifted_symmetric(h));
            for (const auto& mu : partitions_up_to(5, 99, n)) {
                CHECK(e.evaluate(mu.padded(n)) == Rational(e_star_eval(k, mu.padded(n))));
                CHECK(h.evaluate(mu.padded(n)) == Rational(h_star_eval(k, mu.padded(n))));
            }
        }
    CHECK_FALSE(is_shifted_symmetric(x(1, 2)));
    CHECK(is_shifted_symmetric(x(1, 2) + x(2, 2)));
}

TEST_CASE("Wilf polynomial equals the top shifted elementary polynomial") {
    for (int n = 1; n <= 4; ++n) CHECK(wilf_polynomial(n) == e_star_poly(n, n));
}

TEST_CASE("shifted Schur polynomials") {
    CHECK(s_star_poly(Partition{}, 2) == Polynomial::constant(1, 2));
    CHECK(s_star_poly(Partition{1}, 1) == x(1, 1));
    CHECK(s_star_poly(Partition{1, 1}, 2) == h_star_poly(2, 2));
    CHECK(s_star_poly(Partition{2}, 2) == e_star_poly(2, 2));
    CHECK_THROWS_AS(s_star_poly(Partition{1}, 2, SchurConvention::Verbatim), Error);
    CHECK(std::string(to_string(frozen_schur_convention)) == "column-indexed");
}

TEST_CASE("Olshanski projection") {
    CHECK(olshanski_project(e_star_poly(2, 3)) == e_star_poly(2, 2));
    CHECK(olshanski_project(e_star_poly(3, 3)).is_zero());
    CHECK(olshanski_project(h_star_poly(2, 3)) == h_star_poly(2, 2));
}

TEST_CASE("chi images") {
    CHECK(chi(CentralSpec::H(2), 3) == e_star_poly(2, 3));
    CHECK(chi(CentralSpec::I(2), 2) == h_star_poly(2, 2));
    CHECK(chi(CentralSpec::identity(), 2) == Polynomial::constant(1, 2));
    const auto r = chi_with_certificate(CentralSpec::S(Partition{2, 1}), 3);
    CHECK(r.held_out.size() == 10);
    CHECK(r.polynomial == e_star_poly(2, 3) * e_star_poly(1, 3) - e_star_poly(3, 3) - e_star_poly(2, 3) * Rational(2));
    for (const auto& mu : partitions_up_to(6, 3))
        CHECK(r.polynomial.evaluate(conjugate(mu).padded(3)) == eigenvalue_action(CentralSpec::S(Partition{2, 1}), mu, 3));
}

TEST_CASE("J(2,2) chi image in two variables") {
    const auto a = x(1, 2), b = x(2, 2);
    auto t = [&](int i, int j) { return a.pow(i) * b.pow(j); };
    const Polynomial expected = t(4, 0) + t(3, 1) * Rational(2) + t(2, 2) * Rational(3) + t(1, 3) * Rational(2) + t(0, 4) -
                                t(3, 0) * Rational(6) - t(2, 1) * Rational(11) - t(1, 2) * Rational(11) - t(0, 3) * Rational(8) +
                                t(2, 0) * Rational(11) + t(1, 1) * Rational(19) + t(0, 2) * Rational(21) - t(1, 0) * Rational(6) -
                                t(0, 1) * Rational(18);
    CHECK(chi(CentralSpec::J(Partition{2, 2}), 2) == expected);
}

TEST_CASE("omega involution") {
    for (int k = 1; k <= 3; ++k) {
        CHECK(omega_involution(e_star_poly(k, 3)) == h_star_poly(k, 3));
        CHECK(omega_involution(h_star_poly(k, 3)) == e_star_poly(k, 3));
    }
    const auto f = e_star_poly(2, 3) * e_star_poly(1, 3);
    CHECK(omega_involution(omega_involution(f)) == f);
    const auto coords = e_star_coordinates(f);
    REQUIRE(coords.size() == 1);
    CHECK(coords.front().first == Partition{2, 1});
    CHECK(coords.front().second == 1);
}

TEST_CASE("generators are algebraically independent in low degree") {
    for (bool complete : {false, true}) {
        const auto [rank, size] = generator_independence_rank(3, 4, complete);
        CHECK(rank == size);
    }
}
