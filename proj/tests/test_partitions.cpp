#include "capelli/partitions.hpp"

#include <doctest.h>

using namespace capelli;

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("3,2") == Partition{3, 2});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 2 , 1 ") == Partition{2, 1});
    CHECK_THROWS_AS(Partition::parse("2,3"), Error);
    CHECK_THROWS_AS(Partition::parse("2,,1"), Error);
    CHECK_THROWS_AS(Partition::parse("2,"), Error);
    CHECK_THROWS_AS(Partition::parse("x"), Error);
    CHECK_THROWS_AS(Partition::parse("0"), Error);
    CHECK(Partition{3, 2}.to_string() == "3,2");
    CHECK(Partition{3, 2}[5] == 0);
    CHECK(Partition{3, 2}.padded(4) == std::vector<int>{3, 2, 0, 0});
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 2}) == Partition{2, 2, 1});
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
    for (const auto& l : partitions_up_to(6)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("dominance and containment") {
    CHECK(dominance_leq(Partition{2, 1, 1}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{2, 2}));
    CHECK(contained_in(Partition{2, 1}, Partition{3, 2}));
    CHECK_FALSE(contained_in(Partition{1, 1, 1}, Partition{3, 2}));
    CHECK(contained_in(Partition{}, Partition{}));
}

TEST_CASE("hook numbers and partition factorials") {
    for (int k = 0; k <= 6; ++k) CHECK(hook_number(Partition(std::vector<int>(k ? 1 : 0, k))) == factorial(k));
    CHECK(hook_number(Partition{2, 1}) == 3);
    CHECK(hook_number(Partition{3, 2}) == 24);
    CHECK(hook_number(Partition{}) == 1);
    CHECK(partition_factorial(Partition{3, 2}) == 12);
}

TEST_CASE("partition enumeration") {
    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(partitions_of(6, 6, 2).size() == 4);
    // Sum over w <= 5 of p(w) = 1 + 1 + 2 + 3 + 5 + 7.
    CHECK(partitions_up_to(5).size() == 19);
}

TEST_CASE("horizontal strips") {
    const auto s = horizontal_strips(Partition{3, 2}, 2);
    CHECK(s.size() == 8);
    CHECK(strip_sum(s) == 12);
    const auto z = horizontal_strips(Partition{4, 1}, 0);
    REQUIRE(z.size() == 1);
    CHECK(z.front().cells.empty());
    CHECK(z.front().annotation == 1);
    const auto two = horizontal_strips(Partition{2}, 2);
    REQUIRE(two.size() == 1);
    CHECK(two.front().annotation == 2);
    CHECK(horizontal_strips(Partition{1, 1}, 2).empty());
}

TEST_CASE("vertical strips") {
    CHECK(strip_sum(vertical_strips(Partition{2, 2, 1}, 2)) == 12);
    CHECK(vertical_strips(Partition{1}, 2).empty());
    const auto s = vertical_strips(Partition{1, 1}, 2);
    REQUIRE(s.size() == 1);
    CHECK(s.front().annotation == 2);
}

TEST_CASE("shifted elementary and complete evaluations") {
    CHECK(e_star_eval(2, {2, 2, 1}) == 12);
    CHECK(h_star_eval(2, {3, 2}) == 12);
    CHECK(e_star_eval(3, {0, 0, 0}) == 0);
    CHECK(h_star_eval(2, {0, 0}) == 0);
    CHECK(e_star_eval(1, {4, 2, 1}) == 7);
    CHECK(h_star_eval(1, {4, 2, 1}) == 7);
    CHECK(e_star_eval(0, {5}) == 1);
    CHECK_THROWS_AS(e_star_eval(3, {1, 1}), DomainError);
    CHECK_THROWS_AS(h_star_eval(-1, {1}), DomainError);
}

TEST_CASE("permutations") {
    const auto s = Permutation::from_cycles({2, 4, 5, 6, 7, 9, 11, 12}, {{6, 2, 4}, {9, 5}, {11, 7}});
    CHECK(s.cycle_maxima() == std::vector<int>{6, 9, 11, 12});
    CHECK(s(6) == 2);
    CHECK(s(4) == 6);
    CHECK(s(12) == 12);
    CHECK(s.sign() == 1);  // one 3-cycle and two transpositions: (+1)(-1)(-1)
    CHECK(Permutation::from_cycles({1, 2}, {{1, 2}}).sign() == -1);
    CHECK(all_permutations({1, 2, 3}).size() == 6);
    CHECK_THROWS_AS(Permutation({1, 2}, {1, 1}), Error);
    CHECK_THROWS_AS(Permutation({2, 1}, {1, 2}), Error);
}

TEST_CASE("Gamma statistics") {
    // Staircase (12,11,...,1) is self-conjugate, so mu~_j = 13 - j.
    std::vector<int> stair;
    for (int p = 12; p >= 1; --p) stair.push_back(p);
    const Partition mu(stair);
    const Partition c = conjugate(mu);
    CHECK(c == mu);
    const auto s = Permutation::from_cycles({2, 4, 5, 6, 7, 9, 11, 12}, {{6, 2, 4}, {9, 5}, {11, 7}});
    CHECK(gamma_statistic(mu, s) == Integer(c[5]) * c[8] * c[10] * c[11]);
    CHECK(gamma_statistic(mu, s) == 7 * 4 * 2 * 1);
    CHECK(gamma_statistic(Partition{3, 2}, Permutation::identity({3})) == conjugate(Partition{3, 2})[2]);
    CHECK(gamma_statistic(Partition{3, 2}, Permutation::identity({1, 2})) == 4);
    CHECK(gamma_double_sum(Partition{3, 2}, 2, 3) == 12);
}

TEST_CASE("Wilf polynomial") {
    CHECK(wilf_polynomial(1) == Polynomial::variable(0, 1));
    const Polynomial x1 = Polynomial::variable(0, 2), x2 = Polynomial::variable(1, 2);
    CHECK(wilf_polynomial(2) == x1 * x2 + x2);
    const Polynomial y1 = Polynomial::variable(0, 3), y2 = Polynomial::variable(1, 3), y3 = Polynomial::variable(2, 3);
    CHECK(wilf_polynomial(3) == y1 * y2 * y3 + y1 * y3 + y2 * y3 * Rational(2) + y3 * Rational(2));
}

TEST_CASE("shifted Schur evaluation") {
    CHECK(shifted_schur_eval(Partition{1}, {4, 2}) == 6);
    CHECK(shifted_schur_eval(Partition{}, {4, 2}) == 1);
    // s*_(1,1) = e*_2 in two variables.
    CHECK(shifted_schur_eval(Partition{1, 1}, {3, 2}) == Rational(e_star_eval(2, {3, 2})));
    CHECK(shifted_schur_eval(Partition{2}, {3, 2}) == Rational(h_star_eval(2, {3, 2})));
    CHECK(shifted_schur_eval(Partition{1, 1, 1}, {3, 2}) == 0);
}
