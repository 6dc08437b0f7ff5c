#include "capelli/central.hpp"

#include <doctest.h>

using namespace capelli;

TEST_CASE("central spec parsing") {
    CHECK(CentralSpec::parse("H:2") == CentralSpec::H(2));
    CHECK(CentralSpec::parse("S:2,1") == CentralSpec::S(Partition{2, 1}));
    CHECK(CentralSpec::parse("1").family == Family::Identity);
    const auto p = CentralSpec::parse("H:2*I:1");
    CHECK(p.family == Family::Product);
    CHECK(p.to_string() == "H:2*I:1");
    CHECK(p.degree() == 3);
    const auto c = CentralSpec::parse("C:1,2|2,1");
    CHECK(c.family == Family::Column);
    CHECK(c.to_string() == "C:1,2|2,1");
    CHECK_THROWS_AS(CentralSpec::parse("Q:2"), Error);
    CHECK_THROWS_AS(CentralSpec::parse("H:"), Error);
    CHECK_THROWS_AS(CentralSpec::parse("H:2*"), Error);
    CHECK_THROWS_AS(CentralSpec::parse("S:1,2"), Error);
    CHECK_THROWS_AS(CentralSpec::S(Partition{3}).validate(2), Error);
    CHECK_THROWS_AS(CentralSpec::H(0).validate(2), Error);
}

TEST_CASE("virtual program sizes") {
    CHECK(build_program(CentralSpec::H(2), 2).summands.size() == 1);
    CHECK(build_program(CentralSpec::I(3), 3).summands.size() == 10);
    const auto s = build_program(CentralSpec::S(Partition{2, 1}), 2);
    REQUIRE(s.summands.size() == 2);
    for (const auto& [c, w] : s.summands) {
        CHECK(c == Rational(1, 3));
        CHECK(w.size() == 12);
        CHECK(is_balanced(w));
    }
}

TEST_CASE("eigenvalues by action and closed forms") {
    CHECK(eigenvalue_action(CentralSpec::H(2), Partition{3, 2}, 3) == 12);
    CHECK(eigenvalue_action(CentralSpec::I(2), Partition{2, 2, 1}, 2) == 12);
    CHECK(eigenvalue_action(CentralSpec::S(Partition{2, 1}), Partition{2, 1}, 2) == 3);
    CHECK(eigenvalue_action(CentralSpec::H(1), Partition{}, 2) == 0);
    CHECK(eigenvalue_action(CentralSpec::identity(), Partition{}, 2) == 1);
    CHECK(eigenvalue_action(CentralSpec::K(Partition{2, 1}), Partition{2, 1}, 2) == -3);
    CHECK(eigenvalue_closed(CentralSpec::H(3), Partition{2, 2}, 2) == 0);
    CHECK_THROWS_AS(eigenvalue_closed(CentralSpec::K(Partition{1}), Partition{1}, 2), NoClosedForm);
    CHECK_THROWS_AS(eigenvalue_closed(CentralSpec::S(Partition{1}), Partition{2}, 2), NoClosedForm);
    CHECK_THROWS_AS(eigenvalue_action(CentralSpec::H(1), Partition{3}, 2), Error);
}

TEST_CASE("all routes agree") {
    for (const auto& spec : {CentralSpec::H(1), CentralSpec::H(2), CentralSpec::I(1), CentralSpec::I(2),
                             CentralSpec::S(Partition{1, 1}), CentralSpec::S(Partition{2})})
        for (const auto& mu : partitions_up_to(4, 2)) {
            const auto routes = eigenvalue_routes(spec, mu, 2);
            CHECK(routes.size() >= 2);
            for (const auto& [name, v] : routes) CHECK_MESSAGE(v == routes.at("action"), spec.to_string(), " ", name);
        }
    const auto r = eigenvalue_routes(CentralSpec::H(2), Partition{3, 2}, 3);
    CHECK(r.size() == 4);
    for (const auto& [name, v] : r) CHECK(v == 12);
}

TEST_CASE("products act factor by factor") {
    const auto p = CentralSpec::parse("H:2*I:1");
    for (const auto& mu : partitions_up_to(4, 2))
        CHECK(eigenvalue_action(p, mu, 2) ==
              eigenvalue_action(CentralSpec::H(2), mu, 2) * eigenvalue_action(CentralSpec::I(1), mu, 2));
}

TEST_CASE("column bitableau elements") {
    const auto c = CentralSpec::parse("C:1,2|2,1");
    for (const auto& mu : partitions_up_to(4, 2))
        CHECK(eigenvalue_action(c, mu, 2) == Rational(gamma_statistic(mu, c.sigma)));
}

TEST_CASE("duality map") {
    CHECK(duality_map(CentralSpec::H(2)) == CentralSpec::I(2));
    CHECK(duality_map(CentralSpec::I(3)) == CentralSpec::H(3));
    CHECK(duality_map(CentralSpec::S(Partition{2, 1})) == CentralSpec::S(Partition{2, 1}));
    CHECK(duality_map(CentralSpec::S(Partition{3})) == CentralSpec::S(Partition{1, 1, 1}));
    CHECK(duality_map(CentralSpec::parse("H:1*S:2")) == CentralSpec::parse("I:1*S:1,1"));
    CHECK_THROWS_AS(duality_map(CentralSpec::K(Partition{1})), Error);
    CHECK_THROWS_AS(duality_map(CentralSpec::J(Partition{1})), Error);
}
