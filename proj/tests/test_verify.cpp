#include "capelli/verify.hpp"

#include <doctest.h>

using namespace capelli;
using namespace capelli::verify;

TEST_CASE("check results count failures and exceptions") {
    CheckResult r{"demo"};
    CHECK_FALSE(r.passed());  // no cases run
    r.run([] { return true; }, [] { return std::string("a"); });
    CHECK(r.passed());
    r.run([] { return false; }, [] { return std::string("b"); });
    r.run([]() -> bool { throw Error("boom"); }, [] { return std::string("c"); });
    CHECK(r.cases == 3);
    CHECK(r.failures == 2);
    REQUIRE(r.counterexamples.size() == 2);
    CHECK(r.counterexamples[1].find("boom") != std::string::npos);
}

TEST_CASE("every suite passes at reduced bounds") {
    for (const auto& name : suite_names()) {
        SuiteOptions o;
        if (name != "wilf" && name != "regonati" && name != "zeta2-identity") {
            o.n = 2;
            o.max_weight = 3;
        }
        const auto rep = run_suite(name, o);
        CHECK_MESSAGE(rep.passed(), name);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed(), name, ": ", c.name);
    }
    CHECK_THROWS_AS(run_suite("nope"), Error);
}

TEST_CASE("a disagreeing route is reported as a failure") {
    CheckResult r{"H_1 closed against a wrong constant"};
    r.run([] { return eigenvalue_action(CentralSpec::H(1), Partition{2, 1}, 2) == 4; }, [] { return std::string("H_1"); });
    CHECK_FALSE(r.passed());
    CHECK(eigenvalue_action(CentralSpec::H(1), Partition{2, 1}, 2) == 3);
}
