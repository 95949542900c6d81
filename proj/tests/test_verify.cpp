#include "doctest.h"
#include "pierik/errors.hpp"
#include "pierik/verify.hpp"

using namespace pierik;

TEST_CASE("all suites pass on small spaces") {
    for (const auto& space : {Space::rect_a(3, 3), Space::og(4), Space::lg(4)}) {
        for (const auto& name : suite_names()) {
            auto result = run_suite(name, space, space.cap());
            INFO(space.to_string(), " ", name, ": ", result.failure);
            CHECK(result.passed);
            CHECK(result.cases > 0);
        }
    }
}

TEST_CASE("the LG symmetry suite passes by reproducing the counterexample") {
    auto result = check_symmetry(Space::lg(2), 2);
    CHECK(result.passed);
    CHECK(result.cases == 1);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("everything", Space::og(2), 2), ParseError);
}
