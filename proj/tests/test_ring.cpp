#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pierik/errors.hpp"
#include "pierik/ring.hpp"

using namespace pierik;
using pierik::testing::pn;

TEST_CASE("kvector basics") {
    Space og2 = Space::og(2);
    KVector v(og2);
    CHECK(v.zero());
    v.add_term(pn({1}), 2);
    v.add_term(pn({1}), -2);
    CHECK(v.zero());  // zeros are never stored
    v.add_term(pn({2, 1}), 5);
    CHECK(v.coefficient_of(pn({2, 1})) == 5);
    CHECK(v.coefficient_of(pn({2})) == 0);
    CHECK_THROWS_AS(v.add_term(pn({3}), 1), OutOfBounds);
    CHECK_THROWS_AS(v += KVector(Space::og(3)), WrongSpace);
}

TEST_CASE("pieri products in tiny spaces") {
    Space og2 = Space::og(2);
    auto og_prod = pieri_multiply(KVector::basis(og2, pn({1})), 1, Engine::Direct);
    KVector og_expected(og2);
    og_expected.add_term(pn({2}), 1);
    CHECK(og_prod == og_expected);

    Space lg2 = Space::lg(2);
    auto lg_prod = pieri_multiply(KVector::basis(lg2, pn({1})), 1, Engine::Direct);
    KVector lg_expected(lg2);
    lg_expected.add_term(pn({2}), 2);
    lg_expected.add_term(pn({2, 1}), -1);
    CHECK(lg_prod == lg_expected);
    CHECK(lg_prod.to_json() ==
          "{\"space\":\"lg:2\",\"terms\":[{\"nu\":[2],\"coeff\":2},"
          "{\"nu\":[2,1],\"coeff\":-1}]}");

    for (const auto& space : {Space::rect_a(2, 2), Space::og(3), Space::lg(3)}) {
        KVector v(space);
        v.add_term(pn({1}), 3);
        v.add_term(pn({2}), -1);
        CHECK(pieri_multiply(v, 0, Engine::Recursive) == v);  // O^0 is the unit
    }

    CHECK_THROWS_AS(pieri_multiply(KVector::unit(og2), 3, Engine::Direct), OutOfRangeP);
    CHECK_THROWS_AS(pieri_multiply(KVector::unit(og2), -1, Engine::Direct), OutOfRangeP);
    CHECK_THROWS_AS(pieri_multiply(KVector::unit(Space::rect_a(2, 2)), 1, Engine::Tableau),
                    WrongSpace);
    CHECK_THROWS_AS(pieri_multiply(KVector::unit(og2), 1, Engine::Lenart), WrongSpace);
}

TEST_CASE("dual classes") {
    Space og2 = Space::og(2);
    KVector expected(og2);
    expected.add_term(Partition(), 1);
    expected.add_term(pn({1}), -1);
    CHECK(dual_class(pn({2, 1}), og2) == expected);

    // nu = empty has a single rook strip (nothing removed)
    CHECK(dual_class(Partition(), og2) == KVector::basis(og2, pn({2, 1})));
    CHECK(dual_class(Partition(), Space::rect_a(2, 3)) ==
          KVector::basis(Space::rect_a(2, 3), pn({3, 3})));

    for (int n = 2; n <= 4; ++n) {
        Space og = Space::og(n);
        for (const auto& nu : all_partitions(og)) {
            KVector rhs = KVector::basis(og, dual_partition(nu, og));
            rhs -= pieri_multiply(rhs, 1, Engine::Direct);
            CHECK(dual_class(nu, og) == rhs);
        }
    }
}

TEST_CASE("special chains") {
    Space og2 = Space::og(2);
    CHECK(special_chain(og2, {}, Engine::Direct) == KVector::unit(og2));
    CHECK(special_chain(og2, {1, 1}, Engine::Direct) ==
          KVector::basis(og2, pn({2})));
    for (int p = 0; p <= 2; ++p) {
        CHECK(special_chain(og2, {p}, Engine::Direct) ==
              pieri_multiply(KVector::unit(og2), p, Engine::Direct));
    }
}

TEST_CASE("engine independence on all basis vectors") {
    for (const auto& space : {Space::rect_a(2, 2), Space::og(5), Space::lg(5)}) {
        auto engines = applicable_engines(space.kind());
        for (const auto& lambda : all_partitions(space)) {
            for (int p = 0; p <= space.cap(); ++p) {
                auto reference =
                    pieri_multiply(KVector::basis(space, lambda), p, engines[0]);
                for (std::size_t i = 1; i < engines.size(); ++i) {
                    CHECK(pieri_multiply(KVector::basis(space, lambda), p, engines[i]) ==
                          reference);
                }
            }
        }
    }
}

TEST_CASE("chain order independence, small") {
    Space lg3 = Space::lg(3);
    std::vector<std::vector<int>> chains = {{1, 2}, {2, 1}, {1, 2, 3}, {3, 2, 1},
                                            {2, 3, 1}, {3, 1, 2}};
    auto reference12 = special_chain(lg3, chains[0], Engine::Direct);
    CHECK(special_chain(lg3, chains[1], Engine::Recursive) == reference12);
    auto reference123 = special_chain(lg3, chains[2], Engine::Direct);
    for (std::size_t i = 3; i < chains.size(); ++i) {
        CHECK(special_chain(lg3, chains[i], Engine::Tableau) == reference123);
    }
}

TEST_CASE("json rendering switches to strings past 2^53") {
    CHECK(json_integer(Integer(-7)) == "-7");
    Integer big = (Integer(1) << 53);
    CHECK(json_integer(big - 1) == "9007199254740991");
    CHECK(json_integer(big) == "\"9007199254740992\"");
    CHECK(json_integer(-big) == "\"-9007199254740992\"");
}
