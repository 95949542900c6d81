#include "doctest.h"
#include "helpers.hpp"
#include "pierik/errors.hpp"
#include "pierik/euler.hpp"

using namespace pierik;
using pierik::testing::boxes;
using pierik::testing::pn;

TEST_CASE("quadric_chi values") {
    CHECK(quadric_chi(3, 5) == 1);   // slack >= quadrics collapses to (2-1)^a
    CHECK(quadric_chi(0, -1) == 0);  // empty sum
    CHECK(quadric_chi(2, 1) == 0);
    CHECK(quadric_chi(1, 0) == 2);
    CHECK(quadric_chi(0, 0) == 1);
    CHECK_THROWS_AS(quadric_chi(-1, 0), DomainError);
}

TEST_CASE("quadric_chi identities on a grid") {
    for (int a = 0; a <= 12; ++a) {
        for (int b = -3; b <= 15; ++b) {
            CHECK(quadric_chi(a + 1, b) + quadric_chi(a, b - 1) == 2 * quadric_chi(a, b));
            if (b >= a) {
                CHECK(quadric_chi(a, b) == 1);
            }
            if (b < 0) {
                CHECK(quadric_chi(a, b) == 0);
            }
        }
    }
}

TEST_CASE("chi in type A") {
    Space a12 = Space::rect_a(1, 2);
    auto theta = make_skew(Partition(), pn({2}), a12);  // c = 2
    CHECK(chi(theta, 2, a12) == 1);
    CHECK(chi(theta, 3, a12) == 0);
    CHECK(chi(theta, -1, a12) == 1);
}

TEST_CASE("chi in OG composes stats with quadric_chi") {
    Space og12 = Space::og(12);
    auto theta = make_skew(pn({11, 9, 8, 5, 2}), dual_partition(pn({10, 8, 7, 4}), og12),
                           og12);  // d = 10, one surplus component
    CHECK(chi(theta, 10, og12) == 2);
    CHECK(chi(theta, 11, og12) == 0);
}

TEST_CASE("chi of the empty shape is one at p = 0") {
    CHECK(chi(SkewShape(), 0, Space::rect_a(2, 2)) == 1);
    CHECK(chi(SkewShape::from_boxes({}, true), 0, Space::og(3)) == 1);
    CHECK(chi(SkewShape::from_boxes({}, true), 0, Space::lg(3)) == 1);
    CHECK(chi(SkewShape::from_boxes({}, true), 1, Space::og(3)) == 0);
}

TEST_CASE("chi validates the shape against the space") {
    CHECK_THROWS_AS(chi(boxes({{1, 1}}, false), 0, Space::og(3)), WrongSpace);
    CHECK_THROWS_AS(chi(boxes({{2, 1}}, true), 0, Space::og(3)), OutOfBounds);
    CHECK_THROWS_AS(chi(boxes({{1, 4}}, false), 0, Space::rect_a(2, 3)), OutOfBounds);
}

TEST_CASE("direct coefficients from the worked examples") {
    CHECK(direct_coefficient(pn({6, 4, 1}), 5, pn({7, 6, 3, 1}), Space::og(7)) == -7);
    CHECK(direct_coefficient(pn({6, 4, 1}), 5, pn({7, 6, 3, 1}), Space::lg(7)) == -9);
    CHECK(direct_coefficient(pn({1}), 1, pn({2, 1}), Space::rect_a(2, 2)) == -1);
    for (const auto& space : {Space::rect_a(2, 2), Space::og(3), Space::lg(3)}) {
        CHECK(direct_coefficient(pn({2, 1}), 0, pn({2, 1}), space) == 1);
    }
}

TEST_CASE("direct coefficient vanishing and signs on small spaces") {
    for (const auto& space : {Space::rect_a(2, 2), Space::og(4), Space::lg(4)}) {
        for (const auto& nu : all_partitions(space)) {
            for (const auto& lambda : all_partitions(space)) {
                if (!nu.contains(lambda)) {
                    continue;
                }
                auto st = diagram_stats(make_skew(lambda, nu, space));
                for (int p = 0; p <= space.cap(); ++p) {
                    Integer c = direct_coefficient(lambda, p, nu, space);
                    bool admissible = space.kind() == Space::Kind::RectA
                                          ? st.is_horizontal_strip
                                          : st.is_rim;
                    if (!admissible) {
                        CHECK(c == 0);
                    }
                    int codim = nu.weight() - lambda.weight() - p;
                    CHECK((codim % 2 == 0 ? c >= 0 : c <= 0));
                }
            }
        }
    }
}

TEST_CASE("OG symmetry of structure constants, single-part lambda") {
    Space og6 = Space::og(6);
    auto all = all_partitions(og6);
    for (int q = 1; q <= 6; ++q) {
        Partition lambda = pn({q});
        for (const auto& nu : all) {
            Partition nu_dual = dual_partition(nu, og6);
            for (int p = 1; p <= 6; ++p) {
                Partition p_dual = dual_partition(pn({p}), og6);
                Integer lhs = nu.contains(lambda)
                                  ? direct_coefficient(lambda, p, nu, og6)
                                  : Integer(0);
                Integer rhs = p_dual.contains(nu_dual)
                                  ? direct_coefficient(nu_dual, q, p_dual, og6)
                                  : Integer(0);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("the LG analogue of the symmetry fails") {
    Space lg2 = Space::lg(2);
    CHECK(direct_coefficient(pn({1}), 1, pn({2, 1}), lg2) == -1);
    // dual side: coefficient of O^(2) in O^(1) * O^0
    CHECK(direct_coefficient(pn({1}), 0, pn({2}), lg2) == 0);
}
