#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdz/hypotheses.hpp"
#include "gdz/routes.hpp"
#include "test_support.hpp"

using namespace gdz;

namespace {

ExactMatrix scalar1(long v) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = ExactScalar(v);
    return m;
}

} // namespace

TEST_CASE("H27 on a worked pair") {
    ExactMatrix a{{0, 1}, {0, 0}};
    ExactMatrix b{{1, 0}, {0, 0}};
    REQUIRE((a * b).is_zero());
    HypothesisReport rep = check_hypothesis(HypothesisId::H27, a, b);
    CHECK(rep.satisfied);
    REQUIRE(rep.conditions.size() == 2);
    CHECK(rep.conditions[0].residual == 0.0);
    CHECK(rep.conditions[1].residual == 0.0);
    CHECK(rep.conditions[0].label == "a b^2 = 0");
}

TEST_CASE("H22 scalar satisfied when b invertible") {
    HypothesisReport rep = check_hypothesis(HypothesisId::H22, scalar1(1), scalar1(1));
    CHECK(rep.satisfied);
}

TEST_CASE("H27 forced violation") {
    HypothesisReport rep = check_hypothesis(HypothesisId::H27, scalar1(1), scalar1(1));
    CHECK_FALSE(rep.satisfied);
    CHECK(rep.conditions[0].residual == 1.0);
    CHECK(rep.violated() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("verdict is exact and threshold free on the exact backend") {
    // a residual of 1/1000000 is still a violation
    ExactMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = ExactScalar::rational(1, 1000000);
    b.at(0, 0) = ExactScalar(1);
    HypothesisReport rep = check_hypothesis(HypothesisId::H27, a, b);
    CHECK_FALSE(rep.satisfied);
    CHECK_FALSE(rep.conditions[0].zero);
}

TEST_CASE("block hypothesis on scalars") {
    // A=1, B=1, C=0, D=0: all H41 conditions hold
    HypothesisReport rep = check_hypothesis(HypothesisId::H41, scalar1(1), scalar1(1), scalar1(0),
                                            scalar1(0));
    CHECK(rep.satisfied);
    REQUIRE(rep.conditions.size() == 4);
    CHECK(rep.conditions[2].label == "D C A = 0");
}

TEST_CASE("arity mismatches throw") {
    CHECK_THROWS_AS(check_hypothesis(HypothesisId::H41, scalar1(1), scalar1(1)), DimensionError);
    CHECK_THROWS_AS(
        check_hypothesis(HypothesisId::H22, scalar1(1), scalar1(1), scalar1(1), scalar1(1)),
        DimensionError);
    CHECK_THROWS_AS(check_hypothesis(HypothesisId::H22, ExactMatrix(2, 3), ExactMatrix(3, 2)),
                    DimensionError);
}

TEST_CASE("route and hypothesis tables are consistent") {
    for (HypothesisId id : kAllHypotheses) {
        RouteId route = hypothesis_route(id);
        CHECK(route_hypothesis(route) == id);
        CHECK(hypothesis_from_name(hypothesis_name(id)) == id);
    }
    for (RouteId id : kAllRoutes) {
        CHECK(route_from_name(route_name(id)) == id);
        if (auto hyp = route_hypothesis(id)) CHECK(hypothesis_route(*hyp) == id);
    }
    CHECK_FALSE(route_hypothesis(RouteId::L21).has_value());
}

TEST_CASE("condition counts match evaluated reports") {
    testing::Rng rng(5);
    ExactMatrix a = testing::rand_matrix(rng, 2, 2);
    for (HypothesisId id : kAllHypotheses) {
        HypothesisReport rep =
            hypothesis_is_pair(id)
                ? check_hypothesis(id, a, a)
                : check_hypothesis(id, a, a, a, a);
        CHECK(rep.conditions.size() == hypothesis_condition_count(id));
    }
}

TEST_CASE("floating verdicts honor the policy") {
    TolerancePolicy pol;
    FloatMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = FloatScalar(1e-12);
    b.at(0, 0) = FloatScalar(1.0);
    HypothesisReport rep = check_hypothesis(HypothesisId::H27, a, b, pol);
    CHECK(rep.satisfied); // below the zero threshold
    a.at(0, 0) = FloatScalar(1e-6);
    rep = check_hypothesis(HypothesisId::H27, a, b, pol);
    CHECK_FALSE(rep.satisfied);
}
