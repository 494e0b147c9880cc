#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scopt/types.hpp"

using namespace scopt;

namespace {

CodeParameters make(int gamma, int kappa, int m, std::vector<int> a, int z, int L) {
    CodeParameters p;
    p.gamma = gamma;
    p.kappa = kappa;
    p.memory = m;
    p.pattern.a = std::move(a);
    p.circulant_size = z;
    p.replicas = L;
    return p;
}

}  // namespace

TEST_CASE("published parameter sets validate") {
    CHECK_NOTHROW(validate(make(3, 7, 5, {0, 1, 2, 3, 4, 5}, 13, 100)));
    CHECK_NOTHROW(validate(make(4, 17, 4, {0, 1, 4}, 17, 50)));
    CHECK_NOTHROW(validate(make(4, 29, 19, CouplingPattern::full(19).a, 29, 20)));
}

TEST_CASE("pattern must start at zero and increase strictly") {
    CHECK_THROWS_WITH_AS(validate(CouplingPattern{{1, 2}}),
                         doctest::Contains("a_0 must be 0"), ValidationError);
    CHECK_THROWS_WITH_AS(validate(CouplingPattern{{0, 0, 2}}),
                         doctest::Contains("strictly increasing"), ValidationError);
    CHECK_THROWS_AS(validate(CouplingPattern{{0, 3, 2}}), ValidationError);
    CHECK_THROWS_AS(validate(CouplingPattern{std::vector<int>{}}), ValidationError);
}

TEST_CASE("parameter bounds") {
    CHECK_THROWS_AS(validate(make(1, 7, 2, {0, 1, 2}, 13, 100)), ValidationError);
    CHECK_THROWS_AS(validate(make(3, 1, 2, {0, 1, 2}, 13, 100)), ValidationError);
    CHECK_THROWS_AS(validate(make(3, 7, 2, {0, 1, 2}, 1, 100)), ValidationError);
    CHECK_THROWS_AS(validate(make(3, 7, 2, {0, 1, 2}, 13, 0)), ValidationError);
    // pattern end must equal memory
    CHECK_THROWS_AS(validate(make(3, 7, 5, {0, 1, 2}, 13, 100)), ValidationError);
}

TEST_CASE("edge distribution validation") {
    const CodeParameters params = make(3, 7, 2, {0, 1, 2}, 13, 100);
    CHECK_NOTHROW(validate(params, EdgeDistribution{{0.4, 0.2, 0.4}}));
    CHECK_THROWS_WITH_AS(validate(params, EdgeDistribution{{0.5, 0.5}}),
                         doctest::Contains("support size"), ValidationError);
    CHECK_THROWS_AS(validate(params, EdgeDistribution{{0.5, 0.5, 0.0}}), ValidationError);
    CHECK_THROWS_AS(validate(params, EdgeDistribution{{0.5, 0.3, 0.3}}), ValidationError);
    // off by more than the 1e-12 normalization tolerance: rejected, not fixed up
    CHECK_THROWS_AS(validate(params, EdgeDistribution{{0.4, 0.2, 0.4 + 1e-9}}), ValidationError);
}

TEST_CASE("all-zero partition is valid for every pattern") {
    for (auto a : {std::vector<int>{0, 2}, {0, 1, 4}, {0, 5}}) {
        CodeParameters params = make(3, 4, a.back(), a, 7, 3);
        PartitioningMatrix p(3, 4, 0);
        CHECK_NOTHROW(validate_partition(params, p));
    }
}

TEST_CASE("partition entries restricted to the support") {
    CodeParameters params = make(2, 2, 4, {0, 1, 4}, 7, 3);
    PartitioningMatrix p(2, 2, 0);
    p(1, 1) = 2;  // 2 is skipped by the pattern
    CHECK_THROWS_WITH_AS(validate_partition(params, p), doctest::Contains("(1,1)"),
                         ValidationError);
    p(1, 1) = 4;
    CHECK_NOTHROW(validate_partition(params, p));
}

TEST_CASE("lifting entries restricted to [0, z)") {
    CodeParameters params = make(2, 2, 1, {0, 1}, 5, 3);
    LiftingMatrix l(2, 2, 0);
    l(0, 1) = 5;
    CHECK_THROWS_WITH_AS(validate_lifting(params, l), doctest::Contains("(0,1)"),
                         ValidationError);
    l(0, 1) = 4;
    CHECK_NOTHROW(validate_lifting(params, l));
}
