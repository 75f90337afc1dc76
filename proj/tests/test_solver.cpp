#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advangle/oracle.hpp"
#include "advangle/solver.hpp"
#include "advangle/trig.hpp"

using namespace advangle;

namespace {

// cross-multiplied: num/den == tan(j half-degrees)
bool tan_pair_matches(const Triplet& t, long j) {
    const auto [num, den] = tan_theta_pair(t);
    const auto& ctx = num.context();
    return num * cos_of(ctx, j) == den * sin_of(ctx, j);
}

}  // namespace

TEST_CASE("triplet validation") {
    CHECK_NOTHROW(validate_geometry(Triplet{20, 60, 50, 180}));
    CHECK_THROWS_AS(validate_geometry(Triplet{20, 80, 50, 180}), std::invalid_argument);
    CHECK_THROWS_AS(validate_geometry(Triplet{0, 10, 5, 180}), std::invalid_argument);
    CHECK_THROWS_AS(validate_geometry(Triplet{20, 60, -1, 180}), std::invalid_argument);
    CHECK(is_canonical(Triplet{20, 60, 50, 180}));
    CHECK(!is_canonical(Triplet{20, 50, 60, 180}));
    CHECK(conductor_for(Triplet{20, 60, 50, 180}) == 720);
    CHECK(conductor_for(Triplet{15, 15, 5, 60}) == 240);
}

TEST_CASE("tangent formula on known instances") {
    CHECK(tan_pair_matches(Triplet{20, 60, 50, 180}, 60));   // Langley: theta = 30 deg
    CHECK(tan_pair_matches(Triplet{20, 50, 50, 180}, 100));  // b = c: theta = b
    CHECK(tan_pair_matches(Triplet{45, 45, 15, 180}, 15));   // theta = 7.5 deg
    CHECK(!tan_pair_matches(Triplet{20, 60, 50, 180}, 61));
}

TEST_CASE("sine-ratio value") {
    // b = c collapses the ratio to 1
    const auto [ns, ds] = quadling_ratio(Triplet{20, 50, 50, 180});
    CHECK(ns == ds);

    // the proof-chain identity for (45,45,15)
    const auto [n45, d45] = quadling_ratio(Triplet{45, 45, 15, 180});
    const auto& ctx = cyclo_context(720);
    CHECK(sin_of(ctx, 15) * d45 == sin_of(ctx, 105) * n45);
    CHECK(!n45.is_zero());
    CHECK(!d45.is_zero());

    // swapping b and c inverts the ratio
    const auto [nf, df] = quadling_ratio(Triplet{20, 60, 50, 180});
    const auto [nr, dr] = quadling_ratio(Triplet{20, 50, 60, 180});
    CHECK(nf * nr == df * dr);
}

TEST_CASE("certification") {
    const Triplet langley{20, 60, 50, 180};
    CHECK(certify_theta(langley, 60));
    CHECK(!certify_theta(langley, 61));
    CHECK(!certify_theta(langley, 59));
    CHECK(certify_theta(Triplet{45, 45, 15, 180}, 15));
    CHECK(certify_theta(Triplet{20, 50, 50, 180}, 100));  // theta = b when b = c

    CHECK_THROWS_AS(certify_theta(langley, 0), std::invalid_argument);
    CHECK_THROWS_AS(certify_theta(langley, 220), std::invalid_argument);
}

TEST_CASE("quarter-step certification grid") {
    const Triplet langley{20, 60, 50, 180};
    CHECK(certify_theta_at(langley, 120, 4));    // 30 deg on the quarter grid
    CHECK(!certify_theta_at(langley, 119, 4));
    CHECK(!certify_theta_at(langley, 121, 4));
    CHECK(certify_theta_at(Triplet{45, 45, 15, 180}, 30, 4));
    CHECK(!certify_theta_at(Triplet{45, 45, 15, 180}, 29, 4));
    CHECK_THROWS_AS(certify_theta_at(langley, 60, 3), std::invalid_argument);
}

TEST_CASE("mirror identity") {
    const Triplet langley{20, 60, 50, 180};
    CHECK(mirror_half_steps(langley, 60) == 160);  // 110 - 30 = 80 deg
    CHECK(certify_theta(Triplet{20, 50, 60, 180}, 160));

    const Triplet frac45{45, 45, 15, 180};
    CHECK(mirror_half_steps(frac45, 15) == 105);  // 52.5 deg
    CHECK(certify_theta(Triplet{45, 15, 45, 180}, 105));

    // b = c: theta = b is the fixed point
    CHECK(mirror_half_steps(Triplet{20, 50, 50, 180}, 100) == 100);
}

TEST_CASE("derive_theta classifies by parity") {
    const HPReal tol("1e-30");

    const Triplet langley{20, 60, 50, 180};
    const DerivedAngle integral = derive_theta(langley, estimate_theta_units(langley, 100), tol);
    CHECK(integral.certified);
    CHECK(integral.half_steps == 60);
    CHECK(integral.classification == Classification::integral);

    const Triplet frac45{45, 45, 15, 180};
    const DerivedAngle half = derive_theta(frac45, estimate_theta_units(frac45, 100), tol);
    CHECK(half.certified);
    CHECK(half.half_steps == 15);
    CHECK(half.classification == Classification::half_integral);

    // mirror orientation derives b + c - theta
    const Triplet mirrored{45, 15, 45, 180};
    const DerivedAngle m = derive_theta(mirrored, estimate_theta_units(mirrored, 100), tol);
    CHECK(m.certified);
    CHECK(m.half_steps == 105);
    CHECK(m.classification == Classification::half_integral);

    const Triplet generic{55, 60, 10, 180};
    const DerivedAngle none = derive_theta(generic, estimate_theta_units(generic, 100), tol);
    CHECK(!none.certified);
    CHECK(none.classification == Classification::not_rational);
    CHECK(!none.half_steps.has_value());

    CHECK_THROWS_AS(derive_theta(langley, HPReal(30), HPReal(1)), std::invalid_argument);
}

TEST_CASE("generalized unit: (15,15,5) at pi/60") {
    const Triplet t{15, 15, 5, 60};
    CHECK(certify_theta(t, 5));  // theta = 2.5 units = 7.5 deg
    CHECK(!certify_theta(t, 4));
    CHECK(!certify_theta(t, 6));
    const DerivedAngle da = derive_theta(t, estimate_theta_units(t, 100), HPReal("1e-30"));
    CHECK(da.half_steps == 5);
    CHECK(da.classification == Classification::half_integral);
}

TEST_CASE("classification strings") {
    CHECK(std::string(to_string(Classification::integral)) == "integral");
    CHECK(classification_from_string("half_integral") == Classification::half_integral);
    CHECK(!classification_from_string("bogus").has_value());
}
