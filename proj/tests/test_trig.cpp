#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advangle/trig.hpp"

using namespace advangle;

namespace {
const CycloContext& c720 = cyclo_context(720);
CycloElement q(const CycloContext& ctx, long num, long den = 1) {
    return CycloElement::from_rational(ctx, frac(num, den));
}
}  // namespace

TEST_CASE("cosine values") {
    CHECK(cos_of(c720, 120) == q(c720, 1, 2));  // cos 60 deg
    CHECK(cos_of(c720, 0) == q(c720, 1));

    // cos 45 deg: irrational, real, square 1/2
    const auto c45 = cos_of(c720, 90);
    CHECK(!rational_value(c45).has_value());
    CHECK(is_real(c45));
    CHECK(c45 * c45 == q(c720, 1, 2));
}

TEST_CASE("sine values") {
    CHECK(sin_of(c720, 180) == q(c720, 1));      // sin 90 deg
    CHECK(sin_of(c720, 60) == q(c720, 1, 2));    // sin 30 deg
    CHECK(sin_of(c720, 0) == CycloElement::zero(c720));
    CHECK(is_real(sin_of(c720, 30)));

    // sin 15 deg has minimal polynomial 16 x^4 - 16 x^2 + 1 (monic form)
    const auto s15 = sin_of(c720, 30);
    CHECK(minimal_polynomial(s15) == Qpoly{frac(1, 16), frac(0), frac(-1), frac(0), frac(1)});

    CHECK_THROWS_AS(sin_of(cyclo_context(6), 1), std::invalid_argument);
}

TEST_CASE("tangent values") {
    CHECK(tan_of(c720, 90) == q(c720, 1));   // tan 45 deg
    CHECK(tan_of(c720, 0) == CycloElement::zero(c720));
    CHECK_THROWS_AS(tan_of(c720, 180), std::domain_error);   // 90 deg pole
    CHECK_THROWS_AS(tan_of(c720, 540), std::domain_error);   // 270 deg pole

    // tan 7.5 deg = tan(pi/24) = sqrt(6) - sqrt(3) + sqrt(2) - 2 generates
    // Q(zeta_24)+ of degree phi(24)/2 = 4
    const auto mp75 = minimal_polynomial(tan_of(c720, 15));
    CHECK(poly_degree(mp75) == 4);
    CHECK(mp75 == minimal_polynomial(tan_half_angle(cyclo_context(24), 1)));

    // tan 15 deg = 2 - sqrt(3): x^2 - 4x + 1
    const auto& c24 = cyclo_context(24);
    CHECK(minimal_polynomial(tan_of(c24, 1)) == Qpoly{frac(1), frac(-4), frac(1)});

    // tan * cos == sin
    for (long j : {1L, 33L, 100L, 250L})
        CHECK(tan_of(c720, j) * cos_of(c720, j) == sin_of(c720, j));
}

TEST_CASE("half-angle identity") {
    CHECK(tan_half_angle(c720, 180) == q(c720, 1));  // (1 - cos 90)/sin 90 = tan 45
    CHECK(tan_half_angle(c720, 120) == tan_of(c720, 60));
    CHECK_THROWS_AS(tan_half_angle(c720, 0), std::domain_error);
    CHECK_THROWS_AS(tan_half_angle(c720, 360), std::domain_error);

    const auto t = tan_half_angle(cyclo_context(24), 4);
    CHECK(lift(t, 48) == tan_of(cyclo_context(48), 4));
}

TEST_CASE("pythagorean identity, sampled") {
    const auto one = q(c720, 1);
    for (long j = 0; j < 720; j += 7) {
        const auto s = sin_of(c720, j);
        const auto c = cos_of(c720, j);
        CHECK(s * s + c * c == one);
    }
}

TEST_CASE("parity and angle addition") {
    for (long j : {1L, 15L, 359L}) {
        CHECK(sin_of(c720, -j) == -sin_of(c720, j));
        CHECK(cos_of(c720, -j) == cos_of(c720, j));
    }
    for (long j : {3L, 45L})
        for (long k : {10L, 77L}) {
            CHECK(sin_of(c720, j + k) ==
                  sin_of(c720, j) * cos_of(c720, k) + cos_of(c720, j) * sin_of(c720, k));
            CHECK(cos_of(c720, j + k) ==
                  cos_of(c720, j) * cos_of(c720, k) - sin_of(c720, j) * sin_of(c720, k));
        }
}

TEST_CASE("rational cosines of integral degrees") {
    int rational_count = 0;
    for (long deg = 0; deg <= 90; ++deg) {
        const auto v = rational_value(cos_of(c720, 2 * deg));
        if (!v) continue;
        ++rational_count;
        if (deg == 0) CHECK(*v == 1);
        if (deg == 60) CHECK(*v == frac(1, 2));
        if (deg == 90) CHECK(*v == 0);
    }
    CHECK(rational_count == 3);
}

TEST_CASE("tangent subfield membership across conductors") {
    // tan(pi/12) built in Q(zeta_24) is in Q(zeta_24); tan(pi/36) in Q(zeta_72) is not
    CHECK(in_subfield(tan_of(cyclo_context(24), 1), 24));
    CHECK(!in_subfield(tan_of(cyclo_context(72), 1), 24));
}
