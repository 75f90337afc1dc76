#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advangle/oracle.hpp"

using namespace advangle;

namespace {

HPReal tolerance(int digits) {
    PrecisionScope scope(digits);
    return pow(HPReal(10), -(digits - 10));
}

HPReal angle_at(const Point& vertex, const Point& p, const Point& q) {
    const HPReal ux = p.x - vertex.x, uy = p.y - vertex.y;
    const HPReal vx = q.x - vertex.x, vy = q.y - vertex.y;
    return atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy) * 180 / hp_pi();
}

}  // namespace

TEST_CASE("estimates of known derived angles") {
    PrecisionScope scope(100);
    const HPReal tol = tolerance(100);
    CHECK(abs(estimate_theta_units(Triplet{20, 60, 50, 180}, 100) - 30) < tol);
    CHECK(abs(estimate_theta_units(Triplet{45, 45, 15, 180}, 100) - HPReal("7.5")) < tol);
    CHECK(abs(estimate_theta_units(Triplet{20, 50, 50, 180}, 100) - 50) < tol);
}

TEST_CASE("construction facts for (45,45,15)") {
    PrecisionScope scope(100);
    const HPReal tol = tolerance(100);
    const FigurePoints fig = construct_figure(Triplet{45, 45, 15, 180}, 100);

    // BD = BC and angle BDC = 67.5 deg
    const HPReal bd = sqrt(fig.D.x * fig.D.x + fig.D.y * fig.D.y);
    CHECK(abs(bd - 1) < tol);
    CHECK(abs(angle_at(fig.D, fig.B, fig.C) - HPReal("67.5")) < tol);
}

TEST_CASE("construction recovers its inputs") {
    PrecisionScope scope(80);
    const HPReal tol = tolerance(80);
    for (const Triplet t : {Triplet{20, 60, 50, 180}, Triplet{45, 45, 15, 180},
                            Triplet{7, 31, 2, 180}, Triplet{15, 15, 5, 60}}) {
        const FigurePoints fig = construct_figure(t, 80);
        const HPReal unit_deg = HPReal(180) / t.unit_n;
        CHECK(abs(angle_at(fig.A, fig.B, fig.C) - t.a * unit_deg) < tol);
        CHECK(abs(angle_at(fig.B, fig.D, fig.C) - t.b * unit_deg) < tol);
        CHECK(abs(angle_at(fig.C, fig.E, fig.B) - t.c * unit_deg) < tol);
        // interiority
        CHECK(fig.D.y > 0);
        CHECK(fig.E.y > 0);
        CHECK(fig.F.y > 0);
    }
}

TEST_CASE("degenerate construction is an error") {
    CHECK_THROWS_AS(construct_figure(Triplet{20, 90, 50, 180}, 60), std::invalid_argument);
    CHECK_THROWS_AS(construct_figure(Triplet{178, 1, 1, 180}, 60), std::invalid_argument);
}

TEST_CASE("near_half_step proposals") {
    PrecisionScope scope(100);
    const HPReal tol("1e-30");
    CHECK(near_half_step(HPReal(30), tol) == 60);
    CHECK(near_half_step(HPReal("7.5"), tol) == 15);
    CHECK(near_half_step(HPReal("7.4999999"), tol) == std::nullopt);

    const HPReal irrational = estimate_theta_units(Triplet{55, 60, 10, 180}, 100);
    CHECK(near_half_step(irrational, tol) == std::nullopt);

    CHECK_THROWS_AS(near_half_step(HPReal(30), HPReal("0.3")), std::invalid_argument);
    CHECK_THROWS_AS(near_half_step(HPReal(30), HPReal(0)), std::invalid_argument);
}

TEST_CASE("precision scaling") {
    const Triplet t{33, 41, 17, 180};
    const HPReal at100 = estimate_theta_units(t, 100);
    const HPReal at200 = estimate_theta_units(t, 200);
    PrecisionScope scope(200);
    CHECK(abs(at200 - at100) < tolerance(100));
}

TEST_CASE("numeric mirror identity") {
    PrecisionScope scope(100);
    const HPReal tol = tolerance(100);
    for (const Triplet t : {Triplet{20, 60, 50, 180}, Triplet{45, 45, 15, 180},
                            Triplet{12, 48, 30, 180}}) {
        const Triplet m{t.a, t.c, t.b, t.unit_n};
        const HPReal sum = estimate_theta_units(t, 100) + estimate_theta_units(m, 100);
        CHECK(abs(sum - (t.b + t.c)) < tol);
    }
}
