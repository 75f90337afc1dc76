#include "advangle/solver.hpp"

#include <stdexcept>
#include <string>

#include "advangle/trig.hpp"

namespace advangle {

void validate_geometry(const Triplet& t) {
    if (t.unit_n < 1) throw std::invalid_argument("triplet: unit_n must be positive");
    if (t.a < 1 || t.b < 1 || t.c < 1)
        throw std::invalid_argument("triplet: angles must be positive integers");
    // base angle is (unit_n - a)/2; cevians must stay strictly below it
    if (2 * t.b >= t.unit_n - t.a || 2 * t.c >= t.unit_n - t.a)
        throw std::invalid_argument("triplet: cevian angle must be strictly below the base angle");
}

bool is_canonical(const Triplet& t) { return t.b > t.c; }

const char* to_string(Classification c) {
    switch (c) {
        case Classification::integral: return "integral";
        case Classification::half_integral: return "half_integral";
        case Classification::not_rational: return "not_rational";
    }
    return "?";
}

std::optional<Classification> classification_from_string(const std::string& s) {
    if (s == "integral") return Classification::integral;
    if (s == "half_integral") return Classification::half_integral;
    if (s == "not_rational") return Classification::not_rational;
    return std::nullopt;
}

long conductor_for(const Triplet& t, long steps_per_unit) {
    return 2 * steps_per_unit * t.unit_n;
}

namespace {

// Angles below are counted in half-units (x2 = twice the unit count), which
// keeps the a/2 terms integral. At steps_per_unit sub-steps, a half-unit
// angle x2 maps to index x2 * steps_per_unit / 2 in conductor 2*steps*N.
struct ExactAngles {
    const CycloContext& ctx;
    long scale;  // steps_per_unit / 2

    PowerSum cosx2(long x2) const { return cos_terms(ctx.conductor(), x2 * scale); }
    PowerSum sinx2(long x2) const { return sin_terms(ctx.conductor(), x2 * scale); }
};

ExactAngles angles_for(const Triplet& t, long steps_per_unit) {
    if (steps_per_unit < 2 || steps_per_unit % 2 != 0)
        throw std::invalid_argument("steps_per_unit must be a positive even number");
    return {cyclo_context(conductor_for(t, steps_per_unit)), steps_per_unit / 2};
}

std::pair<PowerSum, PowerSum> quadling_sides(const Triplet& t, const ExactAngles& x) {
    PowerSum num = x.cosx2(2 * t.b + t.a) * x.sinx2(2 * t.c) * x.cosx2(2 * t.b - t.a);
    PowerSum den = x.cosx2(2 * t.c - t.a) * x.sinx2(2 * t.b) * x.cosx2(2 * t.c + t.a);
    return {std::move(num), std::move(den)};
}

}  // namespace

std::pair<CycloElement, CycloElement> tan_theta_pair(const Triplet& t) {
    validate_geometry(t);
    ExactAngles x = angles_for(t, 2);
    PowerSum common = x.sinx2(2 * t.c) * (x.cosx2(2 * t.a) + x.cosx2(4 * t.b));
    PowerSum num = x.sinx2(2 * (t.b + t.c)) * common;
    PowerSum den = x.sinx2(2 * t.b) * (x.cosx2(2 * t.a) + x.cosx2(4 * t.c)) +
                   x.cosx2(2 * (t.b + t.c)) * common;
    return {num.to_element(x.ctx), den.to_element(x.ctx)};
}

std::pair<CycloElement, CycloElement> quadling_ratio(const Triplet& t) {
    validate_geometry(t);
    ExactAngles x = angles_for(t, 2);
    auto [num, den] = quadling_sides(t, x);
    return {num.to_element(x.ctx), den.to_element(x.ctx)};
}

bool certify_theta_at(const Triplet& t, long numer, long steps_per_unit) {
    validate_geometry(t);
    if (numer <= 0 || numer >= steps_per_unit * (t.b + t.c))
        throw std::invalid_argument("certify: candidate must lie strictly inside (0, b+c)");
    ExactAngles x = angles_for(t, steps_per_unit);
    auto [rnum, rden] = quadling_sides(t, x);
    // theta = numer sub-steps: sin(theta) * den == sin(b+c-theta) * num
    const long n = x.ctx.conductor();
    PowerSum lhs = sin_terms(n, numer) * rden;
    PowerSum rhs = sin_terms(n, steps_per_unit * (t.b + t.c) - numer) * rnum;
    return (lhs - rhs).to_element(x.ctx).is_zero();
}

bool certify_theta(const Triplet& t, long half_steps) {
    return certify_theta_at(t, half_steps, 2);
}

long mirror_half_steps(const Triplet& t, long half_steps) {
    return 2 * (t.b + t.c) - half_steps;
}

DerivedAngle derive_theta(const Triplet& t, const HPReal& theta_units_estimate,
                          const HPReal& tol) {
    validate_geometry(t);
    if (!(tol > 0) || !(tol < HPReal(0.25)))
        throw std::invalid_argument("derive_theta: tol must lie in (0, 1/4)");
    const HPReal doubled = 2 * theta_units_estimate;
    const HPReal nearest = boost::multiprecision::round(doubled);
    DerivedAngle result;
    if (abs(doubled - nearest) < tol) {
        const long j = nearest.convert_to<long>();
        if (j > 0 && j < 2 * (t.b + t.c) && certify_theta(t, j)) {
            result.half_steps = j;
            result.classification =
                j % 2 == 0 ? Classification::integral : Classification::half_integral;
            result.certified = true;
        }
    }
    return result;
}

}  // namespace advangle
