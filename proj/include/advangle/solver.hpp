#pragma once

#include <optional>
#include <utility>

#include "advangle/cyclotomic.hpp"
#include "advangle/hp.hpp"

namespace advangle {

// Problem instance: isosceles triangle ABC (AB = AC) with apex angle a at A,
// cevians BD (angle b against BC) and CE (angle c against CB), all measured in
// integer multiples of pi/unit_n radians (degrees when unit_n = 180). The
// derived angle theta is the angle EDB at D.
struct Triplet {
    long a = 0;
    long b = 0;
    long c = 0;
    long unit_n = 180;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Positivity and interiority: cevian angles stay strictly below the base
// angle (unit_n - a)/2, so D and E land inside the triangle sides.
// Throws std::invalid_argument otherwise.
void validate_geometry(const Triplet& t);

// Search-convention form on top of geometric validity: b > c (mirror images
// and the trivial b = c diagonal are excluded).
bool is_canonical(const Triplet& t);

enum class Classification { integral, half_integral, not_rational };

const char* to_string(Classification c);
std::optional<Classification> classification_from_string(const std::string& s);

struct DerivedAngle {
    std::optional<long> half_steps;  // theta = half_steps / 2 units when rational
    Classification classification = Classification::not_rational;
    bool certified = false;
};

// Conductor of the cyclotomic field housing all exact work for t at the given
// sub-step resolution (2 = half steps). Half steps of the unit pi/N are
// turns of 1/(4N), hence conductor 4N.
long conductor_for(const Triplet& t, long steps_per_unit = 2);

// Exact tan(theta) as a projective pair (num, den) in Q(zeta_{4N}) from the
// sine-rule formula; den = 0 encodes theta = 90 degrees.
std::pair<CycloElement, CycloElement> tan_theta_pair(const Triplet& t);

// Exact right-hand side of the sine-ratio identity
//   sin(theta) / sin(b+c-theta)
//     = cos(b+a/2) sin(c) cos(b-a/2) / (cos(c-a/2) sin(b) cos(c+a/2))
// as a (num, den) pair; both sides are nonzero for valid triplets.
std::pair<CycloElement, CycloElement> quadling_ratio(const Triplet& t);

// Exact certificate that theta equals half_steps half-units: cross-multiplied
// sine-ratio identity in Q(zeta_{4N}). sin(theta)/sin(b+c-theta) is strictly
// increasing on (0, b+c), so at most one candidate can pass; a passing
// candidate is the derived angle. Requires 0 < half_steps < 2(b+c).
bool certify_theta(const Triplet& t, long half_steps);

// Same certificate at a finer grid: theta = numer / steps_per_unit units in
// conductor 2 * steps_per_unit * N. steps_per_unit must be even; 4 probes
// quarter-step candidates (they must all fail for odd numer).
bool certify_theta_at(const Triplet& t, long numer, long steps_per_unit);

// The derived angle of the mirrored triplet (a, c, b): theta' = b + c - theta.
long mirror_half_steps(const Triplet& t, long half_steps);

// Numeric-propose / exact-certify classification. theta_units_estimate is the
// oracle's estimate of theta in units; tol (in half-step distance) must be
// below 1/4 so the proposal grid is unambiguous. Any rational theta has
// denominator at most 2, so it lands exactly on a half step and is certified;
// everything else is not rational.
DerivedAngle derive_theta(const Triplet& t, const HPReal& theta_units_estimate,
                          const HPReal& tol);

}  // namespace advangle
