#pragma once

#include <optional>

#include "advangle/hp.hpp"
#include "advangle/solver.hpp"

namespace advangle {

struct Point {
    HPReal x;
    HPReal y;
};

// Coordinate realization of the configuration: B = (0,0), C = (1,0), apex A
// above BC, D on AC, E on AB, F = BD intersect CE.
struct FigurePoints {
    Point B, C, A, D, E, F;
};

// High-precision construction of the figure at the given decimal precision.
// Throws std::domain_error on degenerate intersections (invalid triplets).
FigurePoints construct_figure(const Triplet& t, unsigned digits);

// The angle EDB at D, in degrees, via the two-argument arc-tangent of
// cross/dot products; lands in (0, 180).
HPReal estimate_theta_degrees(const FigurePoints& p, unsigned digits);

// Nearest half-step proposal: j = round(2 * theta_units) when within tol.
// tol must lie in (0, 1/4).
std::optional<long> near_half_step(const HPReal& theta_units, const HPReal& tol);

// Convenience: construct + estimate, returned in units of pi/unit_n.
HPReal estimate_theta_units(const Triplet& t, unsigned digits);

}  // namespace advangle
