#pragma once

#include "advangle/cyclotomic.hpp"

namespace advangle {

// Exact trigonometry of the angle j * 2*pi/n as elements of Q(zeta_n).
// sin and tan additionally need 4 | n so that i = zeta^{n/4} is in the field.

PowerSum cos_terms(long n, long j);  // (zeta^j + zeta^{-j}) / 2
PowerSum sin_terms(long n, long j);  // (zeta^j - zeta^{-j}) / (2i)

CycloElement cos_of(const CycloContext& ctx, long j);
CycloElement sin_of(const CycloContext& ctx, long j);
CycloElement tan_of(const CycloContext& ctx, long j);  // error at cos = 0

// tan of half the angle, via tan(alpha/2) = (1 - cos(alpha)) / sin(alpha);
// stays inside Q(zeta_n). Error at sin = 0.
CycloElement tan_half_angle(const CycloContext& ctx, long j);

}  // namespace advangle
