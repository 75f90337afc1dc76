#include "advangle/trig.hpp"

#include <stdexcept>

namespace advangle {

namespace {

long mod_n(long k, long n) {
    long r = k % n;
    return r < 0 ? r + n : r;
}

void require_quarter(long n, const char* who) {
    if (n % 4 != 0)
        throw std::invalid_argument(std::string(who) + ": conductor must be divisible by 4");
}

// 1 / cos(j * 2*pi/n), from cos = zeta^{-j} (1 + zeta^{2j}) / 2. Keeps the
// large-conductor tangent constructions clear of the generic extended Euclid.
CycloElement inv_cos(const CycloContext& ctx, long j) {
    const long n = ctx.conductor();
    const long jn = mod_n(j, n);
    const long two_j = 2 * jn % n;
    if (two_j == 0) {
        // zeta^j = +-1, cos = +-1
        return CycloElement::from_rational(ctx, frac(jn == 0 ? 1 : -1));
    }
    const long b = (two_j + n / 2) % n;  // 1 + zeta^{2j} = 1 - zeta^b
    if (b == 0) throw std::domain_error("tangent pole: cos of the angle is zero");
    PowerSum two_zeta_j(n);
    two_zeta_j.add(jn, frac(2));
    return two_zeta_j.to_element(ctx) * inv_one_minus_zeta_pow(ctx, b);
}

// 1 / sin(j * 2*pi/n) = -2 * zeta^{j + n/4} / (1 - zeta^{2j}).
CycloElement inv_sin(const CycloContext& ctx, long j) {
    const long n = ctx.conductor();
    const long jn = mod_n(j, n);
    const long two_j = 2 * jn % n;
    if (two_j == 0) throw std::domain_error("half-angle undefined: sin of the angle is zero");
    PowerSum factor(n);
    factor.add(jn + n / 4, frac(-2));
    return factor.to_element(ctx) * inv_one_minus_zeta_pow(ctx, two_j);
}

}  // namespace

PowerSum cos_terms(long n, long j) {
    PowerSum ps(n);
    ps.add(j, frac(1, 2));
    ps.add(-j, frac(1, 2));
    return ps;
}

PowerSum sin_terms(long n, long j) {
    require_quarter(n, "sin_terms");
    // 1 / (2i) = zeta^{3n/4} / 2
    PowerSum ps(n);
    ps.add(j + 3 * n / 4, frac(1, 2));
    ps.add(-j + 3 * n / 4, frac(-1, 2));
    return ps;
}

CycloElement cos_of(const CycloContext& ctx, long j) {
    return cos_terms(ctx.conductor(), j).to_element(ctx);
}

CycloElement sin_of(const CycloContext& ctx, long j) {
    return sin_terms(ctx.conductor(), j).to_element(ctx);
}

CycloElement tan_of(const CycloContext& ctx, long j) {
    require_quarter(ctx.conductor(), "tan_of");
    return sin_of(ctx, j) * inv_cos(ctx, j);
}

CycloElement tan_half_angle(const CycloContext& ctx, long j) {
    require_quarter(ctx.conductor(), "tan_half_angle");
    CycloElement one = CycloElement::from_rational(ctx, frac(1));
    return (one - cos_of(ctx, j)) * inv_sin(ctx, j);
}

}  // namespace advangle
