#include "advangle/oracle.hpp"

#include <stdexcept>

namespace advangle {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::atan2;

HPReal cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
HPReal dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Point sub(const Point& u, const Point& v) { return {u.x - v.x, u.y - v.y}; }

// p + t*d meets q + s*e; returns (point, t, s). Degenerate when d x e = 0.
struct Hit {
    Point at;
    HPReal t;
    HPReal s;
};

Hit intersect(const Point& p, const Point& d, const Point& q, const Point& e) {
    const HPReal det = cross(d, e);
    if (det == 0) throw std::domain_error("construct_figure: parallel rays");
    const Point pq = sub(q, p);
    const HPReal t = cross(pq, e) / det;
    const HPReal s = cross(pq, d) / det;
    return {{p.x + t * d.x, p.y + t * d.y}, t, s};
}

}  // namespace

FigurePoints construct_figure(const Triplet& t, unsigned digits) {
    validate_geometry(t);
    PrecisionScope scope(digits);

    const HPReal unit = hp_pi() / t.unit_n;  // radians per angle unit
    const HPReal base = unit * (t.unit_n - t.a) / 2;

    FigurePoints fig;
    fig.B = {HPReal(0), HPReal(0)};
    fig.C = {HPReal(1), HPReal(0)};
    fig.A = {HPReal(1) / 2, tan(base) / 2};

    const HPReal rb = unit * t.b;
    const HPReal rc = unit * t.c;
    const Point dir_b{cos(rb), sin(rb)};    // from B, elevation b above BC
    const Point dir_c{-cos(rc), sin(rc)};   // from C, elevation c above CB

    // D = ray(B, dir_b) x segment A->C, E = ray(C, dir_c) x segment A->B
    const Hit hd = intersect(fig.B, dir_b, fig.A, sub(fig.C, fig.A));
    const Hit he = intersect(fig.C, dir_c, fig.A, sub(fig.B, fig.A));
    const Hit hf = intersect(fig.B, dir_b, fig.C, dir_c);
    fig.D = hd.at;
    fig.E = he.at;
    fig.F = hf.at;

    const bool interior = hd.t > 0 && hd.s > 0 && hd.s < 1 &&
                          he.t > 0 && he.s > 0 && he.s < 1 &&
                          hf.t > 0 && hf.t < hd.t && hf.s > 0 && hf.s < he.t;
    if (!interior) throw std::domain_error("construct_figure: degenerate configuration");
    return fig;
}

HPReal estimate_theta_degrees(const FigurePoints& p, unsigned digits) {
    PrecisionScope scope(digits);
    const Point v1 = sub(p.E, p.D);
    const Point v2 = sub(p.B, p.D);
    if ((v1.x == 0 && v1.y == 0) || (v2.x == 0 && v2.y == 0))
        throw std::domain_error("estimate_theta: coincident points");
    return atan2(abs(cross(v1, v2)), dot(v1, v2)) * 180 / hp_pi();
}

std::optional<long> near_half_step(const HPReal& theta_units, const HPReal& tol) {
    if (!(tol > 0) || !(tol < HPReal(0.25)))
        throw std::invalid_argument("near_half_step: tol must lie in (0, 1/4)");
    const HPReal doubled = 2 * theta_units;
    const HPReal nearest = boost::multiprecision::round(doubled);
    if (abs(doubled - nearest) < tol) return nearest.convert_to<long>();
    return std::nullopt;
}

HPReal estimate_theta_units(const Triplet& t, unsigned digits) {
    PrecisionScope scope(digits);
    const HPReal degrees = estimate_theta_degrees(construct_figure(t, digits), digits);
    return degrees * t.unit_n / 180;
}

}  // namespace advangle
