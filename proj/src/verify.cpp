#include "advangle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "advangle/oracle.hpp"
#include "advangle/trig.hpp"

namespace advangle {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult finish(const char* name, Clock::time_point start, bool pass, std::string detail) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {name, pass, std::move(detail), secs};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool contains_solution(const SearchReport& report, long a, long b, long c, long half_steps) {
    return std::any_of(report.solutions.begin(), report.solutions.end(), [&](const auto& rec) {
        return rec.triplet.a == a && rec.triplet.b == b && rec.triplet.c == c &&
               rec.half_steps == half_steps;
    });
}

bool sorted_and_canonical(const SearchReport& report) {
    const auto key = [](const SearchRecord& r) {
        return std::tuple(r.triplet.a, r.triplet.b, r.triplet.c);
    };
    for (std::size_t i = 0; i < report.solutions.size(); ++i) {
        if (!is_canonical(report.solutions[i].triplet)) return false;
        if (i > 0 && !(key(report.solutions[i - 1]) < key(report.solutions[i]))) return false;
    }
    return true;
}

}  // namespace

CheckResult check_enumeration_count(const Convention& conv, std::uint64_t expected) {
    const auto start = Clock::now();
    const std::uint64_t by_formula = triplet_count(conv);
    const std::uint64_t by_walk = enumerate_triplets(conv).size();

    std::uint64_t closed_form = expected;
    if (conv == Convention::tripp_even()) closed_form = binomial(89, 3);
    if (conv == Convention::full()) closed_form = binomial(90, 3) + binomial(89, 3);

    const bool pass = by_formula == expected && by_walk == expected && closed_form == expected;
    std::ostringstream d;
    d << conv.name() << ": " << by_walk << " triplets (expected " << expected << ")";
    return finish("enumeration-count", start, pass, d.str());
}

bool phi_product_identity(long n, const std::function<Zpoly(long)>& phi_of) {
    Zpoly prod = {1};
    for (long d : divisors(n)) prod = poly_mul(prod, phi_of(d));
    return prod == x_pow_minus_one(n);
}

CheckResult check_phi_product(long nmax) {
    const auto start = Clock::now();
    for (long n = 1; n <= nmax; ++n) {
        if (!phi_product_identity(n, [](long d) { return cyclo_context(d).phi_poly(); })) {
            return finish("cyclotomic-phi-product", start, false,
                          "identity fails at n = " + std::to_string(n));
        }
    }
    return finish("cyclotomic-phi-product", start, true,
                  "prod Phi_d = x^n - 1 for n <= " + std::to_string(nmax));
}

CheckResult check_quadling_proof_chain() {
    const auto start = Clock::now();
    const Triplet t{45, 45, 15, 180};
    const auto [num, den] = quadling_ratio(t);
    const auto& ctx = cyclo_context(720);
    // sin(7.5 deg) = index 15, sin(45 + 15 - 7.5 deg) = index 105
    const bool pass = sin_of(ctx, 15) * den == sin_of(ctx, 105) * num &&
                      !num.is_zero() && !den.is_zero();
    return finish("quadling-proof-chain", start, pass,
                  "ratio(45,45,15) = sin(7.5deg)/sin(52.5deg) in Q(zeta_720)");
}

CheckResult check_fractional_certificates() {
    const auto start = Clock::now();
    const Triplet t{45, 45, 15, 180};
    bool pass = certify_theta(t, 15);
    for (long j : {13, 14, 16, 17, 29, 31})
        pass = pass && !certify_theta(t, j);
    const HPReal est = estimate_theta_units(t, 100);
    const DerivedAngle da = derive_theta(t, est, HPReal("1e-30"));
    pass = pass && da.certified && da.half_steps == 15 &&
           da.classification == Classification::half_integral;
    return finish("fractional-solution-certificate", start, pass,
                  "(45,45,15) certifies exactly at theta = 7.5 deg, neighbors fail");
}

CheckResult check_lemma1_tangent_degrees() {
    const auto start = Clock::now();
    std::ostringstream d;
    bool pass = true;
    for (long n : {4L, 8L, 12L, 16L, 20L, 24L}) {
        const auto& ctx = cyclo_context(n);
        // tan(pi/n) = tan of half the angle 2*pi/n
        const long deg = poly_degree(minimal_polynomial(tan_half_angle(ctx, 1)));
        pass = pass && (deg == ctx.degree() / 2);
        d << "n=" << n << ":" << deg << " ";
    }
    return finish("lemma1-tangent-degree", start, pass,
                  "deg minpoly(tan(pi/n)) = phi(n)/2; " + d.str());
}

CheckResult check_lemma3_tangent_subfields(long base, long mmax) {
    const auto start = Clock::now();
    const std::string name = "lemma3-subfield-" + std::to_string(base);
    for (long m = 1; m <= mmax; ++m) {
        const auto& ctx = cyclo_context(base * m);
        const bool member = in_subfield(tan_of(ctx, 1), base);
        if (member != (2 % m == 0)) {
            return finish(name.c_str(), start, false,
                          "tan(2pi/" + std::to_string(base * m) + ") membership wrong at m=" +
                              std::to_string(m));
        }
    }
    return finish(name.c_str(), start, true,
                  "tan(2pi/(" + std::to_string(base) + "m)) in Q(zeta_" + std::to_string(base) +
                      ") iff m | 2, m <= " + std::to_string(mmax));
}

CheckResult check_tripp_even_search(const SearchReport& report) {
    const auto start = Clock::now();
    const bool pass = report.total_enumerated == 113564 && report.integral_count == 53 &&
                      report.half_integral_count == 0 && report.solutions.size() == 53 &&
                      contains_solution(report, 20, 60, 50, 60) && sorted_and_canonical(report);
    std::ostringstream d;
    d << report.integral_count << " integral, " << report.half_integral_count
      << " half-integral of " << report.total_enumerated << "; Langley (20,60,50;30deg) "
      << (contains_solution(report, 20, 60, 50, 60) ? "present" : "missing");
    return finish("search-tripp-even", start, pass, d.str());
}

CheckResult check_full_search(const SearchReport& report, const SearchReport& tripp_report) {
    const auto start = Clock::now();
    bool nested = true;
    for (const auto& rec : tripp_report.solutions) {
        nested = nested && contains_solution(report, rec.triplet.a, rec.triplet.b, rec.triplet.c,
                                             rec.half_steps.value_or(-1));
    }
    const bool unique_half = report.half_integral_count == 1 &&
                             contains_solution(report, 45, 45, 15, 15);
    bool mirror_free = true;
    for (const auto& rec : report.solutions)
        mirror_free = mirror_free && is_canonical(rec.triplet);
    const bool pass = report.total_enumerated == 231044 && unique_half && mirror_free &&
                      nested && sorted_and_canonical(report);
    std::ostringstream d;
    d << report.integral_count << " integral, " << report.half_integral_count
      << " half-integral of " << report.total_enumerated
      << "; unique fractional solution (45,45,15;7.5deg) "
      << (unique_half ? "confirmed" : "violated");
    return finish("search-full", start, pass, d.str());
}

CheckResult check_unit60_search(const SearchReport& report) {
    const auto start = Clock::now();
    bool all_half_steps = true;
    for (const auto& rec : report.solutions)
        all_half_steps = all_half_steps && rec.half_steps.has_value() && rec.certified;
    const bool pass = report.half_integral_count == 1 &&
                      contains_solution(report, 15, 15, 5, 5) && all_half_steps &&
                      sorted_and_canonical(report);
    std::ostringstream d;
    d << "unit pi/60: (15,15,5; 2.5 units) "
      << (contains_solution(report, 15, 15, 5, 5) ? "certified" : "missing") << ", "
      << report.integral_count << " integral, " << report.half_integral_count
      << " half-integral; every certificate on the half-step grid";
    return finish("search-unit-60", start, pass, d.str());
}

CheckResult check_quarter_step_fuzz(int samples, unsigned seed) {
    const auto start = Clock::now();
    std::mt19937 rng(seed);
    // positive controls: true solutions still certify on the quarter grid
    bool pass = certify_theta_at(Triplet{20, 60, 50, 180}, 120, 4) &&
                certify_theta_at(Triplet{45, 45, 15, 180}, 30, 4) &&
                certify_theta_at(Triplet{15, 15, 5, 60}, 10, 4);

    int tested = 0;
    const Convention conventions[] = {Convention::full(), Convention::unit(60)};
    while (tested < samples && pass) {
        const Convention& conv = conventions[tested % 2];
        const auto apexes = apex_values(conv);
        const long a = apexes[rng() % apexes.size()];
        const long m = max_cevian(conv, a);
        std::uniform_int_distribution<long> bdist(2, m);
        const long b = bdist(rng);
        std::uniform_int_distribution<long> cdist(1, b - 1);
        const long c = cdist(rng);
        const Triplet t{a, b, c, conv.unit_n};

        const HPReal est = estimate_theta_units(t, 60);
        const long quarter = boost::multiprecision::round(HPReal(4 * est)).convert_to<long>();
        std::vector<long> candidates;
        for (long j : {quarter - 1, quarter, quarter + 1})
            if (j % 2 != 0) candidates.push_back(j);
        std::uniform_int_distribution<long> jdist(0, 2 * (t.b + t.c) - 1);
        candidates.push_back(2 * jdist(rng) + 1);
        candidates.push_back(2 * jdist(rng) + 1);
        for (long j : candidates) {
            if (j <= 0 || j >= 4 * (t.b + t.c)) continue;
            if (certify_theta_at(t, j, 4)) {
                pass = false;
                return finish("quarter-step-fuzz", start, false,
                              "denominator-4 candidate " + std::to_string(j) +
                                  " certified for (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
        ++tested;
    }
    return finish("quarter-step-fuzz", start, pass,
                  std::to_string(tested) +
                      " sampled triplets: no quarter-step candidate certifies; "
                      "known solutions re-certify on the finer grid");
}

CheckResult check_oracle_agreement(const SearchReport& report, int digits) {
    const auto start = Clock::now();
    PrecisionScope scope(digits);
    const HPReal bound = pow(HPReal(10), -(digits - 10));
    HPReal worst(0);
    for (const auto& rec : report.solutions) {
        const HPReal est_deg =
            estimate_theta_degrees(construct_figure(rec.triplet, digits), digits);
        const HPReal exact_deg =
            HPReal(90 * rec.half_steps.value()) / rec.triplet.unit_n;
        const HPReal gap = abs(est_deg - exact_deg);
        if (gap > worst) worst = gap;
    }
    const bool pass = worst < bound;
    std::ostringstream d;
    d << report.solutions.size() << " solutions; worst |estimate - exact| = "
      << worst.str(3, std::ios_base::scientific) << " < 1e-" << (digits - 10);
    return finish("oracle-agreement", start, pass, d.str());
}

CheckResult check_field_axioms() {
    const auto start = Clock::now();
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (long n : {4L, 8L, 12L, 24L}) {
        const auto& ctx = cyclo_context(n);
        const auto one = CycloElement::from_rational(ctx, frac(1));
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Rational> cx(ctx.degree()), cy(ctx.degree()), cz(ctx.degree());
            for (long i = 0; i < ctx.degree(); ++i) {
                cx[i] = frac(num(rng), den(rng));
                cy[i] = frac(num(rng), den(rng));
                cz[i] = frac(num(rng), den(rng));
            }
            const CycloElement x(ctx, cx), y(ctx, cy), z(ctx, cz);
            if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z))
                return finish("field-axioms", start, false, "failure at n=" + std::to_string(n));
            if (!x.is_zero() && !(x * inverse(x) == one))
                return finish("field-axioms", start, false,
                              "inverse failure at n=" + std::to_string(n));
        }
    }
    return finish("field-axioms", start, true,
                  "associativity, distributivity, inverses on random elements");
}

CheckResult check_trig_identities() {
    const auto start = Clock::now();
    const auto& ctx = cyclo_context(720);
    const auto one = CycloElement::from_rational(ctx, frac(1));

    // Pythagorean identity for every angle index of the working field
    for (long j = 0; j < 720; ++j) {
        PowerSum s = sin_terms(720, j), c = cos_terms(720, j);
        if (!((s * s + c * c).to_element(ctx) == one))
            return finish("trig-identities", start, false,
                          "sin^2+cos^2 != 1 at j=" + std::to_string(j));
    }
    // parity and angle addition on a sample grid
    for (long j : {1L, 15L, 60L, 101L, 359L}) {
        if (!(sin_of(ctx, -j) == -sin_of(ctx, j)) || !(cos_of(ctx, -j) == cos_of(ctx, j)))
            return finish("trig-identities", start, false, "parity fails at j=" + std::to_string(j));
        for (long k : {2L, 45L, 180L}) {
            const auto lhs = sin_of(ctx, j + k);
            const auto rhs = sin_of(ctx, j) * cos_of(ctx, k) + cos_of(ctx, j) * sin_of(ctx, k);
            if (!(lhs == rhs))
                return finish("trig-identities", start, false, "angle addition fails");
        }
    }
    // half-angle consistency across conductors
    for (long n : {24L, 48L, 720L}) {
        const auto& small = cyclo_context(n);
        const auto& doubled = cyclo_context(2 * n);
        for (long j : {1L, 2L, 5L}) {
            if (2 * j % n == 0) continue;
            if (!(lift(tan_half_angle(small, j), 2 * n) == tan_of(doubled, j)))
                return finish("trig-identities", start, false,
                              "half-angle mismatch at n=" + std::to_string(n) +
                                  ", j=" + std::to_string(j));
        }
    }
    // Niven-style rationality: integral-degree cosines 0..90 are rational
    // exactly at 0, 60, 90 degrees
    for (long deg = 0; deg <= 90; ++deg) {
        const bool rational = rational_value(cos_of(ctx, 2 * deg)).has_value();
        const bool expected = deg == 0 || deg == 60 || deg == 90;
        if (rational != expected)
            return finish("trig-identities", start, false,
                          "cos rationality wrong at " + std::to_string(deg) + " deg");
    }
    return finish("trig-identities", start, true,
                  "Pythagorean (all j mod 720), parity, addition, half-angle, cos rationality");
}

CheckResult check_mirror_identity(const SearchReport& report, int digits) {
    const auto start = Clock::now();
    PrecisionScope scope(digits);
    const HPReal bound = pow(HPReal(10), -(digits - 10));
    for (const auto& rec : report.solutions) {
        const Triplet& t = rec.triplet;
        const Triplet mirrored{t.a, t.c, t.b, t.unit_n};
        const long j = rec.half_steps.value();
        if (!certify_theta(mirrored, mirror_half_steps(t, j)))
            return finish("mirror-identity", start, false,
                          "mirror certificate fails for (" + std::to_string(t.a) + "," +
                              std::to_string(t.b) + "," + std::to_string(t.c) + ")");
        const HPReal sum = estimate_theta_units(t, digits) + estimate_theta_units(mirrored, digits);
        if (abs(sum - (t.b + t.c)) > bound)
            return finish("mirror-identity", start, false, "numeric mirror sum off");
    }
    return finish("mirror-identity", start, true,
                  "theta(a,b,c) + theta(a,c,b) = b + c, exact and numeric, on all solutions");
}

CheckResult check_tripp_quadling_cross(const SearchReport& report) {
    const auto start = Clock::now();
    for (const auto& rec : report.solutions) {
        const auto [num, den] = tan_theta_pair(rec.triplet);
        const auto& ctx = num.context();
        const long scale = ctx.conductor() / (2 * rec.triplet.unit_n);  // = 2
        const long j = rec.half_steps.value() * scale / 2;
        if (!(num * cos_of(ctx, j) == den * sin_of(ctx, j)))
            return finish("tripp-quadling-cross", start, false,
                          "tangent formula disagrees at (" + std::to_string(rec.triplet.a) + "," +
                              std::to_string(rec.triplet.b) + "," +
                              std::to_string(rec.triplet.c) + ")");
    }
    return finish("tripp-quadling-cross", start, true,
                  "sine-rule tangent pair matches certified theta on all solutions");
}

CheckResult check_quadling_positivity(const Convention& conv) {
    const auto start = Clock::now();
    const long two_n = 2 * conv.unit_n;
    std::uint64_t checked = 0;
    for (long a : apex_values(conv)) {
        const long m = max_cevian(conv, a);
        for (long b = 2; b <= m; ++b) {
            for (long c = 1; c < b; ++c) {
                // cos args (half-units) must avoid +-90 deg, sin args 0/180 deg
                for (long x2 : {2 * b + a, 2 * b - a, 2 * c - a, 2 * c + a}) {
                    const long r = ((x2 % two_n) + two_n) % two_n;
                    if (r == conv.unit_n)
                        return finish("quadling-positivity", start, false,
                                      "cosine factor vanishes");
                }
                for (long x2 : {2 * b, 2 * c}) {
                    if (x2 % two_n == 0)
                        return finish("quadling-positivity", start, false, "sine factor vanishes");
                }
                ++checked;
            }
        }
    }
    // sign spot check with high-precision evaluation
    PrecisionScope scope(60);
    std::mt19937 rng(99);
    const auto apexes = apex_values(conv);
    const HPReal unit = hp_pi() / conv.unit_n;
    for (int trial = 0; trial < 200; ++trial) {
        const long a = apexes[rng() % apexes.size()];
        const long m = max_cevian(conv, a);
        std::uniform_int_distribution<long> bdist(2, m);
        const long b = bdist(rng);
        std::uniform_int_distribution<long> cdist(1, b - 1);
        const long c = cdist(rng);
        const HPReal half = unit / 2;
        for (long x2 : {2 * b + a, 2 * b - a, 2 * c - a, 2 * c + a})
            if (cos(half * x2) <= 0)
                return finish("quadling-positivity", start, false, "cosine factor not positive");
        for (long x2 : {2 * b, 2 * c})
            if (sin(half * x2) <= 0)
                return finish("quadling-positivity", start, false, "sine factor not positive");
    }
    return finish("quadling-positivity", start, true,
                  "all ratio factors nonzero over " + std::to_string(checked) +
                      " triplets, positive on samples");
}

std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream& progress) {
    std::vector<CheckResult> results;
    auto push = [&](CheckResult r) {
        progress << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        for (std::size_t i = r.name.size(); i < 34; ++i) progress << ' ';
        progress << r.detail << "  [" << static_cast<int>(r.seconds * 1000) << " ms]\n"
                 << std::flush;
        results.push_back(std::move(r));
    };

    push(check_enumeration_count(Convention::tripp_even(), 113564));
    push(check_enumeration_count(Convention::full(), 231044));
    push(check_phi_product(100));
    push(check_quadling_proof_chain());
    push(check_fractional_certificates());
    push(check_lemma1_tangent_degrees());
    push(check_lemma3_tangent_subfields(24, 6));
    push(check_field_axioms());
    push(check_trig_identities());

    if (!options.quick) {
        auto timed_search = [&](const Convention& conv, auto check) {
            const auto start = Clock::now();
            SearchReport report = run_search(conv, options.digits, options.tol, options.jobs);
            CheckResult r = check(report);
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            push(std::move(r));
            return report;
        };
        const SearchReport tripp = timed_search(Convention::tripp_even(), check_tripp_even_search);
        const SearchReport full = timed_search(Convention::full(), [&](const SearchReport& r) {
            return check_full_search(r, tripp);
        });
        const SearchReport unit60 = timed_search(Convention::unit(60), check_unit60_search);
        push(check_oracle_agreement(full, options.digits));
        push(check_mirror_identity(full, options.digits));
        push(check_tripp_quadling_cross(full));
        push(check_quadling_positivity(Convention::full()));
        push(check_quarter_step_fuzz(options.fuzz_samples, options.fuzz_seed));
        push(check_lemma3_tangent_subfields(360, 6));
    }
    return results;
}

}  // namespace advangle
