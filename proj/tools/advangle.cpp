#include <CLI11.hpp>

#include <iostream>

#include "advangle/oracle.hpp"
#include "advangle/search.hpp"
#include "advangle/trig.hpp"
#include "advangle/verify.hpp"

namespace {

using namespace advangle;

int cmd_solve(long a, long b, long c, long unit_n, int digits, const std::string& tol) {
    const Triplet t{a, b, c, unit_n};
    validate_geometry(t);
    PrecisionScope scope(digits);
    const HPReal est = estimate_theta_units(t, digits);
    const DerivedAngle da = derive_theta(t, est, HPReal(tol));

    std::cout << "triplet: (" << a << ", " << b << ", " << c << ") in units of pi/" << unit_n
              << (unit_n == 180 ? " (degrees)" : "") << "\n";
    std::cout << "theta estimate: " << est.str(50, std::ios_base::fixed) << " units\n";
    std::cout << "classification: " << to_string(da.classification) << "\n";
    if (da.half_steps) {
        std::cout << "theta: " << half_steps_decimal(*da.half_steps) << " units ("
                  << *da.half_steps << " half-steps), certified exactly\n";
        std::cout << "mirror (a, c, b) derives " << half_steps_decimal(mirror_half_steps(t, *da.half_steps))
                  << " units\n";
    } else {
        std::cout << "theta: not a rational number of units "
                     "(any rational value would lie on the half-step grid)\n";
    }
    return 0;
}

int cmd_search(const std::string& convention, int digits, const std::string& tol, int jobs,
               const std::string& out, const std::string& format) {
    const Convention conv = Convention::parse(convention);
    const SearchReport report = run_search(conv, digits, tol, jobs);
    std::cout << "convention:      " << conv.name() << "\n"
              << "enumerated:      " << report.total_enumerated << "\n"
              << "integral:        " << report.integral_count << "\n"
              << "half-integral:   " << report.half_integral_count << "\n"
              << "workers:         " << report.workers << "\n";
    if (!out.empty()) {
        export_report(report, format, out);
        std::cout << "wrote " << format << " report to " << out << "\n";
    } else {
        std::cout << "\n";
        write_csv(report, std::cout);
    }
    return 0;
}

int cmd_counts(const std::string& convention) {
    const Convention conv = Convention::parse(convention);
    std::cout << triplet_count(conv) << "\n";
    return 0;
}

int cmd_verify(bool quick, int digits, const std::string& tol, int jobs) {
    VerifyOptions options;
    options.quick = quick;
    options.digits = digits;
    options.tol = tol;
    options.jobs = jobs;
    const auto results = run_verify(options, std::cout);
    long failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << (failed ? "FAILED" : "OK") << ": " << results.size() - failed << "/"
              << results.size() << " checks passed\n";
    return failed ? 1 : 0;
}

int cmd_minpoly(long n, long angle, const std::string& fn) {
    const auto& ctx = cyclo_context(n);
    CycloElement x = CycloElement::zero(ctx);
    if (fn == "cos") {
        x = cos_of(ctx, angle);
    } else if (fn == "sin") {
        x = sin_of(ctx, angle);
    } else if (fn == "tan") {
        x = tan_of(ctx, angle);
    } else {
        throw CLI::ValidationError("--fn must be tan, sin, or cos");
    }
    const Qpoly p = minimal_polynomial(x);
    std::cout << fn << "(" << angle << " * 2pi/" << n << "): " << poly_to_string(p)
              << "  (degree " << poly_degree(p) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and exhaustive search for adventitious angles"};
    app.require_subcommand(1);

    long a = 0, b = 0, c = 0, unit_n = 180;
    int digits = 100, jobs = 0;
    std::string tol = "1e-30";

    auto* solve = app.add_subcommand("solve", "derive theta for one triplet");
    solve->add_option("--a", a, "apex angle")->required();
    solve->add_option("--b", b, "cevian angle at B")->required();
    solve->add_option("--c", c, "cevian angle at C")->required();
    solve->add_option("--unit", unit_n, "angle unit is pi/N radians")->capture_default_str();
    solve->add_option("--digits", digits, "working decimal precision")->capture_default_str();
    solve->add_option("--tol", tol, "half-step proposal tolerance")->capture_default_str();

    std::string convention = "tripp-even", out, format = "csv";
    auto* search = app.add_subcommand("search", "run the two-phase exhaustive search");
    search->add_option("--convention", convention, "tripp-even | full | unit:N")->capture_default_str();
    search->add_option("--digits", digits, "estimate precision (>= 50)")->capture_default_str();
    search->add_option("--tol", tol, "half-step proposal tolerance")->capture_default_str();
    search->add_option("--jobs", jobs, "worker threads (0 = auto)")->capture_default_str();
    search->add_option("--out", out, "write the report to this path");
    search->add_option("--format", format, "csv | json")->capture_default_str();

    auto* counts = app.add_subcommand("counts", "triplet count of a convention");
    counts->add_option("--convention", convention, "tripp-even | full | unit:N")->capture_default_str();

    bool quick = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--quick", quick, "skip the full searches and slow checks");
    verify->add_option("--digits", digits, "search precision")->capture_default_str();
    verify->add_option("--tol", tol, "search tolerance")->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads (0 = auto)")->capture_default_str();

    long mp_n = 0, mp_angle = 0;
    std::string fn = "tan";
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial diagnostics");
    minpoly->add_option("--n", mp_n, "conductor")->required();
    minpoly->add_option("--angle", mp_angle, "angle index j (angle = j * 2pi/n)")->required();
    minpoly->add_option("--fn", fn, "tan | sin | cos")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, bad arguments exit 2
    }

    try {
        if (solve->parsed()) return cmd_solve(a, b, c, unit_n, digits, tol);
        if (search->parsed()) return cmd_search(convention, digits, tol, jobs, out, format);
        if (counts->parsed()) return cmd_counts(convention);
        if (verify->parsed()) return cmd_verify(quick, digits, tol, jobs);
        if (minpoly->parsed()) return cmd_minpoly(mp_n, mp_angle, fn);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
