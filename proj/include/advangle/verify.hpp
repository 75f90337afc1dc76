#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "advangle/search.hpp"

namespace advangle {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Enumeration counts against the closed-form binomial sums.
CheckResult check_enumeration_count(const Convention& conv, std::uint64_t expected);

// prod_{d | n} Phi_d = x^n - 1 for all n <= nmax.
CheckResult check_phi_product(long nmax);
// Same identity against an arbitrary polynomial source (fault-injection hook).
bool phi_product_identity(long n, const std::function<Zpoly(long)>& phi_of);

// The sine-ratio value for (45,45,15) equals sin(7.5 deg)/sin(52.5 deg) exactly.
CheckResult check_quadling_proof_chain();

// (45,45,15) certifies at 7.5 degrees and at no neighboring half step.
CheckResult check_fractional_certificates();

// deg minpoly(tan(pi/n)) = phi(n)/2 for n in {4, 8, 12, 16, 20, 24}.
CheckResult check_lemma1_tangent_degrees();

// tan(2*pi/(base*m)) lies in Q(zeta_base) iff m | 2, for m = 1..mmax.
CheckResult check_lemma3_tangent_subfields(long base, long mmax);

CheckResult check_tripp_even_search(const SearchReport& report);
CheckResult check_full_search(const SearchReport& report, const SearchReport& tripp_report);
CheckResult check_unit60_search(const SearchReport& report);

// Quarter-step candidates (denominator 4) must always fail exact
// certification; known solutions re-certify on the finer grid as controls.
CheckResult check_quarter_step_fuzz(int samples, unsigned seed);

// |theta_estimate - theta_exact| < 10^{-(digits-10)} for every solution.
CheckResult check_oracle_agreement(const SearchReport& report, int digits);

CheckResult check_field_axioms();
CheckResult check_trig_identities();  // Pythagorean over all of zeta_720, parity,
                                      // angle addition, half-angle consistency
CheckResult check_mirror_identity(const SearchReport& report, int digits);
CheckResult check_tripp_quadling_cross(const SearchReport& report);

// All six sine/cosine factors of the ratio are exactly nonzero across the
// whole convention (integer congruences), positive on a sample.
CheckResult check_quadling_positivity(const Convention& conv);

struct VerifyOptions {
    bool quick = false;
    int digits = 100;
    std::string tol = "1e-30";
    int jobs = 0;
    int fuzz_samples = 120;
    unsigned fuzz_seed = 20250809;
};

// Runs the suite (quick skips the full searches, the base-360 subfield check,
// and the fuzz harness), streaming one row per check; returns all results.
std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream& progress);

}  // namespace advangle
