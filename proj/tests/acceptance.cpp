// Acceptance suite: every gate runs at its pinned tolerance and prints one
// pass/fail line. Exit code 0 only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "advangle/verify.hpp"

using namespace advangle;

namespace {

int failures = 0;

void report(int criterion, const char* title, const CheckResult& r) {
    if (!r.pass) ++failures;
    std::printf("%s  criterion %2d  %-38s %s  [%.1f s]\n", r.pass ? "PASS" : "FAIL", criterion,
                title, r.detail.c_str(), r.seconds);
    std::fflush(stdout);
}

void report(int criterion, const char* title, bool pass, const std::string& detail,
            double seconds) {
    report(criterion, title, CheckResult{"", pass, detail, seconds});
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const int digits = 100;
    const std::string tol = "1e-30";

    // 1. enumeration count of the classical even-apex space
    report(1, "tripp-even enumeration count", check_enumeration_count(Convention::tripp_even(), 113564));

    // 2. the 53 integral solutions, Langley instance included
    auto t2 = Clock::now();
    const SearchReport tripp = run_search(Convention::tripp_even(), digits, tol, 0);
    CheckResult r2 = check_tripp_even_search(tripp);
    r2.seconds = std::chrono::duration<double>(Clock::now() - t2).count();
    report(2, "53 integral solutions (tripp-even)", r2);

    // 3. unique fractional solution over the full convention
    auto t3 = Clock::now();
    const SearchReport full = run_search(Convention::full(), digits, tol, 0);
    CheckResult r3 = check_full_search(full, tripp);
    r3.seconds = std::chrono::duration<double>(Clock::now() - t3).count();
    report(3, "unique fractional solution (full)", r3);

    // 4. exact sine-ratio value of the proof chain
    report(4, "sine-ratio proof-chain identity", check_quadling_proof_chain());

    // 5. tangent generates the real subfield: degree phi(n)/2
    report(5, "tangent minimal-polynomial degrees", check_lemma1_tangent_degrees());

    // 6. subfield membership of tan(2pi/(24m)) iff m | 2
    report(6, "tangent subfield membership (base 24)", check_lemma3_tangent_subfields(24, 6));

    // 7. no candidate with denominator > 2 ever certifies
    {
        const auto start = Clock::now();
        const CheckResult fuzz = check_quarter_step_fuzz(120, 20250809);
        bool exhaustive = true;
        for (const auto& r : {tripp, full})
            for (const auto& rec : r.solutions)
                exhaustive = exhaustive && rec.certified && rec.half_steps.has_value();
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        report(7, "half-step completeness + quarter fuzz", fuzz.pass && exhaustive,
               fuzz.detail, secs);
    }

    // 8. generalized unit pi/60
    auto t8 = Clock::now();
    const SearchReport unit60 = run_search(Convention::unit(60), digits, tol, 0);
    CheckResult r8 = check_unit60_search(unit60);
    r8.seconds = std::chrono::duration<double>(Clock::now() - t8).count();
    report(8, "generalized-unit search (pi/60)", r8);

    // 9. oracle agreement at 100 digits
    {
        const auto start = Clock::now();
        const CheckResult a = check_oracle_agreement(tripp, digits);
        const CheckResult b = check_oracle_agreement(full, digits);
        const CheckResult c = check_oracle_agreement(unit60, digits);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        report(9, "oracle vs exact within 1e-90", a.pass && b.pass && c.pass, b.detail, secs);
    }

    // 10. property suites
    {
        const auto start = Clock::now();
        const CheckResult axioms = check_field_axioms();
        const CheckResult trig = check_trig_identities();
        const CheckResult mirror = check_mirror_identity(full, digits);
        const CheckResult cross = check_tripp_quadling_cross(full);
        const CheckResult positive = check_quadling_positivity(Convention::full());
        const bool pass =
            axioms.pass && trig.pass && mirror.pass && cross.pass && positive.pass;
        std::string detail = "field axioms, trig identities, mirror identity, "
                             "tangent cross-check, ratio positivity";
        for (const auto& r : {axioms, trig, mirror, cross, positive})
            if (!r.pass) detail = r.name + ": " + r.detail;
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        report(10, "property suites", pass, detail, secs);
    }

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
