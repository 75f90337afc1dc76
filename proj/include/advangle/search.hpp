#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "advangle/solver.hpp"

namespace advangle {

// Enumeration conventions. TrippEven is the classical degree-mode space with
// even apex (113564 triplets); Full admits every apex 1..177 (231044); the
// generalized form replaces 180 by N (angles in multiples of pi/N).
struct Convention {
    enum class Kind { tripp_even, full, generalized };

    Kind kind = Kind::tripp_even;
    long unit_n = 180;

    static Convention tripp_even() { return {Kind::tripp_even, 180}; }
    static Convention full() { return {Kind::full, 180}; }
    static Convention unit(long n) { return {Kind::generalized, n}; }

    // "tripp-even" | "full" | "unit:N"; throws std::invalid_argument
    static Convention parse(const std::string& s);
    std::string name() const;

    friend bool operator==(const Convention&, const Convention&) = default;
};

std::vector<long> apex_values(const Convention& conv);
long max_cevian(const Convention& conv, long apex);  // largest admissible b

// Number of triplets in the convention, by closed-form sum over apexes.
std::uint64_t triplet_count(const Convention& conv);

// All triplets in (a, b, c) lexicographic order.
std::vector<Triplet> enumerate_triplets(const Convention& conv);
void for_each_triplet(const Convention& conv, long apex,
                      const std::function<void(const Triplet&)>& fn);

struct SearchRecord {
    Triplet triplet;
    std::string theta_estimate;  // units, fixed 50 decimal places
    std::optional<long> half_steps;
    Classification classification = Classification::not_rational;
    bool certified = false;

    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct SearchReport {
    Convention convention;
    std::uint64_t total_enumerated = 0;
    long integral_count = 0;
    long half_integral_count = 0;
    int digits = 100;
    std::string tol = "1e-30";
    int workers = 1;  // informational; excluded from exports and equality
    std::vector<SearchRecord> solutions;  // certified only, sorted by (a, b, c)

    // Equality of exported content (everything except workers).
    friend bool operator==(const SearchReport& x, const SearchReport& y) {
        return x.convention == y.convention && x.total_enumerated == y.total_enumerated &&
               x.integral_count == y.integral_count &&
               x.half_integral_count == y.half_integral_count && x.digits == y.digits &&
               x.tol == y.tol && x.solutions == y.solutions;
    }
};

// The two-phase search: high-precision estimate of theta for every triplet,
// half-step proposals within tol, exact certification of each proposal.
// Deterministic for fixed (convention, digits, tol) regardless of workers.
// workers <= 0 reads ADVANGLE_JOBS, then hardware concurrency.
SearchReport run_search(const Convention& conv, int digits, const std::string& tol,
                        int workers = 0);

// Exact theta = half_steps/2 units rendered with 50 decimal places.
std::string half_steps_decimal(long half_steps);

void write_csv(const SearchReport& report, std::ostream& out);
std::string to_json(const SearchReport& report);
SearchReport report_from_json(const std::string& text);

// format is "csv" or "json"; throws on unknown format or unwritable path.
void export_report(const SearchReport& report, const std::string& format,
                   const std::string& path);

}  // namespace advangle
