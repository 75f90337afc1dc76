#include "advangle/search.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "advangle/oracle.hpp"

namespace advangle {

Convention Convention::parse(const std::string& s) {
    if (s == "tripp-even") return tripp_even();
    if (s == "full") return full();
    if (s.rfind("unit:", 0) == 0) {
        long n = 0;
        try {
            n = std::stol(s.substr(5));
        } catch (const std::exception&) {
            throw std::invalid_argument("convention: bad unit count in '" + s + "'");
        }
        if (n < 5) throw std::invalid_argument("convention: unit:N needs N >= 5");
        return unit(n);
    }
    throw std::invalid_argument("convention: expected tripp-even, full, or unit:N, got '" + s +
                                "'");
}

std::string Convention::name() const {
    switch (kind) {
        case Kind::tripp_even: return "tripp-even";
        case Kind::full: return "full";
        case Kind::generalized: return "unit:" + std::to_string(unit_n);
    }
    return "?";
}

long max_cevian(const Convention& conv, long apex) {
    // strictly below the base angle (N - a) / 2
    return (conv.unit_n - 1 - apex) / 2;
}

std::vector<long> apex_values(const Convention& conv) {
    std::vector<long> out;
    const long step = conv.kind == Convention::Kind::tripp_even ? 2 : 1;
    const long first = conv.kind == Convention::Kind::tripp_even ? 2 : 1;
    for (long a = first; a <= conv.unit_n - 5; a += step)
        if (max_cevian(conv, a) >= 2) out.push_back(a);
    return out;
}

std::uint64_t triplet_count(const Convention& conv) {
    std::uint64_t total = 0;
    for (long a : apex_values(conv)) {
        const std::uint64_t m = max_cevian(conv, a);
        total += m * (m - 1) / 2;  // pairs c < b <= m
    }
    return total;
}

void for_each_triplet(const Convention& conv, long apex,
                      const std::function<void(const Triplet&)>& fn) {
    const long m = max_cevian(conv, apex);
    for (long b = 2; b <= m; ++b)
        for (long c = 1; c < b; ++c) fn(Triplet{apex, b, c, conv.unit_n});
}

std::vector<Triplet> enumerate_triplets(const Convention& conv) {
    std::vector<Triplet> out;
    out.reserve(triplet_count(conv));
    for (long a : apex_values(conv))
        for_each_triplet(conv, a, [&](const Triplet& t) { out.push_back(t); });
    return out;
}

namespace {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ADVANGLE_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string fixed50(const HPReal& v) { return v.str(50, std::ios_base::fixed); }

struct ApexResult {
    long integral = 0;
    long half_integral = 0;
    std::vector<SearchRecord> solutions;
};

ApexResult search_apex(const Convention& conv, long apex, int digits, const HPReal& tol) {
    ApexResult res;
    for_each_triplet(conv, apex, [&](const Triplet& t) {
        PrecisionScope scope(digits);
        const HPReal est = estimate_theta_units(t, digits);
        const DerivedAngle da = derive_theta(t, est, tol);
        if (!da.certified) return;
        if (da.classification == Classification::integral)
            ++res.integral;
        else
            ++res.half_integral;
        res.solutions.push_back(
            SearchRecord{t, fixed50(est), da.half_steps, da.classification, true});
    });
    return res;
}

}  // namespace

SearchReport run_search(const Convention& conv, int digits, const std::string& tol,
                        int workers) {
    if (digits < 50) throw std::invalid_argument("run_search: digits must be at least 50");
    const int jobs = resolve_workers(workers);

    // Shared immutable exact context; interned before the workers start.
    cyclo_context(4 * conv.unit_n);

    const std::vector<long> apexes = apex_values(conv);
    std::vector<ApexResult> results(apexes.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        PrecisionScope scope(digits);
        const HPReal tol_value(tol);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= apexes.size()) return;
            results[i] = search_apex(conv, apexes[i], digits, tol_value);
        }
    };

    const int used = std::min<int>(jobs, std::max<std::size_t>(apexes.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int w = 0; w < used; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchReport report;
    report.convention = conv;
    report.total_enumerated = triplet_count(conv);
    report.digits = digits;
    report.tol = tol;
    report.workers = used;
    for (auto& r : results) {
        report.integral_count += r.integral;
        report.half_integral_count += r.half_integral;
        report.solutions.insert(report.solutions.end(), r.solutions.begin(), r.solutions.end());
    }
    return report;
}

std::string half_steps_decimal(long half_steps) {
    std::string out = std::to_string(half_steps / 2);
    out += half_steps % 2 ? ".5" : ".0";
    out.append(49, '0');
    return out;
}

void write_csv(const SearchReport& report, std::ostream& out) {
    out << "a,b,c,unit_N,theta_half_steps,classification,certified,theta_decimal\n";
    for (const auto& rec : report.solutions) {
        out << rec.triplet.a << ',' << rec.triplet.b << ',' << rec.triplet.c << ','
            << rec.triplet.unit_n << ',' << (rec.half_steps ? std::to_string(*rec.half_steps) : "")
            << ',' << to_string(rec.classification) << ',' << (rec.certified ? "true" : "false")
            << ',' << (rec.half_steps ? half_steps_decimal(*rec.half_steps) : "") << '\n';
    }
}

std::string to_json(const SearchReport& report) {
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& rec : report.solutions) {
        nlohmann::json row{{"a", rec.triplet.a},
                           {"b", rec.triplet.b},
                           {"c", rec.triplet.c},
                           {"unit_N", rec.triplet.unit_n},
                           {"theta_estimate", rec.theta_estimate},
                           {"classification", to_string(rec.classification)},
                           {"certified", rec.certified}};
        if (rec.half_steps) row["half_steps"] = *rec.half_steps;
        solutions.push_back(std::move(row));
    }
    nlohmann::json j{{"convention", report.convention.name()},
                     {"total_enumerated", report.total_enumerated},
                     {"integral_count", report.integral_count},
                     {"half_integral_count", report.half_integral_count},
                     {"digits", report.digits},
                     {"tol", report.tol},
                     {"solutions", std::move(solutions)}};
    return j.dump(2) + "\n";
}

SearchReport report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SearchReport report;
    report.convention = Convention::parse(j.at("convention").get<std::string>());
    report.total_enumerated = j.at("total_enumerated").get<std::uint64_t>();
    report.integral_count = j.at("integral_count").get<long>();
    report.half_integral_count = j.at("half_integral_count").get<long>();
    report.digits = j.at("digits").get<int>();
    report.tol = j.at("tol").get<std::string>();
    for (const auto& row : j.at("solutions")) {
        SearchRecord rec;
        rec.triplet = Triplet{row.at("a").get<long>(), row.at("b").get<long>(),
                              row.at("c").get<long>(), row.at("unit_N").get<long>()};
        rec.theta_estimate = row.at("theta_estimate").get<std::string>();
        const auto cls = classification_from_string(row.at("classification").get<std::string>());
        if (!cls) throw std::invalid_argument("report_from_json: bad classification");
        rec.classification = *cls;
        rec.certified = row.at("certified").get<bool>();
        if (row.contains("half_steps")) rec.half_steps = row.at("half_steps").get<long>();
        report.solutions.push_back(std::move(rec));
    }
    return report;
}

void export_report(const SearchReport& report, const std::string& format,
                   const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export: cannot open '" + path + "' for writing");
    if (format == "csv") {
        write_csv(report, out);
    } else if (format == "json") {
        out << to_json(report);
    } else {
        throw std::invalid_argument("export: unknown format '" + format + "'");
    }
    if (!out.good()) throw std::runtime_error("export: write to '" + path + "' failed");
}

}  // namespace advangle
