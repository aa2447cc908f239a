// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero iff a criterion fails.

#include "qform/verify.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

namespace {

using namespace qform;

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<VerifyReport()> body;
};

VerifyOptions with(std::size_t n, std::size_t samples) {
    VerifyOptions o;
    o.n = n;
    o.samples = samples;
    return o;
}

std::size_t family_count(const VerifyReport& r) {
    std::set<std::string> s;
    for (const auto& row : r.rows) s.insert(row.family);
    return s.size();
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Pearson moments equal the closed forms, n <= 80, 5 points per family", 60,
         [] {
             auto r = verify_pearson("all", with(80, 5));
             if (family_count(r) != catalog().size()) r.rows.push_back({"pearson", "catalog", "", "coverage", "0", 0, 0, "",
                                                                         {{"catalog", 0, "22 families", std::to_string(family_count(r)), "coverage"}}});
             return r;
         }},
        {2, "Quadratic decomposition replays the sigma images, n <= 24", 30,
         [] { return verify_decomposition("all", with(24, 5)); }},
        {3, "Orthogonality of the symmetric MOPS, n, m <= 15, 3 points", 60,
         [] {
             VerifyReport r;
             for (const auto& d : catalog())
                 if (d.symmetric) r.append(verify_moments(d.name, with(15, 3)));
             return r;
         }},
        {4, "Class one certified; reduction to class 0 at the excluded values", 5,
         [] { return verify_class("all", with(0, 5)); }},
        {5, "Operational identities on 200 random instances each", 30, [] { return verify_identities(with(16, 200)); }},
        {6, "Discrete (1e-35, n <= 20) and integral (1e-12, n <= 12) representations, q-series checks", 600,
         [] {
             VerifyReport r = verify_discrete("all", with(20, 0));
             r.append(verify_integral("all", with(12, 0)));
             r.append(verify_qseries(VerifyOptions{}));
             return r;
         }},
        {7, "q -> 1 deviations below 100 eps at eps = 1e-6", 10, [] { return verify_q1limit("all", with(10, 0)); }},
        {8, "Positivity agrees with the stated regions on 100-point grids, n <= 40", 60,
         [] { return verify_positivity("all", with(40, 0)); }},
    };

    int failed = 0;
    std::string failed_ids;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        VerifyReport rep;
        std::string error;
        try {
            rep = c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = error.empty() && rep.ok() && in_time;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << rep.rows.size()
                  << " checks, " << rep.failure_count() << " failures, " << std::fixed << std::setprecision(2) << secs
                  << " s of " << c.limit_seconds << " s)" << std::endl;
        std::cout.unsetf(std::ios::fixed);
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        if (!in_time) std::cout << "    over the time limit\n";
        for (const auto& row : rep.rows) {
            if (row.ok()) continue;
            const Failure& f = row.failures.front();
            std::cout << "    FAIL " << row.suite << " " << row.family << " [" << row.params << "] " << row.check << ": "
                      << row.failures.size() << " failures, first n=" << f.n << " expected=" << f.expected
                      << " actual=" << f.actual;
            if (!row.note.empty()) std::cout << "; " << row.note;
            std::cout << "\n";
        }
        if (!pass) {
            ++failed;
            failed_ids += (failed_ids.empty() ? "" : ", ") + std::to_string(c.id);
        }
    }
    std::cout << "acceptance: all 8 criteria evaluated, " << 8 - failed << " passed, " << failed << " failed"
              << (failed ? " (" + failed_ids + ")" : "") << std::endl;
    return failed ? 1 : 0;
}
