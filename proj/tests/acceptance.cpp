// Acceptance runner: one pass/fail line per criterion, exit 0 iff all pass.
// Every threshold is pinned here; all comparisons are exact (Z2 algebra).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stringhom/verify.hpp"

using namespace stringhom;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

Criterion run(int index, const std::string& label, const std::vector<Check>& checks,
              double limit_seconds, double elapsed) {
    Criterion c;
    c.label = label;
    c.seconds = elapsed;
    std::size_t cases = 0;
    for (const auto& chk : checks) {
        if (!chk.pass && c.pass) {
            c.pass = false;
            c.detail = chk.name + ": " + chk.detail;
        }
        if (!chk.detail.empty() && chk.detail.find(" cases") != std::string::npos)
            cases += std::stoul(chk.detail);
    }
    if (limit_seconds > 0 && elapsed > limit_seconds) {
        c.pass = false;
        c.detail = "runtime " + std::to_string(elapsed) + "s exceeds " +
                   std::to_string(limit_seconds) + "s";
    }
    std::string suffix = cases ? ", " + std::to_string(cases) + " cases" : std::string();
    std::printf("[%2d/10] %s  %s (%.2fs%s)\n", index, c.pass ? "PASS" : "FAIL", label.c_str(),
                elapsed, suffix.c_str());
    if (!c.pass) std::printf("        %s\n", c.detail.c_str());
    std::fflush(stdout);
    return c;
}

template <typename F>
Criterion timed(int index, const std::string& label, double limit_seconds, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks = f();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run(index, label, checks, limit_seconds, dt);
}

} // namespace

int main() {
    std::vector<Criterion> results;

    results.push_back(timed(1, "differential squares to zero (weight <= 10, f22 <= 8)", 60.0,
                            [] { return suite_d2(10); }));
    results.push_back(timed(2, "closed-string homology equals fermionic counts "
                               "(|w| <= 8, M <= 10)",
                            0, [] { return Suite{check_hx_dims()}; }));
    results.push_back(timed(3, "model algebra: homology, levels and homotopies (grade <= 12)", 0,
                            [] { return suite_weyl(12); }));
    results.push_back(timed(4, "operator commutators (|j| <= 5, k <= 3, weight/grade <= 10)", 0,
                            [] { return suite_commutators(10); }));
    results.push_back(timed(5, "f11 vanishing: source homotopy and window scans", 0, [] {
        Suite s = suite_sources(10);
        s.push_back(check_f11_scans());
        return s;
    }));
    results.push_back(timed(6, "arc-complex homology equals clean counts (both signs)", 0,
                            [] { return Suite{check_f02_dims()}; }));
    results.push_back(timed(7, "insular summand homology equals standard-form counts", 0,
                            [] { return Suite{check_f22_dims(), check_weight_additivity()}; }));
    results.push_back(timed(8, "chain-level x1 times diagonal relation (n <= 8)", 0,
                            [] { return Suite{check_x1_relation()}; }));
    results.push_back(timed(9, "disc-complex certificates and non-bounding diagonal sums", 0,
                            [] { return suite_nonvanishing(); }));
    results.push_back(timed(10, "standard-form reductions recover planted forms (500 each)", 0,
                            [] { return suite_standardforms(500); }));

    int failed = 0;
    for (const auto& c : results)
        if (!c.pass) ++failed;
    std::printf("RESULT: %d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
