// Acceptance run: one line per criterion, each a group of verification suites
// with a pinned wall-clock budget. All comparisons are exact, so the only
// tolerance is the time limit.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "twisted_hecke/parallel.hpp"
#include "twisted_hecke/suites.hpp"

using namespace th;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<std::string> suites;
    double budget_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "GL2 data point", {"example"}, 1},
    {2, "quadratic relations", {"quadratic"}, 5},
    {3, "braid relations (A, C2, G2)", {"braid"}, 120},
    {4, "reduced-word independence", {"wordindep"}, 120},
    {5, "left/right consistency", {"leftright"}, 60},
    {6, "oracle equivalence", {"oracle"}, 60},
    {7, "matrix pipeline", {"matrix"}, 120},
    {8, "lifting through the Kirwan map", {"lift"}, 30},
    {9, "wall-crossing and anti-ample collapse", {"wallcross", "chamber", "antiample"}, 120},
    {10, "support and periodicity", {"support", "periodicity"}, 60},
    {11, "parabolic suite", {"parabolic"}, 30},
};

constexpr double kTotalBudget = 600;

} // namespace

int main() {
    SuiteOptions opt;
    opt.jobs = resolve_jobs(1);
    int passed = 0;
    double total = 0;
    for (const Criterion& c : kCriteria) {
        const auto t0 = std::chrono::steady_clock::now();
        int cases = 0, bad = 0;
        std::string first;
        for (const std::string& s : c.suites) {
            const SuiteReport r = run_suite(s, opt);
            cases += static_cast<int>(r.cases.size());
            for (const CaseResult& cr : r.cases)
                if (!cr.ok) {
                    ++bad;
                    if (first.empty()) first = s + " | " + cr.id + ": " + cr.detail;
                }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        const bool ok = bad == 0 && secs <= c.budget_s;
        passed += ok;
        std::printf("%s criterion %2d  %-40s %4d cases, %3d failed, %7.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
                    c.title, cases, bad, secs, c.budget_s);
        if (!first.empty()) std::printf("     first failure: %s\n", first.c_str());
        std::fflush(stdout);
    }
    const bool total_ok = total <= kTotalBudget;
    std::printf("%s total time %.2fs (limit %.0fs)\n", total_ok ? "PASS" : "FAIL", total, kTotalBudget);
    std::printf("%d of %zu criteria passed\n", passed, kCriteria.size());
    return passed == static_cast<int>(kCriteria.size()) && total_ok ? 0 : 1;
}
