#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "twisted_hecke/parallel.hpp"
#include "twisted_hecke/suites.hpp"

using namespace th;

TEST_CASE("parallel_map keeps order and propagates errors") {
    for (int jobs : {1, 2, 5}) {
        const auto v = parallel_map(100, jobs, [](std::size_t k) { return static_cast<int>(k * k); });
        for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == static_cast<int>(k * k));
        CHECK_THROWS_AS(parallel_map(10, jobs,
                                     [](std::size_t k) {
                                         if (k == 7) throw std::runtime_error("seven");
                                         return 0;
                                     }),
                        std::runtime_error);
    }
}

TEST_CASE("TWISTED_HECKE_JOBS overrides the fallback") {
    ::unsetenv("TWISTED_HECKE_JOBS");
    CHECK(resolve_jobs(3) == 3);
    ::setenv("TWISTED_HECKE_JOBS", "2", 1);
    CHECK(resolve_jobs(3) == 2);
    ::unsetenv("TWISTED_HECKE_JOBS");
}

TEST_CASE("suite reports do not depend on the thread count") {
    SuiteOptions o;
    o.jobs = 1;
    const SuiteReport a = run_suite("chamber", o);
    o.jobs = 3;
    const SuiteReport b = run_suite("chamber", o);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t k = 0; k < a.cases.size(); ++k) CHECK(a.cases[k].id == b.cases[k].id);
    CHECK(a.ok());
}

TEST_CASE("seeded slope sampling is reproducible and generic") {
    const WeylPtr W = WeylGroup::make(RootSystem::parse("A4"));
    std::mt19937_64 r1(7), r2(7), r3(8);
    const auto a = sample_generic_slopes(*W, 5, r1), b = sample_generic_slopes(*W, 5, r2), c = sample_generic_slopes(*W, 5, r3);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    for (const Weight& l : a) CHECK(W->system().is_generic(l));
}

TEST_CASE("unknown suites and roots are invalid input") {
    CHECK_THROWS(run_suite("nope", {}));
    const RootSystem rs = RootSystem::parse("A3");
    CHECK(parse_root(rs, "a2") == rs.simple_root(2));
    CHECK(parse_root(rs, "1,0,-1") == IVec{1, 0, -1});
    CHECK_THROWS(parse_root(rs, "1,1,0"));
}
