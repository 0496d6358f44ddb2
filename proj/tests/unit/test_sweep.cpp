#include <doctest.h>

#include <set>

#include "qgirth/primes.hpp"
#include "qgirth/sweep.hpp"

using namespace qgirth;

TEST_CASE("family listing by branch") {
    FamilyQuery fq;
    fq.d = 10;
    fq.q_min = 7;
    fq.q_max = 50;

    fq.branch = Branch::X;
    std::set<std::uint64_t> x_qs;
    for (const GraphSpec& s : list_family(fq)) {
        CHECK(s.legendre_pq == -1);
        CHECK(s.group_kind == GroupKind::pgl2);
        x_qs.insert(s.q);
    }
    // frozen by quadratic reciprocity and checked against exhaustive
    // residue enumeration in the fq tests
    CHECK(x_qs == std::set<std::uint64_t>{13, 17, 23, 29, 31, 41, 47});

    fq.branch = Branch::Y;
    std::set<std::uint64_t> y_qs;
    for (const GraphSpec& s : list_family(fq)) {
        CHECK(s.legendre_pq == 1);
        CHECK(s.group_kind == GroupKind::psl2);
        y_qs.insert(s.q);
    }
    CHECK(y_qs == std::set<std::uint64_t>{7, 19, 37, 43});

    SUBCASE("branches partition the admissible primes") {
        std::set<std::uint64_t> both;
        for (std::uint64_t q : x_qs) both.insert(q);
        for (std::uint64_t q : y_qs) {
            CHECK(x_qs.count(q) == 0);
            both.insert(q);
        }
        for (std::uint64_t q = 7; q <= 50; ++q) {
            if (!is_prime(q) || q == 11) continue;
            CHECK(both.count(q) == 1);
        }
    }
}

TEST_CASE("regime enforcement empties desk-scale queries") {
    FamilyQuery fq;
    fq.d = 10;
    fq.q_min = 3;
    fq.q_max = 10000; // far below p^8
    fq.branch = Branch::X;
    fq.enforce_regime = true;
    CHECK(list_family(fq).empty());
}

TEST_CASE("grid run verifies every instance") {
    FamilyQuery fq;
    fq.d = 10;
    fq.q_min = 7;
    fq.q_max = 23;
    fq.branch = Branch::X;
    const GridOutcome outcome = run_grid(fq);
    CHECK(outcome.all_ok);
    CHECK(outcome.failures.empty());
    REQUIRE(outcome.reports.size() == 3); // q = 13, 17, 23
    for (const GraphReport& r : outcome.reports) {
        CHECK(r.connected);
        CHECK(r.bipartite);
        CHECK(r.girth % 2 == 0);
        CHECK(r.girth_method_agreement);
        CHECK(r.main_inequality_ok);
        CHECK(r.moore_ok);
    }
    CHECK(outcome.reports[0].q == 13);
    CHECK(outcome.reports[2].q == 23);

    SUBCASE("a parallel run merges to the same reports") {
        const GridOutcome par = run_grid(fq, 8.0, 2);
        CHECK(par.all_ok);
        CHECK(reports_csv(par.reports) == reports_csv(outcome.reports));
    }
    SUBCASE("csv round trip") {
        const std::string csv = reports_csv(outcome.reports);
        const auto parsed = parse_reports_csv(csv);
        CHECK(reports_csv(parsed) == csv);
    }
}

TEST_CASE("empty family runs cleanly") {
    FamilyQuery fq;
    fq.d = 10;
    fq.q_min = 7;
    fq.q_max = 7;
    fq.branch = Branch::X; // 7 is in the Y branch
    const GridOutcome outcome = run_grid(fq);
    CHECK(outcome.reports.empty());
    CHECK(outcome.all_ok);
}

TEST_CASE("c table csv round trip") {
    const std::string csv = c_table_csv(c_table(10, 60));
    const auto parsed = parse_c_table_csv(csv);
    CHECK(c_table_csv(parsed) == csv);
}
