#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgirth/family.hpp"
#include "qgirth/primes.hpp"

using namespace qgirth;

TEST_CASE("family parameters for the small even degrees") {
    const struct { std::uint64_t d, p; double c; } expected[] = {
        {10, 11, 1.2803}, {12, 19, 1.1252}, {14, 19, 1.1950}, {18, 19, 1.3089}, {20, 43, 1.0620},
    };
    for (const auto& e : expected) {
        const FamilyParams fp = family_params(e.d);
        CHECK(fp.p == e.p);
        CHECK(fp.c_d == doctest::Approx(e.c).epsilon(1e-4));
        CHECK(fp.parity_rule == PrimeRule::next_prime_3mod8);
    }
}

TEST_CASE("family parameters for odd degrees") {
    const FamilyParams fp15 = family_params(15);
    CHECK(fp15.p == 17);
    CHECK(fp15.c_d == doctest::Approx(1.27443).epsilon(1e-4));
    CHECK(fp15.c_d >= 1.27); // the guaranteed floor for 15 <= d <= 31
    CHECK(fp15.parity_rule == PrimeRule::next_prime);
    CHECK(family_params(35).p == 37);
    CHECK(family_params(1335).p == 1361);
}

TEST_CASE("kappa and c_d invariants for every degree up to 10^5") {
    // sieve-backed scan; failures are reported sparsely to keep the log sane
    const auto primes = primes_up_to(100'500); // gap above 10^5 is well under 500
    std::size_t checked = 0;
    for (std::uint64_t d = 10; d <= 100'000; ++d) {
        const FamilyParams fp = family_params(d);
        ++checked;
        if (!(fp.kappa >= 1.0) || !(fp.c_d <= 4.0 / 3.0 + 1e-12) || fp.p < d ||
            (d % 2 == 0 && fp.p % 8 != 3)) {
            CAPTURE(d);
            CHECK(fp.kappa >= 1.0);
            CHECK(fp.c_d <= 4.0 / 3.0 + 1e-12);
            CHECK(fp.p >= d);
            if (d % 2 == 0) CHECK(fp.p % 8 == 3);
        }
        if (d % 997 == 0) { // exactness spot checks against the sieve
            CHECK(std::pow(static_cast<double>(d), fp.kappa) ==
                  doctest::Approx(static_cast<double>(fp.p)).epsilon(1e-12));
            if (d % 2 == 1) {
                const auto it = std::lower_bound(primes.begin(), primes.end(), d);
                CHECK(fp.p == *it);
            }
        }
    }
    CHECK(checked == 99'991);
}

TEST_CASE("regime threshold Q") {
    const FamilyParams fp = family_params(10);
    CHECK(fp.Q == static_cast<unsigned __int128>(214358881)); // 11^8 dominates 120^kappa * 11
    CHECK_FALSE(fp.Q_saturated);
    CHECK_FALSE(fp.regime(214358881));
    CHECK(fp.regime(214358882));
    CHECK(u128_to_string(fp.Q) == "214358881");
}

TEST_CASE("explicit prime override") {
    const FamilyParams fp = family_params_for(10, 13);
    CHECK(fp.p == 13);
    CHECK(fp.parity_rule == PrimeRule::explicit_p);
    CHECK_THROWS_AS(family_params_for(10, 12), std::invalid_argument);
    CHECK_THROWS_AS(family_params_for(20, 11), std::invalid_argument);
}

TEST_CASE("bracket lookups include the table gaps") {
    CHECK(girth_bracket(10) == doctest::Approx(1.28));
    CHECK(girth_bracket(20) == doctest::Approx(1.061));
    CHECK(girth_bracket(15) == doctest::Approx(1.27));
    CHECK(girth_bracket(35) == doctest::Approx(1.3));
    CHECK(girth_bracket(1335) == doctest::Approx(1.33));
    CHECK(girth_bracket(5000) == doctest::Approx(1.33));
    CHECK_FALSE(girth_bracket(33).has_value());
    CHECK_FALSE(girth_bracket(1333).has_value());
    CHECK_FALSE(girth_bracket(16).has_value());
    CHECK_FALSE(girth_bracket(11).has_value());
}

TEST_CASE("c table rows over [10,500]") {
    const auto rows = c_table(10, 500);
    for (const auto& row : rows) {
        CHECK_FALSE(row.prime_power);
        CHECK(row.c_d == doctest::Approx(4.0 / (3.0 * row.kappa)).epsilon(1e-12));
    }
    // the bracket table misses at exactly three boundary degrees in
    // this range; everything else meets its bound
    std::vector<std::uint64_t> misses;
    for (const auto& row : rows)
        if (!row.meets_bracket) misses.push_back(row.d);
    CHECK(misses == std::vector<std::uint64_t>{22, 44, 184});
}

TEST_CASE("c table can include prime powers, flagged") {
    const auto rows = c_table(16, 16, true);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].prime_power);
    CHECK_FALSE(rows[0].bracket.has_value());
}
