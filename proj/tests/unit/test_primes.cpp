#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "qgirth/primes.hpp"

using namespace qgirth;

TEST_CASE("next_prime") {
    CHECK(next_prime(35) == 37);
    CHECK(next_prime(1335) == 1361);
    CHECK(next_prime(11) == 11);
}

TEST_CASE("next_prime_3mod8") {
    CHECK(next_prime_3mod8(10) == 11);
    CHECK(next_prime_3mod8(12) == 19);
    CHECK(next_prime_3mod8(20) == 43);
    // independent scan oracle
    for (std::uint64_t u : {10ull, 12ull, 20ull, 44ull, 100ull, 1000ull}) {
        std::uint64_t c = u;
        while (!(is_prime(c) && c % 8 == 3)) ++c;
        CHECK(next_prime_3mod8(u) == c);
    }
}

TEST_CASE("theta sums") {
    CHECK(theta(2, 8, 3) == 0.0);
    CHECK(theta(10, 8, 3) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(theta(20, 8, 3) ==
          doctest::Approx(std::log(3.0) + std::log(11.0) + std::log(19.0)).epsilon(1e-12));
    CHECK(theta(20, 8, 3) == doctest::Approx(6.4409).epsilon(1e-4));
    CHECK_THROWS_AS(theta(10, 8, 9), std::invalid_argument);
}

TEST_CASE("miller-rabin agrees with the sieve") {
    const auto primes = primes_up_to(10000);
    std::size_t idx = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        const bool sieved = idx < primes.size() && primes[idx] == n;
        if (sieved) ++idx;
        CHECK(is_prime(n) == sieved);
    }
}

TEST_CASE("prime powers") {
    CHECK(is_prime_power(16));
    CHECK(is_prime_power(27));
    CHECK(is_prime_power(1331)); // 11^3
    CHECK(is_prime_power(37));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1335)); // 3*5*89
    CHECK_FALSE(is_prime_power(1369 * 2));
}

TEST_CASE("three squares predicate matches brute force") {
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        bool found = false;
        for (std::uint64_t x = 0; x * x <= n && !found; ++x)
            for (std::uint64_t y = x; x * x + y * y <= n && !found; ++y) {
                const std::uint64_t rest = n - x * x - y * y;
                const auto z = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)));
                for (std::uint64_t zz = z > 0 ? z - 1 : 0; zz <= z + 1; ++zz)
                    if (zz * zz == rest) { found = true; break; }
            }
        CHECK(sum_of_three_squares(n) == found);
    }
}
