#pragma once

#include <cstdint>
#include <vector>

namespace qgirth {

/// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(std::uint64_t n);

/// Smallest prime >= u.
std::uint64_t next_prime(std::uint64_t u);

/// Smallest prime >= u congruent to 3 mod 8.
std::uint64_t next_prime_3mod8(std::uint64_t u);

/// All primes <= x (simple sieve; x is capped at 10^8).
std::vector<std::uint32_t> primes_up_to(std::uint64_t x);

/// Chebyshev-type sum of ln(p) over primes p <= x with p = l mod k.
double theta(std::uint64_t x, std::uint64_t k, std::uint64_t l);

/// True iff n = p^e for a prime p and e >= 1.
bool is_prime_power(std::uint64_t n);

/// True iff n is a sum of three integer squares, i.e. n != 4^a(8b+7).
bool sum_of_three_squares(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace qgirth
