#include "qgirth/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace qgirth {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // this witness set is exact below 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t u) {
    if (u <= 2) return 2;
    if ((u & 1) == 0) ++u;
    while (!is_prime(u)) u += 2;
    return u;
}

std::uint64_t next_prime_3mod8(std::uint64_t u) {
    if (u <= 3) return 3;
    std::uint64_t c = u + ((3 + 8 - u % 8) % 8);
    while (!is_prime(c)) c += 8;
    return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t x) {
    if (x > 100'000'000ull)
        throw std::invalid_argument("qgirth: sieve limit capped at 10^8");
    std::vector<bool> composite(x + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    return primes;
}

double theta(std::uint64_t x, std::uint64_t k, std::uint64_t l) {
    if (x < 1 || k == 0 || l >= k)
        throw std::invalid_argument("qgirth: theta requires x >= 1 and 0 <= l < k");
    double sum = 0.0;
    for (std::uint32_t p : primes_up_to(x)) {
        if (p % k == l) sum += std::log(static_cast<double>(p));
    }
    return sum;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    // find the smallest prime factor, then check n is a pure power of it
    std::uint64_t f = 0;
    if (n % 2 == 0) {
        f = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) { f = d; break; }
        }
        if (f == 0) return true; // n itself prime
    }
    while (n % f == 0) n /= f;
    return n == 1;
}

bool sum_of_three_squares(std::uint64_t n) {
    if (n == 0) return true;
    while (n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

} // namespace qgirth
