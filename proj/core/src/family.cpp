#include "qgirth/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgirth/primes.hpp"

namespace qgirth {

namespace {

constexpr unsigned __int128 U128_MAX = ~static_cast<unsigned __int128>(0);

// p^8 with saturation; p <= 65535 fits in 128 bits exactly.
unsigned __int128 pow8_saturating(std::uint64_t p, bool& saturated) {
    if (p > 65535) { saturated = true; return U128_MAX; }
    unsigned __int128 v = 1;
    for (int i = 0; i < 8; ++i) v *= p;
    saturated = false;
    return v;
}

FamilyParams make_params(std::uint64_t d, std::uint64_t p, PrimeRule rule) {
    FamilyParams fp;
    fp.d = d;
    fp.p = p;
    fp.parity_rule = rule;
    fp.kappa = std::log(static_cast<double>(p)) / std::log(static_cast<double>(d));
    fp.c_d = 4.0 / (3.0 * fp.kappa);
    bool sat = false;
    unsigned __int128 p8 = pow8_saturating(p, sat);
    // 120^kappa evaluated in floating point and rounded up, so the
    // comparison against q stays conservative
    long double t = std::ceil(std::pow(120.0L, static_cast<long double>(fp.kappa)) *
                              static_cast<long double>(p));
    unsigned __int128 term = static_cast<unsigned __int128>(t);
    fp.Q = sat ? U128_MAX : std::max(p8, term);
    fp.Q_saturated = sat;
    return fp;
}

} // namespace

std::string to_string(PrimeRule rule) {
    switch (rule) {
        case PrimeRule::next_prime: return "next_prime";
        case PrimeRule::next_prime_3mod8: return "next_prime_3mod8";
        case PrimeRule::explicit_p: return "explicit";
    }
    return "?";
}

bool FamilyParams::regime(std::uint64_t q) const {
    if (Q_saturated) return false;
    return static_cast<unsigned __int128>(q) > Q;
}

FamilyParams family_params(std::uint64_t d) {
    if (d < 10) throw std::invalid_argument("qgirth: family_params requires d >= 10");
    if (d % 2 == 0) return make_params(d, next_prime_3mod8(d), PrimeRule::next_prime_3mod8);
    return make_params(d, next_prime(d), PrimeRule::next_prime);
}

FamilyParams family_params_for(std::uint64_t d, std::uint64_t p) {
    if (d < 10) throw std::invalid_argument("qgirth: family_params_for requires d >= 10");
    if (!is_prime(p)) throw std::invalid_argument("qgirth: p must be prime");
    if (p < d) throw std::invalid_argument("qgirth: p must be >= d (kappa >= 1)");
    return make_params(d, p, PrimeRule::explicit_p);
}

std::optional<double> girth_bracket(std::uint64_t d) {
    if (d % 2 == 1) {
        if (d >= 1335) return 1.33;
        if (d >= 35 && d <= 1331) return 1.3;
        if (d >= 15 && d <= 31) return 1.27;
        return std::nullopt; // 11, 13, 33 and 1333 sit in table gaps
    }
    switch (d) {
        case 10: return 1.28;
        case 12: return 1.12;
        case 14: return 1.19;
        case 18: return 1.3;
        case 20: return 1.061;
        default: break;
    }
    if (d >= 4826) return 1.33;
    if (d >= 184 && d <= 4824) return 1.3;
    if (d >= 44 && d <= 182) return 1.25;
    if (d >= 22 && d <= 42) return 1.1;
    return std::nullopt;
}

std::vector<CTableRow> c_table(std::uint64_t d_min, std::uint64_t d_max,
                               bool include_prime_powers) {
    if (d_min < 10 || d_min > d_max)
        throw std::invalid_argument("qgirth: c_table requires 10 <= d_min <= d_max");
    std::vector<CTableRow> rows;
    for (std::uint64_t d = d_min; d <= d_max; ++d) {
        bool pp = is_prime_power(d);
        if (pp && !include_prime_powers) continue;
        FamilyParams fp = family_params(d);
        CTableRow row;
        row.d = d;
        row.p = fp.p;
        row.kappa = fp.kappa;
        row.c_d = fp.c_d;
        row.prime_power = pp;
        if (!pp) {
            row.bracket = girth_bracket(d);
            row.meets_bracket = !row.bracket || row.c_d >= *row.bracket - 1e-9;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace qgirth
