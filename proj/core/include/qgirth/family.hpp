#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgirth {

enum class PrimeRule { next_prime, next_prime_3mod8, explicit_p };

std::string to_string(PrimeRule rule);

/// Parameters of the degree-(d+1) graph family: the auxiliary prime p,
/// the exponent kappa = log_d(p), the girth constant c_d = 4/(3*kappa)
/// and the threshold Q = max{p^8, ceil(120^kappa * p)} above which the
/// construction's connectedness proof applies.
struct FamilyParams {
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    double kappa = 0.0;
    double c_d = 0.0;
    unsigned __int128 Q = 0; // saturates at the 128-bit maximum
    bool Q_saturated = false;
    PrimeRule parity_rule = PrimeRule::next_prime;

    /// True iff q lies strictly above Q (the proven regime).
    bool regime(std::uint64_t q) const;
};

/// d >= 10. Picks p by the parity rule: d odd -> next_prime(d),
/// d even -> next_prime_3mod8(d) (even degrees need pure generators,
/// which exist only for p = 3 mod 8).
FamilyParams family_params(std::uint64_t d);

/// Same-shape record for an explicitly chosen prime p >= d.
FamilyParams family_params_for(std::uint64_t d, std::uint64_t p);

/// Tabulated floor for the girth constant c(d) by degree range, where
/// one is guaranteed; nullopt in the gaps of the table.
std::optional<double> girth_bracket(std::uint64_t d);

struct CTableRow {
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    double kappa = 0.0;
    double c_d = 0.0;
    std::optional<double> bracket;
    bool meets_bracket = true; // vacuously true without a bracket
    bool prime_power = false;
};

/// One row per d in [d_min, d_max]; prime powers are skipped unless
/// include_prime_powers is set (their rows carry the prime_power flag
/// and no bracket).
std::vector<CTableRow> c_table(std::uint64_t d_min, std::uint64_t d_max,
                               bool include_prime_powers = false);

std::string u128_to_string(unsigned __int128 v);

} // namespace qgirth
