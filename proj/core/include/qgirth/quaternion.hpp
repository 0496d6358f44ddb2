#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qgirth {

/// Integral Hamilton quaternion a0 + a1*i + a2*j + a3*k with
/// i^2 = j^2 = k^2 = -1 and k = ij = -ji.
///
/// Coordinates are exact signed 64-bit integers. All arithmetic is
/// checked: an operation that would wrap throws std::overflow_error.
/// Values are immutable in practice (operations return new values),
/// so they are safe to share across threads.
struct Quaternion {
    std::int64_t a0 = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t a3 = 0;

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    // lexicographic by (a0, a1, a2, a3); used for canonical orderings
    friend auto operator<=>(const Quaternion&, const Quaternion&) = default;

    bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }
    bool is_pure() const { return a0 == 0; }
};

/// Hamilton product. norm(mul(a,b)) = norm(a)*norm(b).
Quaternion mul(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

Quaternion neg(const Quaternion& a);

/// a0 - a1*i - a2*j - a3*k; mul(a, conj(a)) == norm(a) * 1.
Quaternion conj(const Quaternion& a);

/// Sum of squared coordinates (>= 0, == 0 iff a == 0).
std::int64_t norm(const Quaternion& a);

/// gcd of the four coordinates; 0 for the zero quaternion.
std::int64_t content(const Quaternion& a);

inline bool is_primitive(const Quaternion& a) { return content(a) == 1; }

/// The eight units of the integral quaternions: +-1, +-i, +-j, +-k.
const std::array<Quaternion, 8>& units();

bool is_unit(const Quaternion& a);

/// Left unit orbit { e*a : e unit }, deduplicated and sorted.
/// Has exactly 8 elements for any nonzero a, and is {0} for a = 0.
std::vector<Quaternion> unit_orbit(const Quaternion& a);

/// "a0+a1i+a2j+a3k" with explicit signs, e.g. "1-2i+0j+0k".
std::string to_string(const Quaternion& a);

/// Parses the exact format produced by to_string. Throws
/// std::invalid_argument on malformed input.
Quaternion parse_quaternion(const std::string& text);

} // namespace qgirth
