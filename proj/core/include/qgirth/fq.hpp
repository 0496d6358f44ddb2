#pragma once

#include <cstdint>

#include "qgirth/quaternion.hpp"

namespace qgirth {

/// Legendre symbol (a/q) for an odd prime q: 0 if q | a, otherwise
/// +-1 by Euler's criterion. Accepts negative a.
int legendre(std::int64_t a, std::uint64_t q);

/// Deterministic Tonelli-Shanks (smallest non-residue as auxiliary).
/// Returns the smaller of the two square roots of a mod q. Throws
/// std::domain_error for a non-residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q);

/// The splitting data for H(F_q) ~ M_2(F_q): x^2 + y^2 + 1 = 0 in F_q,
/// with x minimal and y the smaller root for that x.
struct FieldContext {
    std::uint64_t q = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
};

FieldContext find_xy(std::uint64_t q);

/// 2x2 matrix over F_q, entries reduced mod q.
struct Mat2 {
    std::uint64_t m00 = 0, m01 = 0, m10 = 0, m11 = 0;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_identity();
Mat2 mat_mul(const Mat2& a, const Mat2& b, std::uint64_t q);
std::uint64_t mat_det(const Mat2& m, std::uint64_t q);

/// The splitting isomorphism applied to a quaternion reduced mod q:
///   [ a0 + a1 x + a3 y    -a1 y + a2 + a3 x ]
///   [ -a1 y - a2 + a3 x    a0 - a1 x - a3 y ]
/// det of the image equals norm(a) mod q, and the map is a ring
/// homomorphism after reduction.
Mat2 to_matrix(const Quaternion& a, const FieldContext& ctx);

} // namespace qgirth
