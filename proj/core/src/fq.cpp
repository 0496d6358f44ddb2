#include "qgirth/fq.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgirth/primes.hpp"

namespace qgirth {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t reduce(std::int64_t v, std::uint64_t q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(r);
}

} // namespace

int legendre(std::int64_t a, std::uint64_t q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("qgirth: legendre requires an odd prime");
    const std::uint64_t r = reduce(a, q);
    if (r == 0) return 0;
    const std::uint64_t e = mod_pow(r, (q - 1) / 2, q);
    return e == 1 ? 1 : -1;
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q) {
    a %= q;
    if (a == 0) return 0;
    if (legendre(static_cast<std::int64_t>(a), q) != 1)
        throw std::domain_error("qgirth: sqrt_mod of a non-residue");

    std::uint64_t root;
    if (q % 4 == 3) {
        root = mod_pow(a, (q + 1) / 4, q);
    } else {
        // Tonelli-Shanks with the smallest quadratic non-residue
        std::uint64_t s = q - 1;
        int e = 0;
        while ((s & 1) == 0) { s >>= 1; ++e; }
        std::uint64_t z = 2;
        while (legendre(static_cast<std::int64_t>(z), q) != -1) ++z;
        std::uint64_t c = mod_pow(z, s, q);
        std::uint64_t x = mod_pow(a, (s + 1) / 2, q);
        std::uint64_t t = mod_pow(a, s, q);
        int m = e;
        while (t != 1) {
            std::uint64_t tt = t;
            int i = 0;
            while (tt != 1) { tt = mul_mod(tt, tt, q); ++i; }
            std::uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, q);
            x = mul_mod(x, b, q);
            c = mul_mod(b, b, q);
            t = mul_mod(t, c, q);
            m = i;
        }
        root = x;
    }
    return std::min(root, q - root);
}

FieldContext find_xy(std::uint64_t q) {
    if (q < 3 || !is_prime(q) || q % 2 == 0)
        throw std::invalid_argument("qgirth: find_xy requires an odd prime");
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t t = reduce(-1 - static_cast<std::int64_t>(mul_mod(x, x, q)), q);
        if (legendre(static_cast<std::int64_t>(t), q) == -1) continue;
        return FieldContext{q, x, sqrt_mod(t, q)};
    }
    throw std::logic_error("qgirth: no splitting pair found"); // unreachable for odd prime q
}

Mat2 mat_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b, std::uint64_t q) {
    return Mat2{
        (mul_mod(a.m00, b.m00, q) + mul_mod(a.m01, b.m10, q)) % q,
        (mul_mod(a.m00, b.m01, q) + mul_mod(a.m01, b.m11, q)) % q,
        (mul_mod(a.m10, b.m00, q) + mul_mod(a.m11, b.m10, q)) % q,
        (mul_mod(a.m10, b.m01, q) + mul_mod(a.m11, b.m11, q)) % q,
    };
}

std::uint64_t mat_det(const Mat2& m, std::uint64_t q) {
    const std::uint64_t ad = mul_mod(m.m00, m.m11, q);
    const std::uint64_t bc = mul_mod(m.m01, m.m10, q);
    return (ad + q - bc) % q;
}

Mat2 to_matrix(const Quaternion& a, const FieldContext& ctx) {
    const std::uint64_t q = ctx.q;
    const std::uint64_t a0 = reduce(a.a0, q), a1 = reduce(a.a1, q);
    const std::uint64_t a2 = reduce(a.a2, q), a3 = reduce(a.a3, q);
    const std::uint64_t a1x = mul_mod(a1, ctx.x, q), a1y = mul_mod(a1, ctx.y, q);
    const std::uint64_t a3x = mul_mod(a3, ctx.x, q), a3y = mul_mod(a3, ctx.y, q);
    return Mat2{
        (a0 + a1x + a3y) % q,
        (q - a1y + a2 + a3x) % q,
        (2 * q - a1y - a2 + a3x) % q,
        (a0 + 2 * q - a1x - a3y) % q,
    };
}

} // namespace qgirth
