#include "qgirth/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qgirth/primes.hpp"

namespace qgirth {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<Quaternion> enumerate_norm_p(std::uint64_t p) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("qgirth: enumerate_norm_p requires an odd prime");
    const std::int64_t n = static_cast<std::int64_t>(p);
    const std::int64_t r = isqrt_floor(n);
    std::vector<Quaternion> out;
    for (std::int64_t a0 = -r; a0 <= r; ++a0) {
        const std::int64_t n0 = n - a0 * a0;
        const std::int64_t r1 = isqrt_floor(n0);
        for (std::int64_t a1 = -r1; a1 <= r1; ++a1) {
            const std::int64_t n1 = n0 - a1 * a1;
            const std::int64_t r2 = isqrt_floor(n1);
            for (std::int64_t a2 = -r2; a2 <= r2; ++a2) {
                const std::int64_t n2 = n1 - a2 * a2;
                const std::int64_t a3 = isqrt_floor(n2);
                if (a3 * a3 != n2) continue;
                out.push_back(Quaternion{a0, a1, a2, a3});
                if (a3 != 0) out.push_back(Quaternion{a0, a1, a2, -a3});
            }
        }
    }
    return out;
}

PrimeBasis build_basis(std::uint64_t p) {
    PrimeBasis basis;
    basis.p = p;
    const bool one_mod4 = (p % 4 == 1);
    for (const Quaternion& q : enumerate_norm_p(p)) {
        if (one_mod4) {
            // real part odd and positive, imaginary parts even
            if (q.a0 <= 0 || (q.a0 & 1) == 0) continue;
            if ((q.a1 & 1) || (q.a2 & 1) || (q.a3 & 1)) continue;
        } else {
            // real part even, imaginary parts odd; first nonzero
            // coordinate positive (a1 is never zero when a0 is)
            if (q.a0 & 1) continue;
            if (!(q.a1 & 1) || !(q.a2 & 1) || !(q.a3 & 1)) continue;
            if (q.a0 != 0 ? q.a0 < 0 : q.a1 < 0) continue;
        }
        basis.elements.push_back(q);
    }
    std::sort(basis.elements.begin(), basis.elements.end());
    if (basis.elements.size() != p + 1)
        throw std::logic_error("qgirth: basis does not have p+1 elements");

    basis.partner.resize(basis.elements.size());
    std::map<Quaternion, std::uint32_t> index;
    for (std::uint32_t i = 0; i < basis.elements.size(); ++i) index[basis.elements[i]] = i;
    for (std::uint32_t i = 0; i < basis.elements.size(); ++i) {
        const Quaternion& q = basis.elements[i];
        if (q.is_pure()) {
            basis.partner[i] = i;
            ++basis.pure_count;
        } else {
            auto it = index.find(conj(q));
            if (it == index.end())
                throw std::logic_error("qgirth: conjugate of a non-pure basis element is missing");
            basis.partner[i] = it->second;
            ++basis.paired_count;
        }
    }
    return basis;
}

GeneratorSet select_generators(std::uint64_t d, const PrimeBasis& basis) {
    if (d + 1 > basis.elements.size())
        throw std::invalid_argument("qgirth: need d+1 <= p+1 basis elements");
    const std::uint32_t s = basis.paired_count;
    const std::uint32_t t = basis.pure_count;
    if (d % 2 == 0 && t == 0)
        throw std::invalid_argument(
            "qgirth: even d requires pure basis elements (p = 3 mod 8)");

    const std::uint64_t pair_cap = (d % 2 == 0) ? d / 2 : (d + 1) / 2;
    const std::uint64_t k1 = std::min<std::uint64_t>(pair_cap, s / 2);
    const std::uint64_t pure_needed = d + 1 - 2 * k1;
    if (pure_needed > t)
        throw std::invalid_argument("qgirth: not enough pure elements for this d");

    GeneratorSet gens;
    gens.d = d;
    gens.p = basis.p;
    // conjugate pairs first, in lexicographic order of the smaller member
    std::uint64_t pairs_taken = 0;
    std::vector<bool> taken(basis.elements.size(), false);
    for (std::uint32_t i = 0; i < basis.elements.size() && pairs_taken < k1; ++i) {
        if (basis.pure_at(i) || taken[i]) continue;
        const std::uint32_t j = basis.partner[i];
        taken[i] = taken[j] = true;
        const std::uint32_t slot = static_cast<std::uint32_t>(gens.elements.size());
        gens.elements.push_back(basis.elements[i]);
        gens.elements.push_back(basis.elements[j]);
        gens.basis_index.push_back(i);
        gens.basis_index.push_back(j);
        gens.inverse_letter.push_back(slot + 1);
        gens.inverse_letter.push_back(slot);
        ++pairs_taken;
    }
    std::uint64_t pures_taken = 0;
    for (std::uint32_t i = 0; i < basis.elements.size() && pures_taken < pure_needed; ++i) {
        if (!basis.pure_at(i)) continue;
        const std::uint32_t slot = static_cast<std::uint32_t>(gens.elements.size());
        gens.elements.push_back(basis.elements[i]);
        gens.basis_index.push_back(i);
        gens.inverse_letter.push_back(slot);
        ++pures_taken;
    }
    if (gens.elements.size() != d + 1)
        throw std::logic_error("qgirth: generator selection did not produce d+1 elements");
    return gens;
}

} // namespace qgirth
