#pragma once

#include <cstdint>
#include <vector>

#include "qgirth/quaternion.hpp"

namespace qgirth {

/// All integer quaternions of norm p (8(p+1) of them for an odd prime,
/// by Jacobi's four-square count). All are primitive since p is prime.
std::vector<Quaternion> enumerate_norm_p(std::uint64_t p);

/// The canonical set of p+1 norm-p quaternions, one per left unit
/// orbit. For p = 1 mod 4 these have odd positive real part and even
/// imaginary parts; for p = 3 mod 4, even real part and odd imaginary
/// parts, with the sign fixed by the first nonzero coordinate.
///
/// Elements with nonzero real part come in conjugate pairs ("mu"
/// elements); pure elements ("nu", real part zero, self-inverse up to
/// sign) exist exactly when p = 3 mod 8.
struct PrimeBasis {
    std::uint64_t p = 0;
    std::vector<Quaternion> elements;    // sorted lexicographically, size p+1
    std::vector<std::uint32_t> partner;  // index of the conjugate; == own index for pure
    std::uint32_t paired_count = 0;      // number of mu elements (even)
    std::uint32_t pure_count = 0;        // number of nu elements (even)

    bool pure_at(std::size_t i) const { return partner[i] == i; }
};

PrimeBasis build_basis(std::uint64_t p);

/// A symmetric generator multiset D of d+1 basis elements: conjugate
/// pairs are taken or left together, pure elements stand alone.
/// Elements are listed pairs first (each pair adjacent), then pure
/// elements, both in the lexicographic order of the basis.
struct GeneratorSet {
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    std::vector<Quaternion> elements;         // size d+1
    std::vector<std::uint32_t> inverse_letter; // conjugate's slot; == own slot for pure
    std::vector<std::uint32_t> basis_index;    // position of each element in the basis

    std::size_t size() const { return elements.size(); }
    bool pure_at(std::size_t i) const { return inverse_letter[i] == i; }
};

/// Deterministic selection: min{floor((d+1)/2), s/2} conjugate pairs for
/// odd d (min{d/2, s/2} for even d), completed with pure elements in
/// lexicographic order. Throws std::invalid_argument when infeasible
/// (d+1 > p+1, or d even with no pure elements available).
GeneratorSet select_generators(std::uint64_t d, const PrimeBasis& basis);

} // namespace qgirth
