#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "qgirth/basis.hpp"
#include "qgirth/family.hpp"
#include "qgirth/fq.hpp"

namespace qgirth {

/// Canonical representative of a PGL_2(F_q) class: the matrix scaled so
/// that its first nonzero entry in reading order (m00, m01, m10, m11)
/// equals 1.
struct ProjElement {
    std::array<std::uint32_t, 4> m{0, 0, 0, 0};

    friend bool operator==(const ProjElement&, const ProjElement&) = default;
    friend auto operator<=>(const ProjElement&, const ProjElement&) = default;
};

ProjElement proj_identity();

/// Canonicalize a nonsingular matrix class. Throws std::invalid_argument
/// on det == 0 (the reduction of a quaternion whose norm q divides).
ProjElement project(const Mat2& m, std::uint64_t q);

ProjElement proj_mul(const ProjElement& a, const ProjElement& b, std::uint64_t q);
ProjElement proj_inverse(const ProjElement& a, std::uint64_t q);
std::uint64_t proj_det(const ProjElement& a, std::uint64_t q);

/// True iff the class lies in PSL_2: det of any representative is a
/// quadratic residue (scaling multiplies det by a square).
bool in_psl(const ProjElement& a, std::uint64_t q);

/// Perfect index of a canonical element, dense in [0, q^3 + q^2).
std::uint64_t proj_code(const ProjElement& a, std::uint64_t q);

enum class GroupKind { pgl2, psl2 };

std::string to_string(GroupKind kind);

/// Full duplicate-free enumeration of PGL_2(F_q) or PSL_2(F_q) with an
/// O(1) index lookup from the canonical form. Immutable once built.
struct GroupTable {
    std::uint64_t q = 0;
    GroupKind kind = GroupKind::pgl2;
    std::vector<ProjElement> elements;
    std::vector<std::int32_t> code_to_index; // size q^3 + q^2; -1 for absent
    std::uint32_t identity_index = 0;

    std::size_t size() const { return elements.size(); }
    std::uint32_t index_of(const ProjElement& e) const;
};

GroupTable enumerate_group(std::uint64_t q, GroupKind kind);

/// A fully resolved graph instance: the quaternion generators together
/// with their images in PGL_2(F_q).
struct GraphSpec {
    std::uint64_t d = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    GeneratorSet gens;
    FieldContext ctx;
    std::vector<ProjElement> generator_images; // aligned with gens.elements
    int legendre_pq = 0;                       // +-1
    GroupKind group_kind = GroupKind::pgl2;
    bool theoretical_regime = false;           // q > Q_d(p)
};

/// Maps the generators into PGL_2(F_q) and classifies the instance.
/// Preconditions: q an odd prime, q != p, q > 2*sqrt(p). Throws
/// std::runtime_error ("q too small") if images collide or hit the
/// identity, which the q > 2*sqrt(p) regime rules out.
GraphSpec image_generators(const GeneratorSet& gens, std::uint64_t q);

} // namespace qgirth
