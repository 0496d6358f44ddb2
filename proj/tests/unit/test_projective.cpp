#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "qgirth/basis.hpp"
#include "qgirth/projective.hpp"

using namespace qgirth;

TEST_CASE("projectivization canonicalizes scaling") {
    CHECK(project(Mat2{2, 0, 0, 2}, 13) == proj_identity());
    CHECK(project(to_matrix(Quaternion{5, 0, 0, 0}, find_xy(13)), 13) == proj_identity());
    std::mt19937 rng(4);
    std::uniform_int_distribution<std::uint64_t> entry(0, 12);
    int tried = 0;
    while (tried < 200) {
        const Mat2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (mat_det(m, 13) == 0) continue;
        ++tried;
        for (std::uint64_t lambda = 1; lambda < 13; ++lambda) {
            const Mat2 scaled{m.m00 * lambda % 13, m.m01 * lambda % 13, m.m10 * lambda % 13,
                              m.m11 * lambda % 13};
            CHECK(project(scaled, 13) == project(m, 13));
        }
        const ProjElement e = project(m, 13);
        // first nonzero entry is 1
        for (const std::uint32_t v : e.m) {
            if (v == 0) continue;
            CHECK(v == 1);
            break;
        }
    }
    CHECK_THROWS_AS(project(Mat2{1, 2, 2, 4}, 13), std::invalid_argument);
}

TEST_CASE("PSL membership") {
    CHECK(in_psl(proj_identity(), 13));
    const FieldContext c13 = find_xy(13);
    CHECK_FALSE(in_psl(project(to_matrix(Quaternion{1, 2, 0, 0}, c13), 13), 13)); // (5/13) = -1
    const FieldContext c11 = find_xy(11);
    CHECK(in_psl(project(to_matrix(Quaternion{1, 2, 0, 0}, c11), 11), 11)); // (5/11) = +1
}

TEST_CASE("group enumeration sizes and index lookup") {
    const GroupTable pgl7 = enumerate_group(7, GroupKind::pgl2);
    CHECK(pgl7.size() == 336);
    const GroupTable psl7 = enumerate_group(7, GroupKind::psl2);
    CHECK(psl7.size() == 168);
    const GroupTable pgl13 = enumerate_group(13, GroupKind::pgl2);
    CHECK(pgl13.size() == 2184);

    std::set<ProjElement> seen(pgl7.elements.begin(), pgl7.elements.end());
    CHECK(seen.size() == 336); // duplicate-free
    for (std::uint32_t i = 0; i < pgl7.size(); ++i)
        CHECK(pgl7.index_of(pgl7.elements[i]) == i);
    CHECK(pgl7.elements[pgl7.identity_index] == proj_identity());
}

TEST_CASE("PSL subset is the residue-determinant half and is closed") {
    const GroupTable pgl = enumerate_group(7, GroupKind::pgl2);
    const GroupTable psl = enumerate_group(7, GroupKind::psl2);
    std::set<ProjElement> psl_set(psl.elements.begin(), psl.elements.end());
    std::size_t members = 0;
    for (const ProjElement& e : pgl.elements) {
        const bool in = in_psl(e, 7);
        CHECK(in == (psl_set.count(e) == 1));
        members += in;
    }
    CHECK(members == psl.size());
    for (const ProjElement& a : psl.elements)
        for (const ProjElement& b : psl.elements)
            CHECK(in_psl(proj_mul(a, b, 7), 7));
}

TEST_CASE("inverse classes") {
    const GroupTable pgl = enumerate_group(11, GroupKind::pgl2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, pgl.size() - 1);
    for (int it = 0; it < 300; ++it) {
        const ProjElement e = pgl.elements[pick(rng)];
        CHECK(proj_mul(e, proj_inverse(e, 11), 11) == proj_identity());
    }
}

TEST_CASE("generator images over q=13 and q=7") {
    const GeneratorSet gens = select_generators(10, build_basis(11));
    SUBCASE("q=13: 11 distinct images outside PSL") {
        const GraphSpec spec = image_generators(gens, 13);
        CHECK(spec.legendre_pq == -1);
        CHECK(spec.group_kind == GroupKind::pgl2);
        CHECK(spec.generator_images.size() == 11);
        CHECK(std::set<ProjElement>(spec.generator_images.begin(), spec.generator_images.end())
                  .size() == 11);
        for (const ProjElement& e : spec.generator_images) CHECK_FALSE(in_psl(e, 13));
        CHECK_FALSE(spec.theoretical_regime);
    }
    SUBCASE("q=7: all images inside PSL") {
        const GraphSpec spec = image_generators(gens, 7);
        CHECK(spec.legendre_pq == 1);
        CHECK(spec.group_kind == GroupKind::psl2);
        for (const ProjElement& e : spec.generator_images) CHECK(in_psl(e, 7));
    }
    SUBCASE("pure generator images square to the identity") {
        const GraphSpec spec = image_generators(gens, 13);
        for (const ProjElement& e : spec.generator_images)
            CHECK(proj_mul(e, e, 13) == proj_identity());
    }
    SUBCASE("image set is inversion-closed") {
        const GraphSpec spec = image_generators(select_generators(18, build_basis(19)), 29);
        std::set<ProjElement> images(spec.generator_images.begin(), spec.generator_images.end());
        for (const ProjElement& e : spec.generator_images)
            CHECK(images.count(proj_inverse(e, 29)) == 1);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(image_generators(gens, 11), std::invalid_argument); // q == p
        CHECK_THROWS_AS(image_generators(gens, 5), std::invalid_argument);  // q <= 2 sqrt(p)
        CHECK_THROWS_AS(image_generators(gens, 9), std::invalid_argument);  // not prime
    }
}
