#include "qgirth/projective.hpp"

#include <stdexcept>
#include <string>

#include "qgirth/primes.hpp"

namespace qgirth {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    return mod_pow(a, q - 2, q);
}

Mat2 to_mat(const ProjElement& e) {
    return Mat2{e.m[0], e.m[1], e.m[2], e.m[3]};
}

} // namespace

ProjElement proj_identity() { return ProjElement{{1, 0, 0, 1}}; }

ProjElement project(const Mat2& m, std::uint64_t q) {
    if (mat_det(m, q) == 0)
        throw std::invalid_argument("qgirth: cannot projectivize a singular matrix");
    const std::uint64_t entries[4] = {m.m00 % q, m.m01 % q, m.m10 % q, m.m11 % q};
    std::uint64_t lead = 0;
    for (const std::uint64_t e : entries) {
        if (e != 0) { lead = e; break; }
    }
    const std::uint64_t s = inv_mod(lead, q);
    ProjElement out;
    for (int i = 0; i < 4; ++i) out.m[i] = static_cast<std::uint32_t>(mul_mod(entries[i], s, q));
    return out;
}

ProjElement proj_mul(const ProjElement& a, const ProjElement& b, std::uint64_t q) {
    return project(mat_mul(to_mat(a), to_mat(b), q), q);
}

ProjElement proj_inverse(const ProjElement& a, std::uint64_t q) {
    // adjugate represents the inverse class
    const Mat2 adj{a.m[3], (q - a.m[1]) % q, (q - a.m[2]) % q, a.m[0]};
    return project(adj, q);
}

std::uint64_t proj_det(const ProjElement& a, std::uint64_t q) {
    return mat_det(to_mat(a), q);
}

bool in_psl(const ProjElement& a, std::uint64_t q) {
    return legendre(static_cast<std::int64_t>(proj_det(a, q)), q) == 1;
}

std::uint64_t proj_code(const ProjElement& a, std::uint64_t q) {
    if (a.m[0] == 1)
        return (static_cast<std::uint64_t>(a.m[1]) * q + a.m[2]) * q + a.m[3];
    // canonical form with m00 == 0 forces m01 == 1
    return q * q * q + static_cast<std::uint64_t>(a.m[2]) * q + a.m[3];
}

std::string to_string(GroupKind kind) { return kind == GroupKind::pgl2 ? "PGL2" : "PSL2"; }

std::uint32_t GroupTable::index_of(const ProjElement& e) const {
    const std::int32_t idx = code_to_index[proj_code(e, q)];
    if (idx < 0) throw std::logic_error("qgirth: element not in group table");
    return static_cast<std::uint32_t>(idx);
}

GroupTable enumerate_group(std::uint64_t q, GroupKind kind) {
    if (q < 3 || !is_prime(q) || q % 2 == 0)
        throw std::invalid_argument("qgirth: enumerate_group requires an odd prime");
    GroupTable table;
    table.q = q;
    table.kind = kind;
    const std::uint64_t expected =
        kind == GroupKind::pgl2 ? q * q * q - q : (q * q * q - q) / 2;
    table.elements.reserve(expected);
    table.code_to_index.assign(q * q * q + q * q, -1);

    auto admit = [&](const ProjElement& e) {
        if (kind == GroupKind::psl2 && !in_psl(e, q)) return;
        table.code_to_index[proj_code(e, q)] = static_cast<std::int32_t>(table.elements.size());
        table.elements.push_back(e);
    };

    // m00 == 1: det != 0 means m11 != m01*m10
    for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t c = 0; c < q; ++c) {
            const std::uint64_t bc = mul_mod(b, c, q);
            for (std::uint64_t d = 0; d < q; ++d) {
                if (d == bc) continue;
                admit(ProjElement{{1, static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d)}});
            }
        }
    }
    // m00 == 0, m01 == 1: det = -m10 != 0
    for (std::uint64_t c = 1; c < q; ++c) {
        for (std::uint64_t d = 0; d < q; ++d) {
            admit(ProjElement{{0, 1, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d)}});
        }
    }
    if (table.elements.size() != expected)
        throw std::logic_error("qgirth: group enumeration size mismatch");
    table.identity_index = table.index_of(proj_identity());
    return table;
}

GraphSpec image_generators(const GeneratorSet& gens, std::uint64_t q) {
    if (q < 3 || !is_prime(q) || q % 2 == 0)
        throw std::invalid_argument("qgirth: q must be an odd prime");
    if (q == gens.p) throw std::invalid_argument("qgirth: q must differ from p");
    if (q * q <= 4 * gens.p)
        throw std::invalid_argument("qgirth: q must exceed 2*sqrt(p)");

    GraphSpec spec;
    spec.d = gens.d;
    spec.p = gens.p;
    spec.q = q;
    spec.gens = gens;
    spec.ctx = find_xy(q);
    spec.legendre_pq = legendre(static_cast<std::int64_t>(gens.p), q);
    spec.group_kind = spec.legendre_pq == 1 ? GroupKind::psl2 : GroupKind::pgl2;
    // the q > Q_d(p) regime is defined on the family range d >= 10
    spec.theoretical_regime =
        gens.d >= 10 && gens.p >= gens.d && family_params_for(gens.d, gens.p).regime(q);

    const ProjElement id = proj_identity();
    for (const Quaternion& g : gens.elements) {
        const ProjElement img = project(to_matrix(g, spec.ctx), q);
        if (img == id) throw std::runtime_error("qgirth: q too small (generator image is identity)");
        spec.generator_images.push_back(img);
    }
    for (std::size_t i = 0; i < spec.generator_images.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.generator_images.size(); ++j) {
            if (spec.generator_images[i] == spec.generator_images[j])
                throw std::runtime_error("qgirth: q too small (generator images collide)");
        }
    }
    for (std::size_t i = 0; i < spec.generator_images.size(); ++i) {
        const ProjElement inv = proj_inverse(spec.generator_images[i], q);
        if (inv != spec.generator_images[gens.inverse_letter[i]])
            throw std::logic_error("qgirth: generator images are not inversion-closed");
        const bool in = in_psl(spec.generator_images[i], q);
        if (in != (spec.legendre_pq == 1))
            throw std::logic_error("qgirth: PSL membership disagrees with the Legendre symbol");
    }
    return spec;
}

} // namespace qgirth
