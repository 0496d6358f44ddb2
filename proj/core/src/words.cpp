#include "qgirth/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgirth {

bool is_irreducible(const Word& w, const GeneratorSet& gens) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= gens.size()) throw std::out_of_range("qgirth: generator index out of range");
        if (i > 0 && w[i] == gens.inverse_letter[w[i - 1]]) return false;
    }
    return true;
}

Quaternion word_to_quaternion(const Word& w, const GeneratorSet& gens) {
    if (!is_irreducible(w, gens))
        throw std::invalid_argument("qgirth: word_to_quaternion requires an irreducible word");
    Quaternion prod{1, 0, 0, 0};
    for (std::uint32_t letter : w) prod = mul(prod, gens.elements[letter]);
    return prod;
}

Word inverse_word(const Word& w, const GeneratorSet& gens) {
    Word inv(w.rbegin(), w.rend());
    for (auto& letter : inv) {
        if (letter >= gens.size()) throw std::out_of_range("qgirth: generator index out of range");
        letter = gens.inverse_letter[letter];
    }
    return inv;
}

Word star(const Word& a, const Word& b, const GeneratorSet& gens) {
    for (const Word* w : {&a, &b})
        for (std::uint32_t letter : *w)
            if (letter >= gens.size())
                throw std::out_of_range("qgirth: generator index out of range");
    // junction-local cancellation; for irreducible inputs the result is
    // the irreducible reduced product
    std::size_t cancel = 0;
    const std::size_t limit = std::min(a.size(), b.size());
    while (cancel < limit && b[cancel] == gens.inverse_letter[a[a.size() - 1 - cancel]])
        ++cancel;
    Word out(a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
    return out;
}

std::vector<Word> tree_neighbors(const Word& w, const GeneratorSet& gens) {
    if (!is_irreducible(w, gens))
        throw std::invalid_argument("qgirth: tree_neighbors requires an irreducible word");
    std::vector<Word> out;
    out.reserve(gens.size());
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
        if (!w.empty() && g == gens.inverse_letter[w.back()]) continue;
        Word ext = w;
        ext.push_back(g);
        out.push_back(std::move(ext));
    }
    if (!w.empty()) out.emplace_back(w.begin(), w.end() - 1);
    return out;
}

Factorization factor(const Quaternion& a, const PrimeBasis& basis) {
    if (a.is_zero()) throw std::invalid_argument("qgirth: cannot factor zero");
    const std::int64_t p = static_cast<std::int64_t>(basis.p);

    std::int64_t n = norm(a);
    std::uint32_t k = 0;
    while (n % p == 0) { n /= p; ++k; }
    if (n != 1) throw std::invalid_argument("qgirth: norm is not a power of p");

    Factorization f;
    Quaternion rest = a;
    while (rest.a0 % p == 0 && rest.a1 % p == 0 && rest.a2 % p == 0 && rest.a3 % p == 0) {
        rest = Quaternion{rest.a0 / p, rest.a1 / p, rest.a2 / p, rest.a3 / p};
        ++f.content_exponent;
    }
    std::uint32_t m = k - 2 * f.content_exponent;

    // peel the rightmost factor: the unique basis element pi with
    // rest * conj(pi) divisible by p
    f.factors.resize(m);
    for (std::uint32_t step = m; step > 0; --step) {
        bool found = false;
        for (const Quaternion& pi : basis.elements) {
            const Quaternion t = mul(rest, conj(pi));
            if (t.a0 % p || t.a1 % p || t.a2 % p || t.a3 % p) continue;
            rest = Quaternion{t.a0 / p, t.a1 / p, t.a2 / p, t.a3 / p};
            f.factors[step - 1] = pi;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("qgirth: no right divisor found while peeling");
    }
    if (!is_unit(rest)) throw std::logic_error("qgirth: peeling did not terminate at a unit");
    f.unit = rest;
    return f;
}

Quaternion reconstruct(const Factorization& f, std::uint64_t p) {
    Quaternion out = f.unit;
    for (const Quaternion& pi : f.factors) out = mul(out, pi);
    for (std::uint32_t i = 0; i < f.content_exponent; ++i) {
        const std::int64_t ip = static_cast<std::int64_t>(p);
        out = mul(out, Quaternion{ip, 0, 0, 0});
    }
    return out;
}

} // namespace qgirth
