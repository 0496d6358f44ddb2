#include "qgirth/word_girth.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgirth {

namespace {

// One enumerated word: the canonical image plus the packed letter
// sequence (6 bits per letter, newest letter in the low bits' slot h-1).
struct Entry {
    ProjElement image;
    std::uint64_t packed = 0;
};

constexpr unsigned LETTER_BITS = 6;

std::uint64_t pack_push(std::uint64_t packed, std::uint32_t letter, std::uint32_t pos) {
    return packed | (static_cast<std::uint64_t>(letter) << (LETTER_BITS * pos));
}

std::uint32_t pack_get(std::uint64_t packed, std::uint32_t pos) {
    return static_cast<std::uint32_t>((packed >> (LETTER_BITS * pos)) & ((1u << LETTER_BITS) - 1));
}

Word unpack(std::uint64_t packed, std::uint32_t len) {
    Word w(len);
    for (std::uint32_t i = 0; i < len; ++i) w[i] = pack_get(packed, i);
    return w;
}

std::uint64_t words_of_length(std::uint64_t d, std::uint32_t h) {
    // (d+1) * d^(h-1), saturating enough for budget checks
    if (h == 0) return 1;
    long double v = static_cast<long double>(d + 1);
    for (std::uint32_t i = 1; i < h; ++i) v *= static_cast<long double>(d);
    return v > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

} // namespace

WordGirthResult girth_words(const GraphSpec& spec, std::uint32_t max_len, double memory_gib) {
    if (max_len < 3) return WordGirthResult{std::nullopt, max_len, {}};
    if (max_len > 20)
        throw std::invalid_argument("qgirth: word search packs 10 letters per half, max_len <= 20");
    if (spec.generator_images.size() > (1u << LETTER_BITS))
        throw std::invalid_argument("qgirth: word search supports at most 64 generators");
    if (spec.generator_images.empty())
        throw std::invalid_argument("qgirth: spec has no generator images");

    const std::uint64_t q = spec.q;
    const auto& inv_letter = spec.gens.inverse_letter;
    const std::uint32_t half_max = (max_len + 1) / 2;

    // levels[h] holds every irreducible word of length h with its image,
    // sorted by image so collisions are contiguous runs
    std::vector<std::vector<Entry>> levels(half_max + 1);
    levels[0] = {Entry{proj_identity(), 0}};

    auto build_level = [&](std::uint32_t h) {
        const std::uint64_t count = words_of_length(spec.d, h);
        const double gib = static_cast<double>(count) * sizeof(Entry) / (1024.0 * 1024.0 * 1024.0);
        if (gib > memory_gib)
            throw std::runtime_error("qgirth: word level " + std::to_string(h) + " needs " +
                                     std::to_string(gib) + " GiB, budget is " +
                                     std::to_string(memory_gib) + " GiB");
        std::vector<Entry> level;
        level.reserve(count);
        for (const Entry& prev : levels[h - 1]) {
            const std::uint32_t last =
                h >= 2 ? pack_get(prev.packed, h - 2) : UINT32_MAX;
            for (std::uint32_t g = 0; g < spec.generator_images.size(); ++g) {
                if (h >= 2 && g == inv_letter[last]) continue;
                level.push_back(Entry{proj_mul(prev.image, spec.generator_images[g], q),
                                      pack_push(prev.packed, g, h - 1)});
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const Entry& a, const Entry& b) { return a.image < b.image; });
        levels[h] = std::move(level);
    };
    auto ensure_level = [&](std::uint32_t h) {
        for (std::uint32_t i = 1; i <= h; ++i)
            if (levels[i].empty()) build_level(i);
    };

    for (std::uint32_t t = 3; t <= max_len; ++t) {
        const std::uint32_t a = (t + 1) / 2;
        const std::uint32_t b = t - a;
        ensure_level(a);
        const auto& la = levels[a];
        const auto& lb = levels[b];
        std::size_t ia = 0, ib = 0;
        while (ia < la.size() && ib < lb.size()) {
            if (la[ia].image < lb[ib].image) {
                ++ia;
            } else if (lb[ib].image < la[ia].image) {
                ++ib;
            } else {
                // any pair of distinct words with equal image closes a
                // cycle of length exactly t (shorter ones would have
                // been found at a smaller t)
                const ProjElement& img = la[ia].image;
                for (std::size_t x = ia; x < la.size() && la[x].image == img; ++x) {
                    for (std::size_t y = ib; y < lb.size() && lb[y].image == img; ++y) {
                        if (a == b && la[x].packed == lb[y].packed) continue;
                        Word u = unpack(la[x].packed, a);
                        Word v = unpack(lb[y].packed, b);
                        Word w = star(u, inverse_word(v, spec.gens), spec.gens);
                        if (w.size() != t)
                            throw std::logic_error("qgirth: collision reduced below current length");
                        return WordGirthResult{t, max_len, std::move(w)};
                    }
                }
                while (ia < la.size() && la[ia].image == img) ++ia;
                while (ib < lb.size() && lb[ib].image == img) ++ib;
            }
        }
    }
    return WordGirthResult{std::nullopt, max_len, {}};
}

} // namespace qgirth
