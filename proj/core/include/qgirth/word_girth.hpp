#pragma once

#include <cstdint>
#include <optional>

#include "qgirth/projective.hpp"
#include "qgirth/words.hpp"

namespace qgirth {

/// Result of the word-kernel girth search. girth is empty when no
/// irreducible word of length <= max_len maps to the identity (the
/// sentinel case); witness then stays empty as well.
struct WordGirthResult {
    std::optional<std::uint32_t> girth;
    std::uint32_t max_len = 0;
    Word witness;
};

/// Girth as the shortest irreducible generator word whose image in
/// PGL_2(F_q) is the identity, found by a meet-in-the-middle collision
/// search over half-length word images. Needs no group enumeration, so
/// it scales to q far beyond what an explicit graph can hold.
WordGirthResult girth_words(const GraphSpec& spec, std::uint32_t max_len,
                            double memory_gib = 8.0);

} // namespace qgirth
