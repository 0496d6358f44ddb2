#pragma once

#include <cstdint>
#include <vector>

#include "qgirth/basis.hpp"
#include "qgirth/quaternion.hpp"

namespace qgirth {

/// A word over a generator set: a sequence of slot indices. The empty
/// word is the identity. Words form a group under star() with
/// inverse_word(); irreducible words are the reduced forms.
using Word = std::vector<std::uint32_t>;

/// True iff no consecutive pair (a, b) has b == inverse_letter(a),
/// i.e. a paired generator is never followed by its conjugate and a
/// pure generator is never repeated.
bool is_irreducible(const Word& w, const GeneratorSet& gens);

/// Left-to-right Hamilton product of the generators. The result is
/// primitive of norm p^len(w). Rejects reducible words.
Quaternion word_to_quaternion(const Word& w, const GeneratorSet& gens);

/// Reversed word with each paired letter replaced by its conjugate
/// (pure letters are their own inverses).
Word inverse_word(const Word& w, const GeneratorSet& gens);

/// Reduced product: concatenation with maximal cancellation at the
/// junction (the group law on irreducible words). The raw quaternion
/// product of a and b has content p^(cancelled letters).
Word star(const Word& a, const Word& b, const GeneratorSet& gens);

/// The d+1 neighbors of w in the regular tree of irreducible words:
/// the d one-letter extensions plus the length-(n-1) prefix; for the
/// empty word, all d+1 single-letter words.
std::vector<Word> tree_neighbors(const Word& w, const GeneratorSet& gens);

/// Unique factorization of a norm-p^k quaternion:
/// a = p^content_exponent * unit * factors[0] * ... * factors[m-1],
/// with the factors drawn from the norm-p basis and no backtracking.
struct Factorization {
    std::uint32_t content_exponent = 0;
    Quaternion unit{1, 0, 0, 0};
    std::vector<Quaternion> factors;
};

/// Peels basis divisors off the right. Throws std::invalid_argument if
/// norm(a) is not a power of basis.p (or a == 0).
Factorization factor(const Quaternion& a, const PrimeBasis& basis);

/// Re-multiplies a factorization (test aid; exact).
Quaternion reconstruct(const Factorization& f, std::uint64_t p);

} // namespace qgirth
