#pragma once

// Free-group words: sequences of signed generator letters, +g for generator
// index g-1, -g for its inverse (letters are 1-based so sign carries the
// inverse). Conjugation convention is configurable: the computer-algebra
// default g^h = h^-1 g h, or the flipped g^h = h g h^-1.

#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

enum class ConjConvention {
    RightAction, // g^h = h^-1 g h (default)
    LeftAction   // g^h = h g h^-1
};

struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
    static Word gen(int index) { return Word({index + 1}); } // 0-based index

    bool empty() const { return letters.empty(); }
    size_t length() const { return letters.size(); }

    Word inverse() const;
    Word operator*(const Word& o) const; // concatenation, then free reduction
    Word pow(int e) const;
    Word conj(const Word& h, ConjConvention cc = ConjConvention::RightAction) const;

    Word free_reduced() const;
    Word cyclically_reduced() const;
    bool is_freely_reduced() const;

    /// Largest generator index used (0-based), or -1 for the empty word.
    int max_generator() const;

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return letters < o.letters; }

    std::string to_string(const std::vector<std::string>& names) const;
};

/// Canonical representative of the cyclic-equivalence class (rotations only,
/// not inverses) of a cyclically reduced word: lexicographically least rotation.
Word cyclic_canonical(const Word& w);

/// True iff a and b are cyclic rotations of each other after cyclic reduction.
bool cyclically_equal(const Word& a, const Word& b);

} // namespace cgt
