#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibercalc/word.hpp"

namespace fibercalc {

// A letter of a positive factorization: a positive catalog twist, possibly
// conjugated.  Conjugates of catalog twists generally leave the catalog, so
// the conjugator is kept symbolically; two letters are the same twist iff
// their words evaluate to the same exact element.
struct FactLetter {
    std::string base;
    Word conj;  // letter = conj^{-1} . base . conj

    Word as_word() const;
};

struct Factorization {
    SurfaceSig surface;
    std::vector<FactLetter> letters;
};

Factorization make_factorization(const SurfaceSig& s, const std::vector<std::string>& bases);
Factorization conjugate_factorization(const Factorization& f, const Word& g);

Word product(const Factorization& f);

enum class MoveKind { L, R, CyclicLeft, CyclicRight, GlobalConj };

struct Move {
    MoveKind kind;
    int index = 0;                  // position for L/R
    std::optional<Word> conjugator; // for GlobalConj
};

using MoveTrace = std::vector<Move>;

// Elementary slide at position i:
//   R: (a, b) -> (a b a^{-1}, a)    L: (a, b) -> (b, b^{-1} a b)
// The product is unchanged; L and R at the same index are mutually inverse.
Factorization hurwitz_move(const Factorization& f, int i, MoveKind dir);
Factorization apply_move(const Factorization& f, const Move& m);
Factorization replay(const Factorization& f, const MoveTrace& trace);

// Letterwise semantic equality (exact elements of all letters agree in order).
bool letters_equal(const Factorization& f1, const Factorization& f2);

struct SearchOptions {
    int depth = 8;
    bool allow_cyclic = false;
    std::vector<Word> global_conjugators;  // extra move alphabet
    std::size_t max_states = 2'000'000;
};

// Bidirectional breadth-first search for a move sequence carrying f1 to f2,
// deduplicated on exact letter fingerprints.  A returned trace is certified
// by replay before being handed back.  nullopt means "not found within
// depth", never a disproof.
std::optional<MoveTrace> hurwitz_equivalent(const Factorization& f1, const Factorization& f2,
                                            const SearchOptions& opts = {});

}  // namespace fibercalc
