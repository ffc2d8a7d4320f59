#pragma once

#include <string>
#include <vector>

#include "fibercalc/surface.hpp"

namespace fibercalc {

struct WLetter {
    std::string gen;
    int exp = 1;  // nonzero
    friend bool operator==(const WLetter&, const WLetter&) = default;
};

// An unevaluated product of named twist generators on a declared surface.
// Storage keeps exponents as written except for cancelling adjacent letters
// of the same generator; semantic equality goes through exact_equal.
struct Word {
    SurfaceSig surface;
    std::vector<WLetter> letters;

    friend bool operator==(const Word&, const Word&) = default;

    bool positive() const;
    int64_t length() const;  // letter count with multiplicity
};

Word make_word(const SurfaceSig& s, const std::vector<WLetter>& letters);

// w1 acts first, then w2.
Word compose(const Word& w1, const Word& w2);
Word inverse(const Word& w);
Word power(const Word& w, int k);
Word conjugate(const Word& w, const Word& g);  // g^{-1} w g

std::string to_string(const Word& w);

}  // namespace fibercalc
