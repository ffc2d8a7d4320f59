#include "fibercalc/word.hpp"

#include <cstdlib>

#include "fibercalc/errors.hpp"

namespace fibercalc {

bool Word::positive() const {
    for (const auto& l : letters)
        if (l.exp < 0) return false;
    return true;
}

int64_t Word::length() const {
    int64_t n = 0;
    for (const auto& l : letters) n += std::llabs(static_cast<long long>(l.exp));
    return n;
}

Word make_word(const SurfaceSig& s, const std::vector<WLetter>& letters) {
    Word w{s, {}};
    w.letters.reserve(letters.size());
    for (const auto& l : letters) {
        if (!in_catalog(s, l.gen))
            throw UnknownGeneratorError("generator '" + l.gen + "' is not in the catalog of " +
                                        to_string(s));
        if (l.exp == 0) throw UsageError("zero exponent on generator '" + l.gen + "'");
        // cancel adjacent letters of the same generator only
        if (!w.letters.empty() && w.letters.back().gen == l.gen) {
            w.letters.back().exp += l.exp;
            if (w.letters.back().exp == 0) w.letters.pop_back();
        } else {
            w.letters.push_back(l);
        }
    }
    return w;
}

Word compose(const Word& w1, const Word& w2) {
    if (!(w1.surface == w2.surface))
        throw SurfaceMismatchError("compose: words live on " + to_string(w1.surface) + " and " +
                                   to_string(w2.surface));
    std::vector<WLetter> ls = w1.letters;
    ls.insert(ls.end(), w2.letters.begin(), w2.letters.end());
    return make_word(w1.surface, ls);
}

Word inverse(const Word& w) {
    std::vector<WLetter> ls;
    ls.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        ls.push_back({it->gen, -it->exp});
    return make_word(w.surface, ls);
}

Word power(const Word& w, int k) {
    Word out = make_word(w.surface, {});
    Word base = k >= 0 ? w : inverse(w);
    for (int i = 0; i < std::abs(k); ++i) out = compose(out, base);
    return out;
}

Word conjugate(const Word& w, const Word& g) {
    return compose(compose(inverse(g), w), g);
}

std::string to_string(const Word& w) {
    if (w.letters.empty()) return "<empty>";
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        s += l.gen;
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

}  // namespace fibercalc
