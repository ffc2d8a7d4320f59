#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibercalc/catalog.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc::testing {

inline Word w22(const std::vector<std::string>& gens) {
    std::vector<WLetter> ls;
    for (const auto& g : gens) ls.push_back({g, 1});
    return make_word(sigma22(), ls);
}

inline Word wa4(const std::vector<WLetter>& ls) { return make_word(annulus4(), ls); }
inline Word wa3(const std::vector<WLetter>& ls) { return make_word(annulus3(), ls); }

inline Word psi1() { return w22({"C4", "C3", "C2", "C1", "C1P"}); }
inline Word psi1_tilde() { return w22({"C2", "C3", "C4", "C5", "C5P", "D1"}); }
inline Word i_tilde() {
    return w22({"C2", "C3", "C4", "C5", "C5P", "C4", "C3", "C2", "C1", "C1P"});
}

inline Word random_word(std::mt19937& rng, const SurfaceSig& surf, int len,
                        bool positive = false) {
    const auto& names = catalog_names(surf);
    std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<WLetter> ls;
    for (int i = 0; i < len; ++i)
        ls.push_back({names[pick(rng)], positive ? 1 : (sgn(rng) ? 1 : -1)});
    return make_word(surf, ls);
}

}  // namespace fibercalc::testing
