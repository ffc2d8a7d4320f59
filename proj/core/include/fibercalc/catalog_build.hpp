#pragma once

// Internal: catalog construction with an explicit covering dictionary.
// The shipped defaults are pinned by the relation battery in the tests;
// this header exists so tests can rebuild and re-validate the tables.

#include "fibercalc/catalog.hpp"

namespace fibercalc {

// Conjugator words are written over the primitive twists:
//   B1 B2 B3 (half-twists), TD1 TD2 (boundary twists),
//   RH = convex twist about {last marked point, hole},
//   R5 = convex twist about {marked points 2..n, hole}.
struct DictEntry {
    std::string prim;
    int exp = 1;
};

struct GenusTwoDictionary {
    std::vector<DictEntry> n1_conj;  // carries RH to the first nodal circle
    std::vector<DictEntry> n5_conj;  // carries R5 to the second nodal circle
    std::vector<DictEntry> b0_conj;  // carries the B0 base chord around the hole
    std::string b0_base = "B3";
    bool n1_swap_halves = false;     // which preimage circle is called C1
    bool n5_swap_halves = false;
};

struct GenusOneDictionary {
    std::vector<DictEntry> ng_conj;  // carries RH to the nodal circle
    std::vector<DictEntry> b0_conj;
    std::string b0_base = "B2";
    bool ng_swap_halves = false;
};

GenusTwoDictionary default_genus2_dictionary();
GenusOneDictionary default_genus1_dictionary();

Catalog build_genus2_catalog(const GenusTwoDictionary& dict);
Catalog build_genus1_catalog(const GenusOneDictionary& dict);

}  // namespace fibercalc
