#pragma once

#include <cstdint>
#include <vector>

#include "fibercalc/catalog.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// Integral homology backend: every catalog twist acts on H_1 of the covering
// surface by the transvection x -> x + <x,c>.c along its curve class c, with
// boundary twists acting trivially (their classes lie in the radical of the
// intersection pairing).  This is the abelianized image of the exact action,
// used as a fast necessary condition: exact equality implies equality here,
// never conversely.

using HVec = std::vector<int64_t>;
using HMat = std::vector<std::vector<int64_t>>;  // row-vector action: x -> x * M

struct HomologyRep {
    HMat matrix;
    friend bool operator==(const HomologyRep&, const HomologyRep&) = default;
};

// rank of H_1 of the covering surface carrying this word's letters
int h1_rank(const SurfaceSig& surf);

// Intersection pairing in the fixed basis (a1, b1, a2, b2, d) for the
// genus-2 cover, (a1, b1, d1, d2) for the genus-1 cover.
const HMat& intersection_pairing(const SurfaceSig& surf);

// Curve class of a catalog twist generator in the fixed basis.
const HVec& h1_class(const SurfaceSig& surf, const std::string& gen);

HMat transvection(const SurfaceSig& surf, const HVec& c);

HomologyRep homology_eval(const Word& w);
HomologyRep homology_identity(const SurfaceSig& surf);
bool preserves_pairing(const SurfaceSig& surf, const HMat& m);

HMat hmul(const HMat& a, const HMat& b);
HVec happly(const HVec& x, const HMat& m);  // x * M
bool is_h_identity(const HMat& m);

// --- derivation hooks (used to pin and re-validate the frozen tables) ---

// Abelianization coordinates of an even word in the orbifold group: the
// sheet-weighted letter counts that present H_1 of the covering surface.
HVec cover_ab_coords(const AnnulusModel& m, const GWord& w);

// Matrix of an exact element on those coordinates.
HMat cover_h1_matrix(const AnnulusModel& m, const ExactElement& e);

// Frozen base change from the raw coordinates to the fixed basis
// (columns = basis vectors in raw coordinates).
const HMat& cover_basis(const SurfaceSig& surf);

}  // namespace fibercalc
