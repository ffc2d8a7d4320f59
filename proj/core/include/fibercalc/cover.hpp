#pragma once

#include "fibercalc/word.hpp"

namespace fibercalc {

// Word-level dictionary across the branched double cover.
//
// project_word sends each twist on the cover to the mapping class it lifts:
// curve lifts of half-twist arcs go to the half-twists, the two lifts of a
// nodal circle go to the sheet-tagged nodal letters, and a boundary twist
// goes to the square of the boundary twist below when its boundary circle
// doubles the one downstairs.
//
// lift_word is the left inverse.  Boundary twists with only one boundary
// circle upstairs must arrive in even blocks; an odd remainder has no lift
// and raises NotLiftableError.  On the 3-marked annulus the outer twist
// lifts letter-by-letter to the product of the two boundary twists upstairs.

Word project_word(const Word& w);
Word lift_word(const Word& w);

bool is_liftable(const Word& w);          // letterwise rule, no exception
SurfaceSig cover_surface(const SurfaceSig& annulus_sig);
SurfaceSig quotient_surface(const SurfaceSig& cover_sig);

}  // namespace fibercalc
