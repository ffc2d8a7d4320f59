#pragma once

#include <string>
#include <vector>

namespace fibercalc {

// A surface in the catalog family: genus g with n boundary circles and
// (for the quotient annuli) marked points.
struct SurfaceSig {
    int genus = 0;
    int boundary = 0;
    int marked = 0;

    friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;

    // rank of H_1 for the unmarked surface
    int homology_rank() const {
        int b = boundary > 0 ? boundary - 1 : 0;
        return 2 * genus + b;
    }
    int euler_characteristic() const { return 2 - 2 * genus - boundary; }
};

SurfaceSig sigma22();    // genus-2, two boundary circles (the main upstairs surface)
SurfaceSig annulus4();   // annulus with 4 marked points (its quotient)
SurfaceSig sigma13();    // genus-1, three boundary circles
SurfaceSig annulus3();   // annulus with 3 marked points (its quotient)
SurfaceSig sigma21();    // genus-2, one boundary circle (one cap attached)
SurfaceSig sigma2();     // closed genus-2 (both caps attached)
SurfaceSig sigma1n(int n);

std::string to_string(const SurfaceSig& s);

// Names of the twist generators carried by each catalog surface.
const std::vector<std::string>& catalog_names(const SurfaceSig& s);
bool in_catalog(const SurfaceSig& s, const std::string& gen);

}  // namespace fibercalc
