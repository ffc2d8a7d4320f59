#include "fibercalc/surface.hpp"

#include <algorithm>

namespace fibercalc {

SurfaceSig sigma22() { return {2, 2, 0}; }
SurfaceSig annulus4() { return {0, 2, 4}; }
SurfaceSig sigma13() { return {1, 3, 0}; }
SurfaceSig annulus3() { return {0, 2, 3}; }
SurfaceSig sigma21() { return {2, 1, 0}; }
SurfaceSig sigma2() { return {2, 0, 0}; }
SurfaceSig sigma1n(int n) { return {1, n, 0}; }

std::string to_string(const SurfaceSig& s) {
    std::string out = "Sigma(" + std::to_string(s.genus) + "," + std::to_string(s.boundary) + ")";
    if (s.marked) out += "*" + std::to_string(s.marked);
    return out;
}

const std::vector<std::string>& catalog_names(const SurfaceSig& s) {
    // Upstairs catalogs: C* along the chain curves, D* about boundary circles.
    static const std::vector<std::string> k22 = {"C1", "C1P", "C2", "C3", "C4",
                                                 "C5", "C5P", "D1", "D2"};
    // Downstairs, annulus with 4 marked points: B* braid half-twists, TD*
    // boundary twists, N* full twists about the two nodal circles, with A/B
    // the two lifts of each nodal annulus (sheet-tagged letters used by the
    // covering dictionary).
    static const std::vector<std::string> ka4 = {"B0", "B1",  "B2",  "B3", "TD1", "TD2",
                                                 "N1", "N1A", "N1B", "N5", "N5A", "N5B"};
    // Annulus with 3 marked points (genus-1 quotient); TD2 splits here
    // because the outer boundary has two preimage circles.
    static const std::vector<std::string> ka3 = {"B0",  "B1",  "B2",   "TD1",  "TD2",
                                                 "NG",  "NGA", "NGB",  "TD2A", "TD2B"};
    static const std::vector<std::string> k13 = {"E0", "E1", "E2", "V1", "V1P",
                                                 "DG1", "DG2", "DG3"};
    static const std::vector<std::string> k21 = {"C1", "C1P", "C2", "C3", "C4",
                                                 "C5", "C5P", "D1", "D2"};
    static const std::vector<std::string> k2 = {"C1", "C1P", "C2", "C3", "C4", "C5", "C5P"};
    static const std::vector<std::string> kempty = {};

    if (s == sigma22()) return k22;
    if (s == annulus4()) return ka4;
    if (s == annulus3()) return ka3;
    if (s == sigma13()) return k13;
    if (s == sigma21()) return k21;
    if (s == sigma2()) return k2;
    return kempty;
}

bool in_catalog(const SurfaceSig& s, const std::string& gen) {
    const auto& names = catalog_names(s);
    return std::find(names.begin(), names.end(), gen) != names.end();
}

}  // namespace fibercalc
