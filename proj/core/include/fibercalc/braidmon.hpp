#pragma once

#include <optional>
#include <vector>

#include "fibercalc/factorization.hpp"
#include "fibercalc/polyroots.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// Numerical braid monodromy of the catalog polynomial families: the branch
// points of the annulus fibration are the roots of p(x; t) and we track
// them along paths in the t-plane.

enum class FamilyKind { Quartic, Cubic, Quartic2 };

struct PolyFamily {
    FamilyKind kind = FamilyKind::Quartic;
    cxd s = 0.1;

    int degree_x() const;
    CPoly at(cxd t) const;        // p(x; t) as a polynomial in x
    CPoly dt_at(cxd t) const;     // d/dt of the coefficients
    int disc_degree_bound() const;
    // the ambient annulus fibration itself degenerates here (not a branch
    // point event); the quartic and cubic families have it over t = 0
    std::optional<cxd> ambient_nodal_value() const;
};

PolyFamily family_from_name(const std::string& name, cxd s);

struct CriticalValues {
    std::vector<cxd> values;          // discriminant roots in t, deduplicated
    std::optional<cxd> ambient_nodal; // reported separately
};
CriticalValues critical_values(const PolyFamily& f);

// Piecewise-linear path in the t-plane.
struct TPath {
    std::vector<cxd> points;
};

struct TrackOptions {
    double max_step = 0.02;
    double collapse_tol = 1e-8;
    double newton_tol = 1e-12;
};

struct BraidEvent {
    enum class Kind { Crossing, BoundaryExit };
    Kind kind = Kind::Crossing;
    int i = 0, j = 0;  // strand labels at the path start
    int sign = +1;
    double at = 0;     // path parameter in [0, 1]
};

struct TrackResult {
    std::vector<int> permutation;  // start slot -> end slot
    std::vector<BraidEvent> events;
    std::vector<cxd> start_roots, end_roots;
};

TrackResult track_roots(const PolyFamily& f, const TPath& path, const TrackOptions& opts = {});

// One positive letter per critical value, identified against the catalog
// arcs by the discrete fingerprint (colliding strand pair at the base fiber,
// winding about the inner boundary); the ambient nodal value contributes the
// nodal circle letter.  Paths default to straight segments from the base.
struct FactorizationOptions {
    cxd base = 1.0;
    double clearance = 5e-3;
    TrackOptions track;
};

Factorization braid_factorization(const PolyFamily& f, const std::vector<TPath>& paths,
                                  const FactorizationOptions& opts = {});

// Convenience: default paths to all critical values (and the nodal value),
// ordered by departure angle at the base.
std::vector<TPath> default_paths(const PolyFamily& f, cxd base = 1.0);

// Genus of the braided Seifert surface of a quasipositive band word:
// chi = strands - #bands, g = (2 - components - chi) / 2.
int bennequin_genus(const std::vector<std::pair<int, int>>& bands, int strands);

}  // namespace fibercalc
