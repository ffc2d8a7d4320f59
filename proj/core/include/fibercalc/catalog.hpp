#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibercalc/exact.hpp"
#include "fibercalc/surface.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// How a curve sits on its surface; drives the invariants module.
enum class CurveKind { Trivial, BoundaryParallel1, BoundaryParallel2, Nonseparating, SeparatingGenus1 };

struct CatalogLetter {
    ExactElement elem;      // downstairs exact action (sheet pair for upstairs letters)
    ExactElement elem_inv;
    CurveKind kind = CurveKind::Nonseparating;
};

// Evaluated letter registry for one of the two marked annuli together with
// the catalog of the surface double-covering it.
class Catalog {
public:
    const AnnulusModel& model;
    SurfaceSig annulus;
    SurfaceSig cover;

    const CatalogLetter& letter(const SurfaceSig& surf, const std::string& name) const;
    bool has_letter(const SurfaceSig& surf, const std::string& name) const;

    ExactElement eval(const Word& w) const;

    Catalog(const AnnulusModel& m, SurfaceSig annulus_sig, SurfaceSig cover_sig)
        : model(m), annulus(annulus_sig), cover(cover_sig) {}

    std::map<std::string, CatalogLetter> annulus_letters;
    std::map<std::string, CatalogLetter> cover_letters;
};

// The two catalog instances (built once, immutable afterwards).
const Catalog& catalog_genus2();  // 4-marked annulus under Sigma(2,2)
const Catalog& catalog_genus1();  // 3-marked annulus under Sigma(1,3)

const Catalog& catalog_for(const SurfaceSig& surf);
bool exact_backend_available(const SurfaceSig& surf);

// Exact evaluation / equality of catalog words (both annuli and both covers).
ExactElement exact_eval(const Word& w);
bool exact_equal(const Word& w1, const Word& w2);
bool exact_is_identity(const Word& w);
std::string exact_fingerprint(const Word& w);

CurveKind letter_kind(const SurfaceSig& surf, const std::string& name);

}  // namespace fibercalc
