#include "fibercalc/catalog.hpp"

#include <cstdlib>

#include "fibercalc/catalog_build.hpp"
#include "fibercalc/errors.hpp"

namespace fibercalc {

namespace {

ExactElement eval_prims(const AnnulusModel& m,
                        const std::map<std::string, CatalogLetter>& prims,
                        const std::vector<DictEntry>& word) {
    ExactElement e = m.identity();
    for (const auto& d : word) {
        auto it = prims.find(d.prim);
        if (it == prims.end()) throw UsageError("dictionary uses unknown primitive " + d.prim);
        const auto& L = it->second;
        const int n = std::abs(d.exp);
        for (int k = 0; k < n; ++k) e = m.compose(e, d.exp > 0 ? L.elem : L.elem_inv);
    }
    return e;
}

std::vector<DictEntry> dict_inverse(const std::vector<DictEntry>& w) {
    std::vector<DictEntry> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->prim, -it->exp});
    return out;
}

CatalogLetter make_letter(ExactElement e, ExactElement einv,
                          CurveKind kind = CurveKind::Nonseparating) {
    return CatalogLetter{std::move(e), std::move(einv), kind};
}

// base and its inverse conjugated by the word g (acting first-to-last).
std::pair<ExactElement, ExactElement> conj_pair(const AnnulusModel& m,
                                                const std::map<std::string, CatalogLetter>& prims,
                                                const ExactElement& base, const ExactElement& binv,
                                                const std::vector<DictEntry>& g) {
    const ExactElement eg = eval_prims(m, prims, g);
    const ExactElement egi = eval_prims(m, prims, dict_inverse(g));
    return {m.conjugated(base, eg, egi), m.conjugated(binv, eg, egi)};
}

}  // namespace

GenusTwoDictionary default_genus2_dictionary() {
    GenusTwoDictionary d;
    // Pinned by the relation battery (involution square, boundary multitwist
    // root, braid relations); see tests/test_exact.cpp.
    d.n1_conj = {{"B3", 1}, {"B2", 1}, {"B1", 1}};
    d.n5_conj = {{"B1", 1}, {"B2", 1}, {"B3", 1}};
    d.b0_base = "B1";
    d.b0_conj = {{"B2", 1}, {"B3", 1}, {"RH", 1}};
    return d;
}

GenusOneDictionary default_genus1_dictionary() {
    GenusOneDictionary d;
    d.ng_conj = {};
    d.b0_base = "B1";
    d.b0_conj = {{"B2", 1}, {"RH", 1}};
    return d;
}

Catalog build_genus2_catalog(const GenusTwoDictionary& dict) {
    const AnnulusModel& m = annulus_model_4();
    Catalog cat(m, annulus4(), sigma22());

    std::map<std::string, CatalogLetter> prims;
    prims["B1"] = make_letter(m.half_twist(0), m.half_twist(0, -1));
    prims["B2"] = make_letter(m.half_twist(1), m.half_twist(1, -1));
    prims["B3"] = make_letter(m.half_twist(2), m.half_twist(2, -1));
    prims["TD1"] = make_letter(m.run_twist(4), m.run_twist(4, -1));
    prims["TD2"] = make_letter(m.run_twist(0), m.run_twist(0, -1));
    prims["RH"] = make_letter(m.run_twist(3), m.run_twist(3, -1));
    prims["R5"] = make_letter(m.run_twist(1), m.run_twist(1, -1));

    auto& A = cat.annulus_letters;
    A["B1"] = prims["B1"];
    A["B2"] = prims["B2"];
    A["B3"] = prims["B3"];
    A["TD1"] = make_letter(prims["TD1"].elem, prims["TD1"].elem_inv, CurveKind::BoundaryParallel1);
    A["TD2"] = make_letter(prims["TD2"].elem, prims["TD2"].elem_inv, CurveKind::BoundaryParallel2);

    // Nodal circles: conjugates of the convex representatives.
    auto [n1, n1i] = conj_pair(m, prims, prims["RH"].elem, prims["RH"].elem_inv, dict.n1_conj);
    A["N1"] = make_letter(n1, n1i);
    auto [n1a, n1ai] = conj_pair(m, prims, m.run_twist(3, 1, TwistHalf::Sheet0),
                                 m.run_twist(3, -1, TwistHalf::Sheet0), dict.n1_conj);
    auto [n1b, n1bi] = conj_pair(m, prims, m.run_twist(3, 1, TwistHalf::Sheet1),
                                 m.run_twist(3, -1, TwistHalf::Sheet1), dict.n1_conj);
    if (dict.n1_swap_halves) {
        std::swap(n1a, n1b);
        std::swap(n1ai, n1bi);
    }
    A["N1A"] = make_letter(n1a, n1ai);
    A["N1B"] = make_letter(n1b, n1bi);

    auto [n5, n5i] = conj_pair(m, prims, prims["R5"].elem, prims["R5"].elem_inv, dict.n5_conj);
    A["N5"] = make_letter(n5, n5i);
    auto [n5a, n5ai] = conj_pair(m, prims, m.run_twist(1, 1, TwistHalf::Sheet0),
                                 m.run_twist(1, -1, TwistHalf::Sheet0), dict.n5_conj);
    auto [n5b, n5bi] = conj_pair(m, prims, m.run_twist(1, 1, TwistHalf::Sheet1),
                                 m.run_twist(1, -1, TwistHalf::Sheet1), dict.n5_conj);
    if (dict.n5_swap_halves) {
        std::swap(n5a, n5b);
        std::swap(n5ai, n5bi);
    }
    A["N5A"] = make_letter(n5a, n5ai);
    A["N5B"] = make_letter(n5b, n5bi);

    auto base_it = prims.find(dict.b0_base);
    if (base_it == prims.end()) throw UsageError("bad b0 base");
    auto [b0, b0i] =
        conj_pair(m, prims, base_it->second.elem, base_it->second.elem_inv, dict.b0_conj);
    A["B0"] = make_letter(b0, b0i);

    // Upstairs letters of the double cover.
    auto& C = cat.cover_letters;
    C["C2"] = A["B1"];
    C["C3"] = A["B2"];
    C["C4"] = A["B3"];
    C["C1"] = A["N1A"];
    C["C1P"] = A["N1B"];
    C["C5"] = A["N5A"];
    C["C5P"] = A["N5B"];
    C["D1"] = make_letter(m.compose(A["TD1"].elem, A["TD1"].elem),
                          m.compose(A["TD1"].elem_inv, A["TD1"].elem_inv),
                          CurveKind::BoundaryParallel1);
    C["D2"] = make_letter(m.compose(A["TD2"].elem, A["TD2"].elem),
                          m.compose(A["TD2"].elem_inv, A["TD2"].elem_inv),
                          CurveKind::BoundaryParallel2);
    return cat;
}

Catalog build_genus1_catalog(const GenusOneDictionary& dict) {
    const AnnulusModel& m = annulus_model_3();
    Catalog cat(m, annulus3(), sigma13());

    std::map<std::string, CatalogLetter> prims;
    prims["B1"] = make_letter(m.half_twist(0), m.half_twist(0, -1));
    prims["B2"] = make_letter(m.half_twist(1), m.half_twist(1, -1));
    prims["TD1"] = make_letter(m.run_twist(3), m.run_twist(3, -1));
    prims["TD2"] = make_letter(m.run_twist(0), m.run_twist(0, -1));
    prims["RH"] = make_letter(m.run_twist(2), m.run_twist(2, -1));

    auto& A = cat.annulus_letters;
    A["B1"] = prims["B1"];
    A["B2"] = prims["B2"];
    A["TD1"] = make_letter(prims["TD1"].elem, prims["TD1"].elem_inv, CurveKind::BoundaryParallel1);
    A["TD2"] = make_letter(prims["TD2"].elem, prims["TD2"].elem_inv, CurveKind::BoundaryParallel2);
    A["TD2A"] = make_letter(m.run_twist(0, 1, TwistHalf::Sheet0),
                            m.run_twist(0, -1, TwistHalf::Sheet0), CurveKind::BoundaryParallel2);
    A["TD2B"] = make_letter(m.run_twist(0, 1, TwistHalf::Sheet1),
                            m.run_twist(0, -1, TwistHalf::Sheet1), CurveKind::BoundaryParallel2);

    auto [ng, ngi] = conj_pair(m, prims, prims["RH"].elem, prims["RH"].elem_inv, dict.ng_conj);
    A["NG"] = make_letter(ng, ngi);
    auto [nga, ngai] = conj_pair(m, prims, m.run_twist(2, 1, TwistHalf::Sheet0),
                                 m.run_twist(2, -1, TwistHalf::Sheet0), dict.ng_conj);
    auto [ngb, ngbi] = conj_pair(m, prims, m.run_twist(2, 1, TwistHalf::Sheet1),
                                 m.run_twist(2, -1, TwistHalf::Sheet1), dict.ng_conj);
    if (dict.ng_swap_halves) {
        std::swap(nga, ngb);
        std::swap(ngai, ngbi);
    }
    A["NGA"] = make_letter(nga, ngai);
    A["NGB"] = make_letter(ngb, ngbi);

    auto base_it = prims.find(dict.b0_base);
    if (base_it == prims.end()) throw UsageError("bad b0 base");
    auto [b0, b0i] =
        conj_pair(m, prims, base_it->second.elem, base_it->second.elem_inv, dict.b0_conj);
    A["B0"] = make_letter(b0, b0i);

    auto& C = cat.cover_letters;
    C["E1"] = A["B1"];
    C["E2"] = A["B2"];
    C["E0"] = A["B0"];
    C["V1"] = A["NGA"];
    C["V1P"] = A["NGB"];
    C["DG1"] = make_letter(m.compose(A["TD1"].elem, A["TD1"].elem),
                           m.compose(A["TD1"].elem_inv, A["TD1"].elem_inv),
                           CurveKind::BoundaryParallel1);
    C["DG2"] = make_letter(A["TD2A"].elem, A["TD2A"].elem_inv, CurveKind::BoundaryParallel2);
    C["DG3"] = make_letter(A["TD2B"].elem, A["TD2B"].elem_inv, CurveKind::BoundaryParallel2);
    return cat;
}

const Catalog& catalog_genus2() {
    static const Catalog cat = build_genus2_catalog(default_genus2_dictionary());
    return cat;
}

const Catalog& catalog_genus1() {
    static const Catalog cat = build_genus1_catalog(default_genus1_dictionary());
    return cat;
}

const CatalogLetter& Catalog::letter(const SurfaceSig& surf, const std::string& name) const {
    const auto& reg = (surf == annulus) ? annulus_letters : cover_letters;
    auto it = reg.find(name);
    if (it == reg.end())
        throw UnknownGeneratorError("generator '" + name + "' unknown on " + to_string(surf));
    return it->second;
}

bool Catalog::has_letter(const SurfaceSig& surf, const std::string& name) const {
    const auto& reg = (surf == annulus) ? annulus_letters : cover_letters;
    return reg.count(name) > 0;
}

ExactElement Catalog::eval(const Word& w) const {
    ExactElement e = model.identity();
    for (const auto& l : w.letters) {
        const auto& L = letter(w.surface, l.gen);
        const int n = std::abs(l.exp);
        for (int k = 0; k < n; ++k) e = model.compose(e, l.exp > 0 ? L.elem : L.elem_inv);
    }
    return e;
}

const Catalog& catalog_for(const SurfaceSig& surf) {
    if (surf == annulus4() || surf == sigma22()) return catalog_genus2();
    if (surf == annulus3() || surf == sigma13()) return catalog_genus1();
    throw UsageError("no exact backend for " + to_string(surf));
}

bool exact_backend_available(const SurfaceSig& surf) {
    return surf == annulus4() || surf == sigma22() || surf == annulus3() || surf == sigma13();
}

ExactElement exact_eval(const Word& w) { return catalog_for(w.surface).eval(w); }

bool exact_equal(const Word& w1, const Word& w2) {
    if (!(w1.surface == w2.surface))
        throw SurfaceMismatchError("exact_equal: different surfaces");
    const Catalog& cat = catalog_for(w1.surface);
    return cat.eval(w1) == cat.eval(w2);
}

bool exact_is_identity(const Word& w) {
    const Catalog& cat = catalog_for(w.surface);
    return cat.model.is_identity(cat.eval(w));
}

std::string exact_fingerprint(const Word& w) {
    const Catalog& cat = catalog_for(w.surface);
    return cat.model.fingerprint(cat.eval(w));
}

CurveKind letter_kind(const SurfaceSig& surf, const std::string& name) {
    if (surf == sigma21() || surf == sigma2()) {
        // capped surfaces inherit the genus-2 catalog kinds; boundary twists
        // about a capped circle become trivial and are dropped by cap_word.
        if (name == "D1") return CurveKind::BoundaryParallel1;
        return CurveKind::Nonseparating;
    }
    return catalog_for(surf).letter(surf, name).kind;
}

}  // namespace fibercalc
