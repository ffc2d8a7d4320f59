#include "fibercalc/cover.hpp"

#include <cstdlib>
#include <map>

#include "fibercalc/errors.hpp"

namespace fibercalc {

namespace {

struct CoverDict {
    // cover letter -> (annulus letter, exponent multiplier)
    std::map<std::string, std::pair<std::string, int>> down;
    // annulus letter -> (cover letters); boundary letters handled separately
    std::map<std::string, std::vector<std::string>> up;
    // letters lifted through a defining word in other annulus letters
    std::map<std::string, std::vector<WLetter>> expansions;
    std::string td1 = "TD1", td2 = "TD2";
    std::string d1_up, d2_up;  // lifts of TD1^2 / TD2-side twists
    bool td2_halves = false;   // 3-marked annulus: TD2 lifts letterwise
    std::string td2_pair_a, td2_pair_b;
};

const CoverDict& dict_for(const SurfaceSig& s) {
    static const CoverDict g2 = [] {
        CoverDict d;
        d.down = {{"C2", {"B1", 1}},  {"C3", {"B2", 1}},  {"C4", {"B3", 1}},
                  {"C1", {"N1A", 1}}, {"C1P", {"N1B", 1}}, {"C5", {"N5A", 1}},
                  {"C5P", {"N5B", 1}}, {"D1", {"TD1", 2}}, {"D2", {"TD2", 2}}};
        d.up = {{"B1", {"C2"}},  {"B2", {"C3"}},        {"B3", {"C4"}},
                {"N1A", {"C1"}}, {"N1B", {"C1P"}},      {"N5A", {"C5"}},
                {"N5B", {"C5P"}}, {"N1", {"C1", "C1P"}}, {"N5", {"C5", "C5P"}}};
        // B0 has no one-letter lift in this catalog; it lifts through its
        // defining conjugation (B0 = w^{-1} B1 w with w = B2 B3 RH and
        // RH = B3 B2 B1 N1 B1^{-1} B2^{-1} B3^{-1}), so the lifted word is
        // the letterwise lift of w^{-1} B1 w.  project(lift(B0)) equals B0
        // as a mapping class, not letter-for-letter.
        d.expansions["B0"] = [] {
            std::vector<WLetter> rh = {{"B3", 1},  {"B2", 1},  {"B1", 1}, {"N1", 1},
                                       {"B1", -1}, {"B2", -1}, {"B3", -1}};
            std::vector<WLetter> cw = {{"B2", 1}, {"B3", 1}};
            cw.insert(cw.end(), rh.begin(), rh.end());
            std::vector<WLetter> out;
            for (auto it = cw.rbegin(); it != cw.rend(); ++it) out.push_back({it->gen, -it->exp});
            out.push_back({"B1", 1});
            out.insert(out.end(), cw.begin(), cw.end());
            return out;
        }();
        d.d1_up = "D1";
        d.d2_up = "D2";
        return d;
    }();
    static const CoverDict g1 = [] {
        CoverDict d;
        d.down = {{"E1", {"B1", 1}},  {"E2", {"B2", 1}},   {"E0", {"B0", 1}},
                  {"V1", {"NGA", 1}}, {"V1P", {"NGB", 1}}, {"DG1", {"TD1", 2}},
                  {"DG2", {"TD2A", 1}}, {"DG3", {"TD2B", 1}}};
        d.up = {{"B1", {"E1"}},  {"B2", {"E2"}},  {"B0", {"E0"}},
                {"NGA", {"V1"}}, {"NGB", {"V1P"}}, {"NG", {"V1", "V1P"}},
                {"TD2A", {"DG2"}}, {"TD2B", {"DG3"}}};
        d.d1_up = "DG1";
        d.td2_halves = true;
        d.td2_pair_a = "DG2";
        d.td2_pair_b = "DG3";
        return d;
    }();
    if (s == sigma22() || s == annulus4()) return g2;
    if (s == sigma13() || s == annulus3()) return g1;
    throw UsageError("no covering dictionary for " + to_string(s));
}

}  // namespace

SurfaceSig cover_surface(const SurfaceSig& s) {
    if (s == annulus4()) return sigma22();
    if (s == annulus3()) return sigma13();
    throw UsageError(to_string(s) + " is not a catalog quotient surface");
}

SurfaceSig quotient_surface(const SurfaceSig& s) {
    if (s == sigma22()) return annulus4();
    if (s == sigma13()) return annulus3();
    throw UsageError(to_string(s) + " is not a catalog cover surface");
}

Word project_word(const Word& w) {
    const SurfaceSig down_sig = quotient_surface(w.surface);
    const CoverDict& d = dict_for(w.surface);
    std::vector<WLetter> out;
    for (const auto& l : w.letters) {
        auto it = d.down.find(l.gen);
        if (it == d.down.end())
            throw UnknownGeneratorError("project_word: no image for " + l.gen);
        out.push_back({it->second.first, l.exp * it->second.second});
    }
    return make_word(down_sig, out);
}

namespace {

void lift_run(const CoverDict& d, const SurfaceSig& up_sig, const WLetter& l,
              std::vector<WLetter>& out) {
    if (l.gen == d.td1) {
        if (l.exp % 2 != 0)
            throw NotLiftableError("TD1^" + std::to_string(l.exp) +
                                   " has no lift: the inner boundary circle doubles and only "
                                   "even twist blocks lift");
        out.push_back({d.d1_up, l.exp / 2});
        return;
    }
    if (l.gen == d.td2) {
        if (d.td2_halves) {
            // both outer circles upstairs twist once per downstairs twist
            const int n = std::abs(l.exp);
            for (int k = 0; k < n; ++k) {
                out.push_back({d.td2_pair_a, l.exp > 0 ? 1 : -1});
                out.push_back({d.td2_pair_b, l.exp > 0 ? 1 : -1});
            }
            return;
        }
        if (l.exp % 2 != 0)
            throw NotLiftableError("TD2^" + std::to_string(l.exp) +
                                   " has no lift: the outer boundary circle doubles and only "
                                   "even twist blocks lift");
        out.push_back({d.d2_up, l.exp / 2});
        return;
    }
    if (auto ex = d.expansions.find(l.gen); ex != d.expansions.end()) {
        const int n = std::abs(l.exp);
        for (int k = 0; k < n; ++k) {
            if (l.exp > 0) {
                for (const auto& el : ex->second) lift_run(d, up_sig, el, out);
            } else {
                for (auto rit = ex->second.rbegin(); rit != ex->second.rend(); ++rit)
                    lift_run(d, up_sig, {rit->gen, -rit->exp}, out);
            }
        }
        return;
    }
    auto it = d.up.find(l.gen);
    if (it == d.up.end() || it->second.empty())
        throw NotLiftableError("no lift recorded for letter " + l.gen);
    const int n = std::abs(l.exp);
    const int s = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < n; ++k) {
        if (s > 0) {
            for (const auto& g : it->second) out.push_back({g, 1});
        } else {
            for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
                out.push_back({*rit, -1});
        }
    }
    (void)up_sig;
}

}  // namespace

Word lift_word(const Word& w) {
    const SurfaceSig up_sig = cover_surface(w.surface);
    const CoverDict& d = dict_for(w.surface);
    std::vector<WLetter> out;
    for (const auto& l : w.letters) lift_run(d, up_sig, l, out);
    return make_word(up_sig, out);
}

bool is_liftable(const Word& w) {
    try {
        lift_word(w);
        return true;
    } catch (const NotLiftableError&) {
        return false;
    }
}

}  // namespace fibercalc
