#include "fibercalc/braidmon.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fibercalc/errors.hpp"

namespace fibercalc {

namespace {

constexpr double kOrderingAngle = 0.37549;  // generic projection direction

double proj(cxd x) { return (x * std::polar(1.0, -kOrderingAngle)).real(); }

// catalog labels: roots sorted by angle starting just below the negative
// real axis, counterclockwise; stable for perturbations up to ~0.3 rad
double label_key(cxd x) {
    double a = std::arg(x) - M_PI + 0.3;
    a = std::fmod(a, 2 * M_PI);
    if (a < 0) a += 2 * M_PI;
    return a;
}

}  // namespace

int PolyFamily::degree_x() const {
    switch (kind) {
        case FamilyKind::Quartic:
        case FamilyKind::Quartic2:
            return 4;
        case FamilyKind::Cubic:
            return 3;
    }
    return 0;
}

CPoly PolyFamily::at(cxd t) const {
    switch (kind) {
        case FamilyKind::Quartic:
            return CPoly{{-t, -s, 0, 0, 1}};
        case FamilyKind::Cubic:
            return CPoly{{-t, s, 0, 1}};
        case FamilyKind::Quartic2:
            return CPoly{{-t * t * t, 0, 0, s, 1}};
    }
    throw UsageError("bad family");
}

CPoly PolyFamily::dt_at(cxd t) const {
    switch (kind) {
        case FamilyKind::Quartic:
        case FamilyKind::Cubic:
            return CPoly{{-1}};
        case FamilyKind::Quartic2:
            return CPoly{{-3.0 * t * t}};
    }
    throw UsageError("bad family");
}

int PolyFamily::disc_degree_bound() const {
    switch (kind) {
        case FamilyKind::Quartic:
            return 6;
        case FamilyKind::Cubic:
            return 4;
        case FamilyKind::Quartic2:
            return 12;
    }
    return 8;
}

std::optional<cxd> PolyFamily::ambient_nodal_value() const { return cxd(0); }

PolyFamily family_from_name(const std::string& name, cxd s) {
    if (name == "quartic") return {FamilyKind::Quartic, s};
    if (name == "cubic") return {FamilyKind::Cubic, s};
    if (name == "quartic2") return {FamilyKind::Quartic2, s};
    throw UsageError("unknown family '" + name + "'");
}

CriticalValues critical_values(const PolyFamily& f) {
    auto p = [&](cxd t) { return f.at(t); };
    auto q = [&](cxd t) { return f.at(t).derivative(); };
    CPoly disc = resultant_in_t(p, q, f.disc_degree_bound());
    std::vector<cxd> rts = roots(disc);
    // deduplicate clusters (multiple discriminant roots)
    std::vector<cxd> vals;
    for (const auto& r : rts) {
        bool close = false;
        for (const auto& v : vals)
            if (std::abs(v - r) < 1e-6 * (1.0 + std::abs(v))) close = true;
        if (!close) vals.push_back(r);
    }
    std::sort(vals.begin(), vals.end(), [](cxd a, cxd b) {
        double ka = std::arg(a), kb = std::arg(b);
        if (ka < 0) ka += 2 * M_PI;
        if (kb < 0) kb += 2 * M_PI;
        if (std::abs(ka - kb) > 1e-12) return ka < kb;
        return std::abs(a) < std::abs(b);
    });
    CriticalValues out;
    out.values = vals;
    out.ambient_nodal = f.ambient_nodal_value();
    return out;
}

namespace {

struct Tracker {
    const PolyFamily& fam;
    TrackOptions opts;
    std::vector<cxd> z;  // slot = strand label fixed at the start

    double min_separation() const {
        double m = 1e300;
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
        return m;
    }

    // one predictor-corrector step from t to t+dt; returns false if the
    // corrector did not converge tightly enough
    bool step(cxd t, cxd dt) {
        const CPoly p0 = fam.at(t);
        const CPoly pt = fam.dt_at(t);
        const CPoly px = p0.derivative();
        std::vector<cxd> nz = z;
        for (size_t i = 0; i < z.size(); ++i) {
            const cxd dxdt = -pt.eval(z[i]) / px.eval(z[i]);
            nz[i] = z[i] + dxdt * dt;
        }
        const CPoly p1 = fam.at(t + dt);
        const CPoly p1x = p1.derivative();
        for (size_t i = 0; i < nz.size(); ++i) {
            for (int it = 0; it < 12; ++it) {
                const cxd d = p1x.eval(nz[i]);
                if (std::abs(d) < 1e-250) return false;
                const cxd step = p1.eval(nz[i]) / d;
                nz[i] -= step;
                if (std::abs(step) < opts.newton_tol * (1 + std::abs(nz[i]))) break;
            }
            if (std::abs(p1.eval(nz[i])) > 1e-8 * (1 + std::abs(nz[i]))) return false;
        }
        // reject steps that moved any root more than a fraction of the gap
        const double gap = min_separation();
        for (size_t i = 0; i < z.size(); ++i)
            if (std::abs(nz[i] - z[i]) > 0.4 * gap) return false;
        z = nz;
        return true;
    }
};

std::vector<int> order_by_projection(const std::vector<cxd>& z) {
    std::vector<int> idx(z.size());
    for (size_t i = 0; i < z.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return proj(z[a]) < proj(z[b]); });
    return idx;
}

}  // namespace

TrackResult track_roots(const PolyFamily& f, const TPath& path, const TrackOptions& opts) {
    if (path.points.size() < 2) throw UsageError("track_roots: path needs at least two points");
    Tracker tr{f, opts, roots(f.at(path.points.front()))};
    TrackResult out;
    out.start_roots = tr.z;

    double total_len = 0;
    for (size_t k = 0; k + 1 < path.points.size(); ++k)
        total_len += std::abs(path.points[k + 1] - path.points[k]);
    double done_len = 0;

    std::vector<int> order = order_by_projection(tr.z);
    std::vector<cxd> prev = tr.z;

    for (size_t k = 0; k + 1 < path.points.size(); ++k) {
        const cxd a = path.points[k], b = path.points[k + 1];
        const double seg = std::abs(b - a);
        if (seg == 0) continue;
        double s = 0;
        while (s < seg) {
            const double gap = tr.min_separation();
            if (gap < opts.collapse_tol)
                throw StepCollapseError("track_roots: strands within collapse tolerance");
            double h = std::min({opts.max_step, 0.2 * gap, seg - s});
            cxd t = a + (b - a) * (s / seg);
            int halvings = 0;
            while (!tr.step(t, (b - a) * (h / seg))) {
                h *= 0.5;
                ++halvings;
                if (halvings > 40)
                    throw StepCollapseError("track_roots: step size collapsed near t = " +
                                            std::to_string(t.real()) + "+" +
                                            std::to_string(t.imag()) + "i");
            }
            s += h;
            done_len += h;
            // crossing detection on the generic projection
            std::vector<int> norder = order_by_projection(tr.z);
            if (norder != order) {
                // bubble out the adjacent transpositions
                std::vector<int> cur = order;
                for (size_t pass = 0; pass + 1 < cur.size(); ++pass) {
                    for (size_t i = 0; i + 1 < cur.size(); ++i) {
                        const int x = cur[i], y = cur[i + 1];
                        // should x,y swap to approach norder?
                        auto px_ = std::find(norder.begin(), norder.end(), x) - norder.begin();
                        auto py_ = std::find(norder.begin(), norder.end(), y) - norder.begin();
                        if (px_ > py_) {
                            BraidEvent ev;
                            ev.kind = BraidEvent::Kind::Crossing;
                            ev.i = std::min(x, y);
                            ev.j = std::max(x, y);
                            const cxd uo = prev[x] - prev[y];
                            const cxd un = tr.z[x] - tr.z[y];
                            ev.sign = (std::conj(uo) * un).imag() >= 0 ? +1 : -1;
                            ev.at = done_len / total_len;
                            out.events.push_back(ev);
                            std::swap(cur[i], cur[i + 1]);
                        }
                    }
                }
                order = norder;
            }
            prev = tr.z;
        }
    }
    out.end_roots = tr.z;
    // permutation: strand i ends at the starting position of permutation[i]
    const double tol = 1e-5 * (1 + std::abs(path.points.front()));
    out.permutation.assign(tr.z.size(), -1);
    if (std::abs(path.points.front() - path.points.back()) < 1e-12) {
        std::vector<bool> used(tr.z.size(), false);
        for (size_t i = 0; i < tr.z.size(); ++i) {
            int best = -1;
            double bd = 1e300;
            for (size_t j = 0; j < out.start_roots.size(); ++j) {
                const double d = std::abs(tr.z[i] - out.start_roots[j]);
                if (d < bd) {
                    bd = d;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0 || bd > tol || used[best])
                throw ComputationError("track_roots: could not match strands around the loop");
            used[best] = true;
            out.permutation[i] = best;
        }
    } else {
        for (size_t i = 0; i < tr.z.size(); ++i) out.permutation[i] = static_cast<int>(i);
    }
    return out;
}

namespace {

double positive_angle(cxd z) {
    double a = std::arg(z);
    if (a < 0) a += 2 * M_PI;
    return a;
}

void append_arc(TPath& p, double radius, double from, double to) {
    const int steps = std::max(2, static_cast<int>(std::ceil(std::abs(to - from) / 0.15)));
    for (int k = 1; k <= steps; ++k) {
        const double th = from + (to - from) * k / steps;
        p.points.push_back(radius * std::polar(1.0, th));
    }
}

}  // namespace

// Out along the base ray to a ring clear of every critical value, around
// the ring counterclockwise to the target angle, then radially in.  The
// letters come out in the cyclic order in which the paths peel off the
// ring; the nodal path descends at the angle farthest from every critical
// value and takes its natural place in that order.
std::vector<TPath> default_paths(const PolyFamily& f, cxd base) {
    CriticalValues cv = critical_values(f);
    double rmax = 0;
    for (const auto& v : cv.values) rmax = std::max(rmax, std::abs(v));
    const double ring = std::min(2.5 * rmax, 0.9 * std::abs(base));
    const double base_angle = std::arg(base);

    struct Target {
        double peel;
        cxd value;
    };
    std::vector<Target> targets;
    for (const auto& v : cv.values) targets.push_back({positive_angle(v), v});
    if (cv.ambient_nodal) {
        double best_angle = 0, best_gap = -1;
        for (int k = 0; k < 720; ++k) {
            const double th = 2 * M_PI * k / 720;
            double gap = 1e9;
            for (const auto& v : cv.values) {
                double d = std::abs(th - positive_angle(v));
                d = std::min(d, 2 * M_PI - d);
                gap = std::min(gap, d);
            }
            if (gap > best_gap) {
                best_gap = gap;
                best_angle = th;
            }
        }
        targets.push_back({best_angle, *cv.ambient_nodal});
    }
    std::sort(targets.begin(), targets.end(),
              [](const Target& a, const Target& b) { return a.peel < b.peel; });

    std::vector<TPath> paths;
    for (const auto& tg : targets) {
        TPath p;
        p.points.push_back(base);
        p.points.push_back(ring * std::polar(1.0, base_angle));
        if (tg.peel > 1e-12) append_arc(p, ring, base_angle, tg.peel);
        p.points.push_back(tg.value);
        paths.push_back(p);
    }
    return paths;
}

namespace {

// assign catalog indices 1..n to the base-fiber strands
std::vector<int> catalog_ranks(const std::vector<cxd>& base_roots) {
    std::vector<int> idx(base_roots.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return label_key(base_roots[a]) < label_key(base_roots[b]); });
    std::vector<int> rank(base_roots.size());
    for (size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r) + 1;
    return rank;
}

std::string match_arc_letter(const PolyFamily& f, int pa, int pb, int half_turns, int hole_winds) {
    const bool quartic = f.kind != FamilyKind::Cubic;
    if (hole_winds == 0) {
        if (quartic) {
            if (pa == 1 && pb == 2) return "B1";
            if (pa == 2 && pb == 3) return "B2";
            if (pa == 3 && pb == 4) return "B3";
            if (pa == 1 && pb == 4) return "B0";
        } else {
            if (pa == 1 && pb == 2) return "B1";
            if (pa == 2 && pb == 3) return "B2";
            if (pa == 1 && pb == 3) return "B0";
        }
    }
    throw ArcIdentificationError(
        "no catalog arc matches collision pair (" + std::to_string(pa) + "," + std::to_string(pb) +
        ") with " + std::to_string(half_turns) + " half-turns and " + std::to_string(hole_winds) +
        " hole windings");
}

}  // namespace

Factorization braid_factorization(const PolyFamily& f, const std::vector<TPath>& paths,
                                  const FactorizationOptions& opts) {
    const SurfaceSig annulus = (f.kind == FamilyKind::Cubic) ? annulus3() : annulus4();
    Factorization fact{annulus, {}};
    const std::vector<cxd> base_roots = roots(f.at(opts.base));
    const std::vector<int> rank = catalog_ranks(base_roots);
    const cxd nodal = f.ambient_nodal_value().value_or(cxd(1e9));

    // clearance scaled to the crowding of the special values
    double scale = std::abs(opts.base);
    {
        CriticalValues cv = critical_values(f);
        std::vector<cxd> special = cv.values;
        if (cv.ambient_nodal) special.push_back(*cv.ambient_nodal);
        for (size_t i = 0; i < special.size(); ++i)
            for (size_t j = i + 1; j < special.size(); ++j)
                scale = std::min(scale, std::abs(special[i] - special[j]));
    }
    const double clearance = std::min(opts.clearance, 0.1 * scale);

    for (const auto& path : paths) {
        if (path.points.empty() || std::abs(path.points.front() - opts.base) > 1e-9)
            throw UsageError("braid_factorization: every path must start at the base point");
        const cxd target = path.points.back();
        const bool is_nodal = std::abs(target - nodal) < 1e-9;

        // clip the final approach at the clearance radius
        TPath clipped = path;
        cxd& last = clipped.points.back();
        const cxd prev = clipped.points[clipped.points.size() - 2];
        const double seg = std::abs(last - prev);
        const double keep = std::max(seg - clearance, 0.0);
        last = prev + (last - prev) * (keep / seg);

        TrackOptions topts = opts.track;
        TrackResult res = track_roots(f, clipped, topts);

        if (is_nodal) {
            // the strand heading into the inner boundary identifies the
            // nodal circle; the letter kind is fixed by the family
            switch (f.kind) {
                case FamilyKind::Quartic:
                    fact.letters.push_back({"N1", make_word(annulus, {})});
                    break;
                case FamilyKind::Cubic:
                    fact.letters.push_back({"NG", make_word(annulus, {})});
                    break;
                case FamilyKind::Quartic2:
                    // three strands run into the inner boundary: the full
                    // twist about them plus two inner boundary twists
                    fact.letters.push_back({"N5", make_word(annulus, {})});
                    fact.letters.push_back({"TD1", make_word(annulus, {})});
                    fact.letters.push_back({"TD1", make_word(annulus, {})});
                    break;
            }
            continue;
        }

        // colliding pair = the closest two strands at the clipped endpoint
        int ca = -1, cb = -1;
        double best = 1e300;
        for (size_t i = 0; i < res.end_roots.size(); ++i)
            for (size_t j = i + 1; j < res.end_roots.size(); ++j) {
                const double d = std::abs(res.end_roots[i] - res.end_roots[j]);
                if (d < best) {
                    best = d;
                    ca = static_cast<int>(i);
                    cb = static_cast<int>(j);
                }
            }
        if (ca < 0)
            throw ArcIdentificationError("braid_factorization: no colliding pair detected");

        // discrete fingerprint: catalog labels of the pair plus windings
        int pa = rank[ca], pb = rank[cb];
        if (pa > pb) std::swap(pa, pb);
        // winding of the difference vector along the path (half-turns) and
        // the midpoint about the inner boundary (full turns)
        // re-track to accumulate continuous angles
        double dang = 0, mang = 0;
        {
            Tracker tr{f, topts, base_roots};
            cxd ud = tr.z[ca] - tr.z[cb];
            cxd um = 0.5 * (tr.z[ca] + tr.z[cb]);
            for (size_t k = 0; k + 1 < clipped.points.size(); ++k) {
                const cxd a = clipped.points[k], b = clipped.points[k + 1];
                const double s_len = std::abs(b - a);
                if (s_len == 0) continue;
                double s = 0;
                while (s < s_len) {
                    double h = std::min({topts.max_step, 0.2 * tr.min_separation(), s_len - s});
                    int halv = 0;
                    cxd t = a + (b - a) * (s / s_len);
                    while (!tr.step(t, (b - a) * (h / s_len))) {
                        h *= 0.5;
                        if (++halv > 40) throw StepCollapseError("fingerprint tracking collapsed");
                    }
                    s += h;
                    const cxd nud = tr.z[ca] - tr.z[cb];
                    const cxd num = 0.5 * (tr.z[ca] + tr.z[cb]);
                    dang += std::arg(nud / ud);
                    mang += std::arg(num / um);
                    ud = nud;
                    um = num;
                }
            }
        }
        const int half_turns = static_cast<int>(std::lround(dang / M_PI));
        const int hole_winds = static_cast<int>(std::lround(mang / (2 * M_PI)));
        fact.letters.push_back(
            {match_arc_letter(f, pa, pb, half_turns, hole_winds), make_word(annulus, {})});
    }
    return fact;
}

int bennequin_genus(const std::vector<std::pair<int, int>>& bands, int strands) {
    if (strands <= 0) throw UsageError("bennequin_genus: need at least one strand");
    std::vector<int> perm(strands);
    for (int i = 0; i < strands; ++i) perm[i] = i;
    for (const auto& [a, b] : bands) {
        if (a < 0 || b < 0 || a >= strands || b >= strands || a == b)
            throw UsageError("bennequin_genus: bad band");
        std::swap(perm[a], perm[b]);
    }
    std::vector<bool> seen(strands, false);
    int components = 0;
    for (int i = 0; i < strands; ++i) {
        if (seen[i]) continue;
        ++components;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
        }
    }
    const int chi = strands - static_cast<int>(bands.size());
    const int twice_g = 2 - components - chi;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw ComputationError("bennequin_genus: band data is not a quasipositive surface");
    return twice_g / 2;
}

}  // namespace fibercalc
