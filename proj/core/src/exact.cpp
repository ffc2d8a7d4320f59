#include "fibercalc/exact.hpp"

#include <cstdlib>

#include "fibercalc/errors.hpp"

namespace fibercalc {

AnnulusModel::AnnulusModel(int marked) : gm_(marked) {}

ExactElement AnnulusModel::identity() const {
    ExactElement e;
    const int n = gm_.generator_count();
    e.t0.resize(n);
    e.t1.resize(n);
    for (int g = 0; g < n; ++g) e.t0[g] = e.t1[g] = GWord::gen(g);
    return e;
}

ExactElement AnnulusModel::half_twist(int i, int sign) const {
    if (i < 0 || i + 1 >= gm_.marked())
        throw UsageError("half_twist: no adjacent pair at index " + std::to_string(i));
    ExactElement e = identity();
    const int a = i, b = i + 1;
    if (sign > 0) {
        // a -> a b a^{-1}, b -> a
        e.t0[a] = reduced(gm_, GWord{{{a, 1}, {b, 1}, {a, -1}}});
        e.t0[b] = GWord::gen(a);
    } else {
        // a -> b, b -> b^{-1} a b
        e.t0[a] = GWord::gen(b);
        e.t0[b] = reduced(gm_, GWord{{{b, -1}, {a, 1}, {b, 1}}});
    }
    e.t1 = e.t0;
    return e;
}

ExactElement AnnulusModel::run_twist(int first, int sign, TwistHalf half) const {
    const int m = gm_.marked();
    if (first < 0 || first > m) throw UsageError("run_twist: bad start index");
    const int enclosed = (m - first) + 1;  // marked points in the run plus the hole
    if (half != TwistHalf::Full && enclosed % 2 != 0)
        throw UsageError("run_twist: circle has connected preimage, no sheet halves");

    GWord c;
    for (int g = first; g < m; ++g) c.ls.push_back({g, 1});
    c.ls.push_back({gm_.hole(), 1});
    c = reduced(gm_, c);
    const GWord ci = ginv(gm_, c);

    ExactElement e = identity();
    for (int g = first; g <= gm_.hole(); ++g) {
        const GWord gl = GWord::gen(g);
        switch (half) {
            case TwistHalf::Full:
                e.t0[g] = sign > 0 ? gconj(gm_, gl, ci) : gconj(gm_, gl, c);
                e.t1[g] = e.t0[g];
                break;
            case TwistHalf::Sheet0:
                if (sign > 0) {
                    e.t0[g] = gmul(gm_, c, gl);
                    e.t1[g] = gmul(gm_, gl, ci);
                } else {
                    e.t0[g] = gmul(gm_, ci, gl);
                    e.t1[g] = gmul(gm_, gl, c);
                }
                break;
            case TwistHalf::Sheet1:
                if (sign > 0) {
                    e.t0[g] = gmul(gm_, gl, ci);
                    e.t1[g] = gmul(gm_, c, gl);
                } else {
                    e.t0[g] = gmul(gm_, gl, c);
                    e.t1[g] = gmul(gm_, ci, gl);
                }
                break;
        }
    }
    // The reference arc crosses the twisting annulus once, inbound, on the
    // even sheet; only the Full twist and the Sheet0 lift move it.
    if (half != TwistHalf::Sheet1) e.arc = sign > 0 ? c : ci;
    return e;
}

ExactElement AnnulusModel::conjugated(const ExactElement& base, const ExactElement& g,
                                      const ExactElement& g_inv) const {
    return compose(compose(g_inv, base), g);
}

GWord AnnulusModel::apply(const ExactElement& e, const GWord& w, int sheet) const {
    GWord out;
    int s = sheet & 1;
    const GWord red = reduced(gm_, w);
    for (const auto& l : red.ls) {
        const int steps = static_cast<int>(std::llabs(l.exp));
        const bool pos = l.exp > 0;
        for (int k = 0; k < steps; ++k) {
            GWord img;
            if (pos) {
                img = (s == 0 ? e.t0 : e.t1)[l.gen];
            } else {
                // T_s[g^{-1}] = (T_{s^1}[g])^{-1}; every generator is odd.
                img = ginv(gm_, (s == 1 ? e.t0 : e.t1)[l.gen]);
            }
            out.ls.insert(out.ls.end(), img.ls.begin(), img.ls.end());
            s ^= 1;
        }
    }
    return reduced(gm_, out);
}

ExactElement AnnulusModel::compose(const ExactElement& a, const ExactElement& b) const {
    ExactElement r;
    const int n = gm_.generator_count();
    r.t0.resize(n);
    r.t1.resize(n);
    for (int g = 0; g < n; ++g) {
        r.t0[g] = apply(b, a.t0[g], 0);
        r.t1[g] = apply(b, a.t1[g], 1);
    }
    r.arc = gmul(gm_, apply(b, a.arc, 0), b.arc);
    return r;
}

bool AnnulusModel::is_identity(const ExactElement& e) const { return e == identity(); }

std::string AnnulusModel::fingerprint(const ExactElement& e) const {
    std::string s;
    const int n = gm_.generator_count();
    for (int g = 0; g < n; ++g) {
        s += to_string(gm_, e.t0[g]);
        s += '|';
    }
    for (int g = 0; g < n; ++g) {
        s += to_string(gm_, e.t1[g]);
        s += '|';
    }
    s += to_string(gm_, e.arc);
    return s;
}

bool AnnulusModel::coherent(const ExactElement& e) const {
    const int n = gm_.generator_count();
    if (static_cast<int>(e.t0.size()) != n || static_cast<int>(e.t1.size()) != n) return false;
    for (int g = 0; g < n; ++g) {
        if (parity(gm_, e.t0[g]) != 1 || parity(gm_, e.t1[g]) != 1) return false;
        // x^2 = 1 forces T_{s+1}[x] = (T_s[x])^{-1}
        if (gm_.involutive(g) && !(ginv(gm_, e.t0[g]) == e.t1[g])) return false;
    }
    return true;
}

std::vector<int> AnnulusModel::marked_permutation(const ExactElement& e) const {
    std::vector<int> perm(gm_.marked(), -1);
    for (int g = 0; g < gm_.marked(); ++g) {
        // the image word of a marked loop is w x_j w^{-1}: x_j is the unique
        // marked generator with odd letter count
        std::vector<int> cnt(gm_.marked(), 0);
        for (const auto& l : e.t0[g].ls)
            if (gm_.involutive(l.gen)) cnt[l.gen] += static_cast<int>(l.exp);
        int target = -1;
        for (int j = 0; j < gm_.marked(); ++j)
            if (cnt[j] % 2 != 0) {
                if (target >= 0) throw ComputationError("marked_permutation: malformed image");
                target = j;
            }
        if (target < 0) throw ComputationError("marked_permutation: no target point");
        perm[g] = target;
    }
    return perm;
}

const AnnulusModel& annulus_model_4() {
    static const AnnulusModel m(4);
    return m;
}

const AnnulusModel& annulus_model_3() {
    static const AnnulusModel m(3);
    return m;
}

}  // namespace fibercalc
