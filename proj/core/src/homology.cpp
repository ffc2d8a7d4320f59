#include "fibercalc/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fibercalc/errors.hpp"

namespace fibercalc {

namespace {

int coord_dim(const AnnulusModel& m) { return m.marked() + 1; }

HMat h_identity_mat(int n) {
    HMat I(n, HVec(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

// Solve M * x = b over the rationals, requiring an integral solution.
// Small dense systems only.
bool solve_int(HMat M, HVec b, HVec& x) {
    const int n = static_cast<int>(M.size());
    const int m = static_cast<int>(M[0].size());
    std::vector<int> piv_col;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (M[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        std::swap(b[p], b[row]);
        for (int r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            const int64_t a = M[row][col], c = M[r][col];
            const int64_t g = std::gcd(std::llabs(a), std::llabs(c));
            const int64_t fa = a / g, fc = c / g;
            for (int k = 0; k < m; ++k) M[r][k] = M[r][k] * fa - M[row][k] * fc;
            b[r] = b[r] * fa - b[row] * fc;
        }
        piv_col.push_back(col);
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (b[r] != 0) return false;
    x.assign(m, 0);
    for (int r = 0; r < row; ++r) {
        const int c = piv_col[r];
        if (M[r][c] == 0 || b[r] % M[r][c] != 0) return false;
        x[c] = b[r] / M[r][c];
    }
    return true;
}

}  // namespace

HVec cover_ab_coords(const AnnulusModel& m, const GWord& w) {
    const GroupModel& gm = m.group();
    const int dim = coord_dim(m);
    HVec v(dim, 0);
    int s = 0;
    const GWord red = reduced(gm, w);
    for (const auto& l : red.ls) {
        const int steps = static_cast<int>(std::llabs(l.exp));
        const bool pos = l.exp > 0;
        for (int k = 0; k < steps; ++k) {
            if (pos) {
                if (l.gen == gm.hole())
                    v[dim - 2 + s] += 1;
                else if (l.gen >= 1)
                    v[l.gen - 1] += (s == 0 ? 1 : -1);
            } else {
                const int t = s ^ 1;  // sheet in which the positive letter runs
                if (l.gen == gm.hole())
                    v[dim - 2 + t] -= 1;
                else if (l.gen >= 1)
                    v[l.gen - 1] -= (t == 0 ? 1 : -1);
            }
            s ^= 1;
        }
    }
    return v;
}

HMat cover_h1_matrix(const AnnulusModel& m, const ExactElement& e) {
    const GroupModel& gm = m.group();
    const int dim = coord_dim(m);
    // basis words: u_g = x0 x_g (g = 1..marked-1) with coordinates -e_g,
    // w0 = y x0 and w1 = x0 y with coordinates e_{dim-2}, e_{dim-1}.
    std::vector<GWord> basis;
    for (int g = 1; g < gm.marked(); ++g) basis.push_back(GWord{{{0, 1}, {g, 1}}});
    basis.push_back(GWord{{{gm.hole(), 1}, {0, 1}}});
    basis.push_back(GWord{{{0, 1}, {gm.hole(), 1}}});

    HMat rows(dim, HVec(dim, 0));
    for (int j = 0; j < dim; ++j) {
        HVec img = cover_ab_coords(m, m.apply(e, basis[j], 0));
        const int64_t sign = (j < gm.marked() - 1) ? -1 : 1;
        for (int k = 0; k < dim; ++k) rows[j][k] = sign * img[k];
    }
    return rows;
}

namespace {

const HMat& frozen_basis(const SurfaceSig& cover_sig);

struct CoverHomology {
    HMat basis;
    HMat pairing;
    std::map<std::string, HVec> classes;
};

HVec to_fixed_basis(const HMat& basis, const HVec& raw) {
    HVec x;
    if (!solve_int(basis, raw, x))
        throw ComputationError("homology: class not integral in the fixed basis");
    return x;
}

// M - I must be a rank-one integer outer product f * c^T (row convention).
bool transvection_class_raw(const HMat& M, HVec& cls, HVec& func) {
    const int n = static_cast<int>(M.size());
    HMat D(n, HVec(n, 0));
    bool zero = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            D[i][j] = M[i][j] - (i == j ? 1 : 0);
            if (D[i][j] != 0) zero = false;
        }
    if (zero) {
        cls.assign(n, 0);
        func.assign(n, 0);
        return true;
    }
    int i0 = -1, j0 = -1;
    for (int i = 0; i < n && i0 < 0; ++i)
        for (int j = 0; j < n; ++j)
            if (D[i][j] != 0) {
                i0 = i;
                j0 = j;
                break;
            }
    HVec c(D[i0].begin(), D[i0].end());
    int64_t g = 0;
    for (auto v : c) g = std::gcd(g, std::llabs(v));
    if (g == 0) return false;
    for (auto& v : c) v /= g;
    if (c[j0] == 0) return false;
    HVec f(n, 0);
    for (int i = 0; i < n; ++i) {
        if (D[i][j0] % c[j0] != 0) return false;
        f[i] = D[i][j0] / c[j0];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (D[i][j] != f[i] * c[j]) return false;
    cls = c;
    func = f;
    return true;
}

CoverHomology build_cover_homology(const Catalog& cat) {
    CoverHomology ch;
    ch.basis = frozen_basis(cat.cover);
    const int n = static_cast<int>(ch.basis.size());

    std::vector<std::pair<HVec, HVec>> pairs;  // (raw class, raw functional)
    std::map<std::string, HVec> raw_classes;
    for (const auto& [name, letter] : cat.cover_letters) {
        HMat M = cover_h1_matrix(cat.model, letter.elem);
        HVec cls, fn;
        if (!transvection_class_raw(M, cls, fn))
            throw ComputationError("homology: generator " + name + " is not a transvection");
        if (std::all_of(cls.begin(), cls.end(), [](int64_t v) { return v == 0; })) continue;
        raw_classes[name] = cls;
        pairs.emplace_back(cls, fn);
    }

    // inner-boundary class: the lift of y^2
    GWord y2{{{cat.model.group().hole(), 2}}};
    HVec d_raw = cover_ab_coords(cat.model, y2);

    // Solve J * c = f for the raw antisymmetric pairing with J * d = 0.
    const int nun = n * n;
    HMat A;
    HVec b;
    for (const auto& [c, f] : pairs) {
        for (int i = 0; i < n; ++i) {
            HVec row(nun, 0);
            for (int j = 0; j < n; ++j) row[i * n + j] = c[j];
            A.push_back(row);
            b.push_back(f[i]);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            HVec row(nun, 0);
            row[i * n + j] += 1;
            row[j * n + i] += 1;
            A.push_back(row);
            b.push_back(0);
        }
    for (int i = 0; i < n; ++i) {
        HVec row(nun, 0);
        for (int j = 0; j < n; ++j) row[i * n + j] = d_raw[j];
        A.push_back(row);
        b.push_back(0);
    }
    HVec jflat;
    if (!solve_int(A, b, jflat)) throw ComputationError("homology: pairing underdetermined");
    HMat Jraw(n, HVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Jraw[i][j] = jflat[i * n + j];

    // Transvection classes determine c only up to sign; both signs give the
    // same matrix, so fix the representative by first nonzero coordinate.
    for (auto& [name, raw] : raw_classes) {
        HVec v = to_fixed_basis(ch.basis, raw);
        for (auto x : v) {
            if (x > 0) break;
            if (x < 0) {
                for (auto& y : v) y = -y;
                break;
            }
        }
        ch.classes[name] = v;
    }
    HVec d_fixed = to_fixed_basis(ch.basis, d_raw);
    if (cat.cover == sigma22()) {
        ch.classes["D1"] = d_fixed;
        HVec d2 = d_fixed;
        for (auto& v : d2) v = -v;
        ch.classes["D2"] = d2;
    } else {
        ch.classes["DG1"] = d_fixed;
        const GroupModel& gm = cat.model.group();
        GWord D3;
        for (int g = 0; g < cat.model.marked(); ++g) D3.ls.push_back({g, 1});
        D3.ls.push_back({gm.hole(), 1});
        ch.classes["DG2"] = to_fixed_basis(ch.basis, cover_ab_coords(cat.model, D3));
        GWord x0 = GWord::gen(0);
        GWord D3c = gmul(gm, gmul(gm, x0, D3), x0);
        ch.classes["DG3"] = to_fixed_basis(ch.basis, cover_ab_coords(cat.model, D3c));
    }

    HMat Pt(n, HVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Pt[i][j] = ch.basis[j][i];
    ch.pairing = hmul(hmul(Pt, Jraw), ch.basis);
    return ch;
}

const CoverHomology& cover_homology(const SurfaceSig& surf) {
    static const CoverHomology g2 = build_cover_homology(catalog_genus2());
    static const CoverHomology g1 = build_cover_homology(catalog_genus1());
    if (surf == sigma22() || surf == annulus4()) return g2;
    if (surf == sigma13() || surf == annulus3()) return g1;
    throw UsageError("no homology backend for " + to_string(surf));
}

}  // namespace

int h1_rank(const SurfaceSig& surf) { return surf.homology_rank(); }

const HMat& intersection_pairing(const SurfaceSig& surf) { return cover_homology(surf).pairing; }

const HVec& h1_class(const SurfaceSig& surf, const std::string& gen) {
    const auto& ch = cover_homology(surf);
    auto it = ch.classes.find(gen);
    if (it == ch.classes.end())
        throw UnknownGeneratorError("no homology class for generator " + gen);
    return it->second;
}

HMat transvection(const SurfaceSig& surf, const HVec& c) {
    const HMat& J = intersection_pairing(surf);
    const int n = static_cast<int>(J.size());
    HMat M = h_identity_mat(n);
    for (int i = 0; i < n; ++i) {
        int64_t f = 0;
        for (int k = 0; k < n; ++k) f += J[i][k] * c[k];
        for (int j = 0; j < n; ++j) M[i][j] += f * c[j];
    }
    return M;
}

HomologyRep homology_eval(const Word& w) {
    const SurfaceSig& surf = w.surface;
    const auto& ch = cover_homology(surf);
    const int n = static_cast<int>(ch.basis.size());
    HMat M = h_identity_mat(n);
    for (const auto& l : w.letters) {
        const HVec& c = h1_class(surf, l.gen);
        const HMat& J = intersection_pairing(surf);
        HMat T = h_identity_mat(n);
        const int64_t sgn = l.exp > 0 ? 1 : -1;
        for (int i = 0; i < n; ++i) {
            int64_t f = 0;
            for (int k = 0; k < n; ++k) f += J[i][k] * c[k];
            for (int j = 0; j < n; ++j) T[i][j] += sgn * f * c[j];
        }
        for (int k = 0; k < std::abs(l.exp); ++k) M = hmul(M, T);
    }
    return HomologyRep{M};
}

HomologyRep homology_identity(const SurfaceSig& surf) {
    return HomologyRep{h_identity_mat(h1_rank(surf))};
}

bool preserves_pairing(const SurfaceSig& surf, const HMat& m) {
    const HMat& J = intersection_pairing(surf);
    const int n = static_cast<int>(J.size());
    HMat Mt(n, HVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Mt[i][j] = m[j][i];
    return hmul(hmul(m, J), Mt) == J;
}

HMat hmul(const HMat& a, const HMat& b) {
    const int n = static_cast<int>(a.size());
    const int p = static_cast<int>(b[0].size());
    const int q = static_cast<int>(b.size());
    HMat r(n, HVec(p, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

HVec happly(const HVec& x, const HMat& m) {
    const int n = static_cast<int>(m.size());
    const int p = static_cast<int>(m[0].size());
    HVec r(p, 0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < p; ++j) r[j] += x[i] * m[i][j];
    }
    return r;
}

bool is_h_identity(const HMat& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// Fixed-basis columns in raw abelianization coordinates: a symplectic basis
// (a1, b1, a2, b2) completed by the inner-boundary class d for the genus-2
// cover, (a1, b1, d1, d2) for the genus-1 cover.  Pinned from the
// derivation scan; re-validated in tests/test_homology.cpp.
const HMat& frozen_basis(const SurfaceSig& cover_sig) {
    // columns: a1, b1, a2, b2, d  (genus 2) / a1, b1, d1, d2 (genus 1)
    static const HMat g2 = {{0, -1, 1, 0, 0},
                            {0, 0, -1, -1, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1},
                            {1, 0, -1, 0, 1}};
    static const HMat g1 = {{1, 1, 0, -1}, {0, -1, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}};
    if (cover_sig == sigma22()) return g2;
    return g1;
}

}  // namespace

const HMat& cover_basis(const SurfaceSig& surf) {
    if (surf == sigma22() || surf == annulus4()) return frozen_basis(sigma22());
    return frozen_basis(sigma13());
}

}  // namespace fibercalc
