#include "fibercalc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fibercalc/errors.hpp"

namespace fibercalc {

const PVertex& PlumbingGraph::vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw UsageError("plumbing: no vertex with id " + std::to_string(id));
}

bool PlumbingGraph::has_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return true;
    return false;
}

void PlumbingGraph::validate() const {
    std::set<int> ids;
    for (const auto& v : vertices) {
        if (!ids.insert(v.id).second)
            throw UsageError("plumbing: duplicate vertex id " + std::to_string(v.id));
        if (v.m <= 0) throw UsageError("plumbing: multiplicities must be positive");
        if (v.genus < 0) throw UsageError("plumbing: negative genus");
    }
    for (const auto& [a, b] : edges) {
        if (a == b) throw UsageError("plumbing: self-loops are not normal crossings");
        if (!ids.count(a) || !ids.count(b)) throw UsageError("plumbing: edge to missing vertex");
    }
    for (const auto& ar : arrows) {
        if (!ids.count(ar.at)) throw UsageError("plumbing: arrow at missing vertex");
        if (ar.m <= 0) throw UsageError("plumbing: arrow multiplicities must be positive");
    }
}

IMat intersection_matrix(const PlumbingGraph& g) {
    g.validate();
    const int n = static_cast<int>(g.vertices.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[g.vertices[i].id] = i;
    IMat m(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = g.vertices[i].e;
    for (const auto& [a, b] : g.edges) {
        m[idx.at(a)][idx.at(b)] += 1;
        m[idx.at(b)][idx.at(a)] += 1;
    }
    return m;
}

DefinitenessReport is_negative_definite(const IMat& m0) {
    // congruence diagonalization over Q
    const int n = static_cast<int>(m0.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(m0[i][j]);

    int pos = 0, neg = 0, zero = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k].num == 0) {
            // find a later index with nonzero diagonal, else mix one in
            int p = -1;
            for (int j = k + 1; j < n; ++j)
                if (m[j][j].num != 0) {
                    p = j;
                    break;
                }
            if (p >= 0) {
                std::swap(m[k], m[p]);
                for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][p]);
            } else {
                int j = -1;
                for (int c = k + 1; c < n; ++c)
                    if (m[k][c].num != 0) {
                        j = c;
                        break;
                    }
                if (j < 0) {
                    ++zero;
                    continue;
                }
                // congruence: row/col k += row/col j makes the diagonal 2*m[k][j]
                for (int c = 0; c < n; ++c) m[k][c] = m[k][c] + m[j][c];
                for (int r = 0; r < n; ++r) m[r][k] = m[r][k] + m[r][j];
            }
        }
        const Rational piv = m[k][k];
        if (piv.num > 0)
            ++pos;
        else if (piv.num < 0)
            ++neg;
        else {
            ++zero;
            continue;
        }
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k].num == 0) continue;
            const Rational f = m[r][k] / piv;
            for (int c = 0; c < n; ++c) m[r][c] = m[r][c] - f * m[k][c];
        }
        for (int c = k + 1; c < n; ++c) {
            if (m[k][c].num == 0) continue;
            const Rational f = m[k][c] / piv;
            for (int r = 0; r < n; ++r) m[r][c] = m[r][c] - f * m[r][k];
        }
    }
    DefinitenessReport rep;
    rep.corank = zero;
    if (pos > 0)
        rep.kind = Definiteness::Indefinite;
    else if (zero > 0)
        rep.kind = Definiteness::NegativeSemidefinite;
    else
        rep.kind = Definiteness::NegativeDefinite;
    return rep;
}

DefinitenessReport is_negative_definite(const PlumbingGraph& g) {
    return is_negative_definite(intersection_matrix(g));
}

std::pair<int64_t, int64_t> betti(const PlumbingGraph& g) {
    g.validate();
    int64_t genus_sum = 0;
    for (const auto& v : g.vertices) genus_sum += v.genus;
    // cycle rank of the multigraph on compact vertices
    std::map<int, int> comp;
    int nc = 0;
    for (const auto& v : g.vertices) comp[v.id] = nc++;
    // union-find
    std::map<int, int> parent;
    for (const auto& v : g.vertices) parent[v.id] = v.id;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(g.vertices.size());
    for (const auto& [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    const int64_t cycles =
        static_cast<int64_t>(g.edges.size()) - static_cast<int64_t>(g.vertices.size()) + components;
    const int64_t b1 = 2 * genus_sum + cycles;
    const int64_t b2 = static_cast<int64_t>(g.vertices.size());
    return {b1, b2};
}

FiberCondition fiber_condition(const PlumbingGraph& g) {
    g.validate();
    FiberCondition fc;
    for (const auto& v : g.vertices) {
        int64_t res = v.m * v.e;
        for (const auto& [a, b] : g.edges) {
            if (a == v.id) res += g.vertex(b).m;
            if (b == v.id) res += g.vertex(a).m;
        }
        for (const auto& ar : g.arrows)
            if (ar.at == v.id) res += ar.m;
        fc.residuals.emplace_back(v.id, res);
        if (res != 0) fc.holds = false;
    }
    return fc;
}

PlumbingGraph blow_down(const PlumbingGraph& g, int vertex_id) {
    g.validate();
    const PVertex& v = g.vertex(vertex_id);
    if (v.e != -1 || v.genus != 0)
        throw ComputationError("blow_down: vertex " + std::to_string(vertex_id) +
                               " is not a (-1) rational curve");
    std::vector<int> nbr;  // vertex neighbors, with multiplicity of edges
    std::vector<int> arrow_idx;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [a, b] = g.edges[i];
        if (a == vertex_id) nbr.push_back(b);
        else if (b == vertex_id) nbr.push_back(a);
    }
    for (size_t i = 0; i < g.arrows.size(); ++i)
        if (g.arrows[i].at == vertex_id) arrow_idx.push_back(static_cast<int>(i));

    const int valence = static_cast<int>(nbr.size() + arrow_idx.size());
    if (valence >= 3)
        throw ComputationError(
            "blow_down: valence >= 3 would create a non-normal-crossing configuration");
    if (nbr.size() == 2 && nbr[0] == nbr[1])
        throw ComputationError("blow_down: double edge would create a self-crossing");
    if (nbr.empty() && arrow_idx.size() == 2)
        throw ComputationError("blow_down: two arrows would cross with no curve left");
    if (nbr.empty() && arrow_idx.size() == 1)
        throw ComputationError("blow_down: dangling arrow has no vertex to attach to");

    PlumbingGraph out;
    for (const auto& w : g.vertices) {
        if (w.id == vertex_id) continue;
        PVertex nw = w;
        for (int u : nbr)
            if (u == w.id) nw.e += 1;
        out.vertices.push_back(nw);
    }
    for (const auto& [a, b] : g.edges)
        if (a != vertex_id && b != vertex_id) out.edges.emplace_back(a, b);
    for (size_t i = 0; i < g.arrows.size(); ++i)
        if (g.arrows[i].at != vertex_id) out.arrows.push_back(g.arrows[i]);

    if (nbr.size() == 2) {
        out.edges.emplace_back(nbr[0], nbr[1]);
    } else if (nbr.size() == 1 && arrow_idx.size() == 1) {
        out.arrows.push_back({nbr[0], g.arrows[arrow_idx[0]].m});
    }
    out.validate();
    return out;
}

PlumbingGraph cap_arrows(const PlumbingGraph& g) {
    PlumbingGraph out = g;
    out.arrows.clear();
    return out;
}

std::vector<int64_t> hj_string(int64_t n, int64_t q) {
    if (n <= 0 || q <= 0 || q >= n) throw UsageError("hj_string: need 0 < q < n");
    if (std::gcd(n, q) != 1) throw UsageError("hj_string: n and q must be coprime");
    std::vector<int64_t> out;
    while (q > 0) {
        const int64_t a = (n + q - 1) / q;  // ceil(n/q)
        out.push_back(-a);
        const int64_t r = a * q - n;
        n = q;
        q = r;
    }
    return out;
}

int64_t det_int(IMat m) {
    // Bareiss fraction-free elimination
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BoundaryH1 boundary_h1(const PlumbingGraph& g) {
    if (!g.arrows.empty())
        throw UsageError("boundary_h1: cap the arrows first (plumbed boundary needs a compact graph)");
    const auto [b1_graph, _] = betti(g);
    IMat q = intersection_matrix(g);
    const auto rep = is_negative_definite(q);
    (void)rep;
    // free rank = 2*genus + cycle rank + corank(Q); torsion = |det| of the
    // regular part (product of nonzero Smith divisors)
    const int n = static_cast<int>(q.size());
    // integer Smith-style elimination to extract nonzero elementary divisors
    // (we only need the product = |det of regular part|)
    // compute rank and the gcd-reduced product via fraction-free elimination
    // over the integers: product of nonzero SNF divisors = |largest
    // determinantal divisor of rank r| -- for symmetric q take any maximal
    // nonsingular minor determinant; torsion order = |det| of it divided by
    // nothing (SNF product equals gcd of all r x r minors times unit...).
    // For plumbing matrices the regular part determinant is what we need:
    // eliminate null directions over Q, keep an integer basis of the image.
    // Simpler: torsion order = product of nonzero SNF entries of q.
    IMat a = q;
    int64_t torsion = 1;
    int rank = 0;
    // Smith normal form (small matrices)
    const int rows = n, cols = n;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // find pivot: smallest nonzero |entry| in submatrix
        int pi = -1, pj = -1;
        int64_t best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j) {
                const int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(a[pi], a[r]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
        bool clean = true;
        do {
            clean = true;
            for (int i = r + 1; i < rows; ++i) {
                const int64_t f = a[i][c] / a[r][c];
                if (f != 0)
                    for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
                if (a[i][c] != 0) {
                    std::swap(a[i], a[r]);
                    clean = false;
                }
            }
            for (int j = c + 1; j < cols; ++j) {
                const int64_t f = a[r][j] / a[r][c];
                if (f != 0)
                    for (int i = r; i < rows; ++i) a[i][j] -= f * a[i][c];
                if (a[r][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(a[i][j], a[i][c]);
                    clean = false;
                }
            }
        } while (!clean);
        torsion *= (a[r][c] < 0 ? -a[r][c] : a[r][c]);
        ++rank;
        ++r;
        ++c;
    }
    BoundaryH1 out;
    out.free_rank = b1_graph + (n - rank);
    out.torsion_order = torsion;
    return out;
}

}  // namespace fibercalc
