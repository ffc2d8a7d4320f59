#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibercalc/rational.hpp"

namespace fibercalc {

// Weighted plumbing graph for a resolution: vertices carry Euler number,
// genus and multiplicity; arrows mark noncompact components of the central
// fiber.  Normal crossings only: no self-loops.
struct PVertex {
    int id = 0;
    int64_t e = 0;   // self-intersection
    int genus = 0;
    int64_t m = 1;   // multiplicity, positive
};

struct PArrow {
    int at = 0;
    int64_t m = 1;
};

struct PlumbingGraph {
    std::vector<PVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered id pairs, multiset
    std::vector<PArrow> arrows;

    const PVertex& vertex(int id) const;
    bool has_vertex(int id) const;
    void validate() const;  // ids unique, no self-loops, multiplicities positive
};

using IMat = std::vector<std::vector<int64_t>>;

// diagonal e_v, off-diagonal = number of edges between the pair; arrows excluded
IMat intersection_matrix(const PlumbingGraph& g);

enum class Definiteness { NegativeDefinite, NegativeSemidefinite, Indefinite };

struct DefinitenessReport {
    Definiteness kind = Definiteness::NegativeDefinite;
    int corank = 0;
    friend bool operator==(const DefinitenessReport&, const DefinitenessReport&) = default;
};

// exact (rational congruence diagonalization, no floating point)
DefinitenessReport is_negative_definite(const IMat& m);
DefinitenessReport is_negative_definite(const PlumbingGraph& g);

// b2 = vertex count; b1 = 2*total genus + cycle rank of the compact graph
std::pair<int64_t, int64_t> betti(const PlumbingGraph& g);

// numerically-trivial central fiber: m_v e_v + sum of neighbor
// multiplicities (edges and arrows) = 0 at every vertex
struct FiberCondition {
    bool holds = true;
    std::vector<std::pair<int, int64_t>> residuals;  // (vertex id, residual)
};
FiberCondition fiber_condition(const PlumbingGraph& g);

PlumbingGraph blow_down(const PlumbingGraph& g, int vertex_id);
PlumbingGraph cap_arrows(const PlumbingGraph& g);

// Hirzebruch-Jung string of n/q: euler numbers [-a1, ..., -ak] with
// n/q = a1 - 1/(a2 - 1/(...)), all a_i >= 2.
std::vector<int64_t> hj_string(int64_t n, int64_t q);

// H_1 of the plumbed 3-manifold boundary: free rank and torsion order
// (0 denotes infinite? no: torsion order 1 = trivial torsion).
struct BoundaryH1 {
    int64_t free_rank = 0;
    int64_t torsion_order = 1;
    friend bool operator==(const BoundaryH1&, const BoundaryH1&) = default;
};
BoundaryH1 boundary_h1(const PlumbingGraph& g);

int64_t det_int(IMat m);  // exact integer determinant (Bareiss)

}  // namespace fibercalc
