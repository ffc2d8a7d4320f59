#include <doctest.h>

#include <numeric>
#include <random>

#include "fibercalc/errors.hpp"
#include "fibercalc/plumbing.hpp"
#include "fibercalc/rational.hpp"

using namespace fibercalc;

namespace {

PlumbingGraph chain(const std::vector<int64_t>& eulers) {
    PlumbingGraph g;
    for (size_t i = 0; i < eulers.size(); ++i)
        g.vertices.push_back({static_cast<int>(i), eulers[i], 0, 1});
    for (size_t i = 0; i + 1 < eulers.size(); ++i)
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return g;
}

PlumbingGraph genus1_fiber() {
    PlumbingGraph g;
    g.vertices.push_back({0, -3, 1, 1});
    g.arrows = {{0, 1}, {0, 1}, {0, 1}};
    return g;
}

}  // namespace

TEST_CASE("intersection matrices") {
    PlumbingGraph single;
    single.vertices.push_back({0, -3, 1, 1});
    CHECK(intersection_matrix(single) == IMat{{-3}});

    CHECK(intersection_matrix(chain({-2, -2})) == IMat{{-2, 1}, {1, -2}});

    PlumbingGraph empty;
    CHECK(intersection_matrix(empty).empty());

    // arrows never enter the matrix
    CHECK(intersection_matrix(genus1_fiber()) == IMat{{-3}});
}

TEST_CASE("definiteness classification is exact") {
    CHECK(is_negative_definite(IMat{{-3}}).kind == Definiteness::NegativeDefinite);
    CHECK(is_negative_definite(IMat{{-2, 1}, {1, -2}}).kind == Definiteness::NegativeDefinite);
    const auto zero = is_negative_definite(IMat{{0}});
    CHECK(zero.kind == Definiteness::NegativeSemidefinite);
    CHECK(zero.corank == 1);
    CHECK(is_negative_definite(IMat{{1}}).kind == Definiteness::Indefinite);
    CHECK(is_negative_definite(IMat{{-2, 1}, {1, 0}}).kind == Definiteness::Indefinite);
    // a null direction off the diagonal
    CHECK(is_negative_definite(IMat{{-1, 1}, {1, -1}}).kind ==
          Definiteness::NegativeSemidefinite);
}

TEST_CASE("Betti numbers of the plumbed 4-manifold") {
    const auto [b1, b2] = betti(genus1_fiber());
    CHECK(b1 == 2);
    CHECK(b2 == 1);

    PlumbingGraph single;
    single.vertices.push_back({0, -1, 0, 1});
    const auto [c1, c2] = betti(single);
    CHECK(c1 == 0);
    CHECK(c2 == 1);

    // a cycle contributes one to b1
    PlumbingGraph tri = chain({-2, -2, -2});
    tri.edges.emplace_back(2, 0);
    const auto [d1, d2] = betti(tri);
    CHECK(d1 == 1);
    CHECK(d2 == 3);
}

TEST_CASE("central fiber multiplicity condition") {
    CHECK(fiber_condition(genus1_fiber()).holds);

    PlumbingGraph plane;
    plane.vertices.push_back({0, -1, 0, 3});
    plane.arrows = {{0, 1}, {0, 1}, {0, 1}};
    CHECK(fiber_condition(plane).holds);

    PlumbingGraph bad;
    bad.vertices.push_back({0, -1, 0, 1});
    const auto fc = fiber_condition(bad);
    CHECK_FALSE(fc.holds);
    REQUIRE(fc.residuals.size() == 1);
    CHECK(fc.residuals[0].second == -1);

    // capping the arrows breaks the condition
    CHECK_FALSE(fiber_condition(cap_arrows(genus1_fiber())).holds);
}

TEST_CASE("blow-down arithmetic") {
    PlumbingGraph g = chain({-2, -1, -2});
    const int64_t det_before = det_int(intersection_matrix(g));
    PlumbingGraph h = blow_down(g, 1);
    REQUIRE(h.vertices.size() == 2);
    CHECK(h.vertices[0].e == -1);
    CHECK(h.vertices[1].e == -1);
    REQUIRE(h.edges.size() == 1);
    CHECK(det_int(intersection_matrix(h)) == det_before);

    // the count drops by one and b1 is unchanged
    CHECK(betti(h).second == betti(g).second - 1);
    CHECK(betti(h).first == betti(g).first);

    PlumbingGraph isolated;
    isolated.vertices.push_back({0, -1, 0, 1});
    CHECK(blow_down(isolated, 0).vertices.empty());
}

TEST_CASE("blow-down rejections") {
    PlumbingGraph g = chain({-2, -1, -2});
    CHECK_THROWS_AS(blow_down(g, 0), ComputationError);  // e = -2

    PlumbingGraph genus;
    genus.vertices.push_back({0, -1, 1, 1});
    CHECK_THROWS_AS(blow_down(genus, 0), ComputationError);

    // valence three would give a cuspidal configuration
    PlumbingGraph star = chain({-2, -1, -2});
    star.vertices.push_back({3, -2, 0, 1});
    star.edges.emplace_back(1, 3);
    CHECK_THROWS_AS(blow_down(star, 1), ComputationError);
}

TEST_CASE("blow-down preserves the fiber condition and definiteness") {
    PlumbingGraph g;
    g.vertices = {{0, -2, 0, 1}, {1, -1, 0, 2}, {2, -3, 0, 1}};
    g.edges = {{0, 1}, {1, 2}};
    g.arrows = {{2, 1}};
    REQUIRE(fiber_condition(g).holds);
    REQUIRE(is_negative_definite(g).kind == Definiteness::NegativeDefinite);
    PlumbingGraph h = blow_down(g, 1);
    CHECK(fiber_condition(h).holds);
    CHECK(is_negative_definite(h).kind == Definiteness::NegativeDefinite);
}

TEST_CASE("negative continued fraction strings") {
    CHECK(hj_string(2, 1) == std::vector<int64_t>{-2});
    CHECK(hj_string(5, 3) == std::vector<int64_t>{-2, -3});
    CHECK(hj_string(3, 1) == std::vector<int64_t>{-3});
    CHECK_THROWS(hj_string(4, 2));
    CHECK_THROWS(hj_string(3, 3));
    CHECK_THROWS(hj_string(3, 0));

    // the expansion reproduces n/q exactly
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const int64_t n = 2 + static_cast<int64_t>(rng() % 60);
        int64_t q = 1 + static_cast<int64_t>(rng() % (n - 1));
        q /= std::gcd(n, q);
        while (std::gcd(n, q) != 1) ++q;
        if (q >= n || q <= 0) continue;
        const auto a = hj_string(n, q);
        Rational value(-a.back());
        for (auto it = a.rbegin() + 1; it != a.rend(); ++it)
            value = Rational(-*it) - Rational(1) / value;
        CHECK(value == Rational(n, q));
        for (auto e : a) CHECK(e <= -2);
    }
}

TEST_CASE("boundary homology of the plumbed 3-manifold") {
    PlumbingGraph t;
    t.vertices.push_back({0, -3, 1, 1});
    const auto bh = boundary_h1(t);
    CHECK(bh.free_rank == 2);
    CHECK(bh.torsion_order == 3);

    const auto bh2 = boundary_h1(chain({-2, -2}));
    CHECK(bh2.free_rank == 0);
    CHECK(bh2.torsion_order == 3);

    PlumbingGraph empty;
    CHECK(boundary_h1(empty) == BoundaryH1{0, 1});

    // null direction contributes free rank
    PlumbingGraph zero;
    zero.vertices.push_back({0, 0, 0, 1});
    CHECK(boundary_h1(zero).free_rank == 1);

    CHECK_THROWS_AS(boundary_h1(genus1_fiber()), UsageError);
}

TEST_CASE("graph validation") {
    PlumbingGraph loop;
    loop.vertices.push_back({0, -1, 0, 1});
    loop.edges.emplace_back(0, 0);
    CHECK_THROWS_AS(loop.validate(), UsageError);

    PlumbingGraph zero_mult;
    zero_mult.vertices.push_back({0, -1, 0, 0});
    CHECK_THROWS_AS(zero_mult.validate(), UsageError);
}
