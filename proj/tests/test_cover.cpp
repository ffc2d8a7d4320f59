#include <doctest.h>

#include <random>

#include "fibercalc/catalog.hpp"
#include "fibercalc/cover.hpp"
#include "fibercalc/errors.hpp"
#include "helpers.hpp"

using namespace fibercalc;
using namespace fibercalc::testing;

TEST_CASE("projection dictionary") {
    CHECK(project_word(w22({"D1"})) == wa4({{"TD1", 2}}));
    CHECK(project_word(w22({"D2"})) == wa4({{"TD2", 2}}));
    CHECK(project_word(w22({"C3"})) == wa4({{"B2", 1}}));
    CHECK(project_word(make_word(sigma22(), {})) == make_word(annulus4(), {}));
    CHECK(project_word(w22({"C1"})) == wa4({{"N1A", 1}}));
    CHECK(project_word(w22({"C1P"})) == wa4({{"N1B", 1}}));
}

TEST_CASE("lifting dictionary") {
    CHECK(lift_word(wa4({{"TD1", 2}})) == w22({"D1"}));
    CHECK(lift_word(wa4({{"B1", 1}})) == w22({"C2"}));
    CHECK(lift_word(wa4({{"N1", 1}})) == w22({"C1", "C1P"}));
    CHECK_THROWS_AS(lift_word(wa4({{"TD1", 1}})), NotLiftableError);
    CHECK_THROWS_AS(lift_word(wa4({{"TD1", 3}})), NotLiftableError);
    CHECK_THROWS_AS(lift_word(wa4({{"TD2", 1}})), NotLiftableError);
    CHECK(is_liftable(wa4({{"TD1", -4}})));
    CHECK_FALSE(is_liftable(wa4({{"TD2", 1}, {"B1", 1}})));
}

TEST_CASE("the genus-1 outer boundary twist lifts letterwise to the circle pair") {
    Word lifted = lift_word(wa3({{"TD2", 1}}));
    Word pair = make_word(sigma13(), {{"DG2", 1}, {"DG3", 1}});
    CHECK(lifted == pair);
    CHECK_THROWS_AS(lift_word(wa3({{"TD1", 1}})), NotLiftableError);
    CHECK(lift_word(wa3({{"TD1", 2}})) == make_word(sigma13(), {{"DG1", 1}}));
}

TEST_CASE("wrap arc lifts through its defining word") {
    Word lifted = lift_word(wa4({{"B0", 1}}));
    CHECK(exact_equal(project_word(lifted), wa4({{"B0", 1}})));
    Word lifted3 = lift_word(wa3({{"B0", 1}}));
    CHECK(lifted3 == make_word(sigma13(), {{"E0", 1}}));
}

TEST_CASE("round trip: lift after project is the identity on catalog words") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 1000; ++trial) {
        Word w = random_word(rng, sigma22(), 1 + trial % 8);
        Word rt = lift_word(project_word(w));
        REQUIRE(exact_equal(rt, w));
    }
}

TEST_CASE("round trip on the genus-1 cover") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = random_word(rng, sigma13(), 1 + trial % 6);
        Word rt = lift_word(project_word(w));
        REQUIRE(exact_equal(rt, w));
    }
}

TEST_CASE("projection is a homomorphism into the annulus group") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 200; ++trial) {
        Word a = random_word(rng, sigma22(), 1 + trial % 5);
        Word b = random_word(rng, sigma22(), 1 + trial % 4);
        CHECK(exact_equal(project_word(compose(a, b)),
                          compose(project_word(a), project_word(b))));
    }
}

TEST_CASE("the multitwist power relation seen downstairs") {
    // the fourth power of the root word projects to the braid
    // TD1^3 TD2 on the annulus
    Word w4 = compose(psi1_tilde(), psi1());
    CHECK(exact_equal(project_word(w4), wa4({{"TD1", 3}, {"TD2", 1}})));
}
