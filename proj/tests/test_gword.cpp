#include <doctest.h>

#include "fibercalc/gword.hpp"

using namespace fibercalc;

TEST_CASE("orbifold words reduce to normal form") {
    GroupModel m(4);
    // marked loops are involutions
    CHECK(reduced(m, GWord{{{0, 2}}}).trivial());
    CHECK(reduced(m, GWord{{{0, 3}}}) == GWord::gen(0));
    CHECK(reduced(m, GWord{{{0, -1}}}) == GWord::gen(0));
    // the hole loop is not
    CHECK(reduced(m, GWord{{{4, 2}}}) == GWord::gen(4, 2));
    CHECK(reduced(m, GWord{{{4, 1}, {4, -1}}}).trivial());
    // cascading cancellation
    GWord w{{{0, 1}, {1, 1}, {1, 1}, {0, 1}, {4, 3}}};
    CHECK(reduced(m, w) == GWord::gen(4, 3));
}

TEST_CASE("group operations") {
    GroupModel m(4);
    GWord a{{{0, 1}, {4, 2}}};
    GWord b{{{4, -2}, {0, 1}}};
    CHECK(gmul(m, a, b).trivial());
    CHECK(gmul(m, a, ginv(m, a)).trivial());
    CHECK(ginv(m, ginv(m, a)) == reduced(m, a));
    CHECK(parity(m, a) == 1);
    CHECK(parity(m, gmul(m, a, a)) == 0);
    CHECK(syllable_weight(reduced(m, a)) == 3);
}

TEST_CASE("conjugation") {
    GroupModel m(3);
    GWord x = GWord::gen(0);
    GWord y = GWord::gen(3);
    GWord c = gconj(m, x, y);  // y^{-1} x y
    CHECK(c.ls.size() == 3);
    CHECK(gmul(m, gmul(m, y, c), ginv(m, y)) == x);
}
