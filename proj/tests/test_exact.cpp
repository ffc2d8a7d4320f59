#include <doctest.h>

#include <random>

#include "fibercalc/catalog.hpp"
#include "fibercalc/cover.hpp"
#include "fibercalc/errors.hpp"
#include "helpers.hpp"

using namespace fibercalc;
using namespace fibercalc::testing;

namespace {

bool elems_commute(const Catalog& cat, const std::string& a, const std::string& b) {
    const auto& ea = cat.annulus_letters.at(a).elem;
    const auto& eb = cat.annulus_letters.at(b).elem;
    return cat.model.compose(ea, eb) == cat.model.compose(eb, ea);
}

bool braid_relation(const Catalog& cat, const std::string& a, const std::string& b) {
    const auto& ea = cat.annulus_letters.at(a).elem;
    const auto& eb = cat.annulus_letters.at(b).elem;
    const auto aba = cat.model.compose(cat.model.compose(ea, eb), ea);
    const auto bab = cat.model.compose(cat.model.compose(eb, ea), eb);
    return aba == bab;
}

}  // namespace

TEST_CASE("catalog tables are coherent and invertible") {
    for (const Catalog* cat : {&catalog_genus2(), &catalog_genus1()}) {
        for (const auto& reg : {cat->annulus_letters, cat->cover_letters}) {
            for (const auto& [name, letter] : reg) {
                CAPTURE(name);
                CHECK(cat->model.coherent(letter.elem));
                CHECK(cat->model.coherent(letter.elem_inv));
                CHECK(cat->model.is_identity(cat->model.compose(letter.elem, letter.elem_inv)));
                CHECK(cat->model.is_identity(cat->model.compose(letter.elem_inv, letter.elem)));
            }
        }
    }
}

TEST_CASE("braid relations among the half-twists") {
    const Catalog& g2 = catalog_genus2();
    CHECK(braid_relation(g2, "B1", "B2"));
    CHECK(braid_relation(g2, "B2", "B3"));
    CHECK(elems_commute(g2, "B1", "B3"));
    // the wrap arc closes the chain
    CHECK(braid_relation(g2, "B0", "B1"));
    CHECK(braid_relation(g2, "B0", "B3"));
    CHECK(elems_commute(g2, "B0", "B2"));

    const Catalog& g1 = catalog_genus1();
    CHECK(braid_relation(g1, "B1", "B2"));
    CHECK(braid_relation(g1, "B0", "B1"));
    CHECK(braid_relation(g1, "B0", "B2"));
}

TEST_CASE("boundary twists are central") {
    const Catalog& g2 = catalog_genus2();
    for (const auto& [name, _] : g2.annulus_letters) {
        CAPTURE(name);
        CHECK(elems_commute(g2, "TD1", name));
        CHECK(elems_commute(g2, "TD2", name));
    }
}

TEST_CASE("inner boundary twist moves only the reference arc") {
    const Catalog& g2 = catalog_genus2();
    const ExactElement& td1 = g2.annulus_letters.at("TD1").elem;
    const ExactElement id = g2.model.identity();
    CHECK(td1.t0 == id.t0);
    CHECK(td1.t1 == id.t1);
    CHECK(td1.arc == GWord::gen(g2.model.group().hole()));
    CHECK_FALSE(g2.model.is_identity(td1));
}

TEST_CASE("empty word evaluates to the identity") {
    CHECK(exact_is_identity(make_word(annulus4(), {})));
    CHECK(exact_is_identity(make_word(sigma22(), {})));
}

TEST_CASE("half-twist braid relation as words") {
    Word lhs = wa4({{"B1", 1}, {"B2", 1}, {"B1", 1}});
    Word rhs = wa4({{"B2", 1}, {"B1", 1}, {"B2", 1}});
    CHECK(exact_equal(lhs, rhs));
}

TEST_CASE("the nodal circle twist splits into the two sheet lifts") {
    for (const Catalog* cat : {&catalog_genus2(), &catalog_genus1()}) {
        const bool g2 = cat->annulus == annulus4();
        const std::string full = g2 ? "N1" : "NG";
        const std::string a = g2 ? "N1A" : "NGA", b = g2 ? "N1B" : "NGB";
        const auto& ea = cat->annulus_letters.at(a).elem;
        const auto& eb = cat->annulus_letters.at(b).elem;
        const auto& ef = cat->annulus_letters.at(full).elem;
        CHECK(cat->model.compose(ea, eb) == ef);
        CHECK(cat->model.compose(eb, ea) == ef);  // disjoint circles commute
        CHECK_FALSE(ea == eb);
    }
}

TEST_CASE("upstairs letters distinguishable and disjointness relations hold") {
    // the two lifts of the nodal circle are different mapping classes
    CHECK_FALSE(exact_equal(w22({"C1"}), w22({"C1P"})));
    CHECK(exact_equal(w22({"C1", "C1P"}), w22({"C1P", "C1"})));
    CHECK(exact_equal(w22({"C5", "C5P"}), w22({"C5P", "C5"})));
    CHECK(exact_equal(w22({"C1", "C1P"}), lift_word(wa4({{"N1", 1}}))));
    // disjoint chain curves commute
    CHECK(exact_equal(w22({"C2", "C4"}), w22({"C4", "C2"})));
    CHECK(exact_equal(w22({"C2", "C5"}), w22({"C5", "C2"})));
    // boundary twists commute with everything
    for (const auto& g : catalog_names(sigma22())) {
        CAPTURE(g);
        CHECK(exact_equal(w22({"D1", g}), w22({g, "D1"})));
        CHECK(exact_equal(w22({"D2", g}), w22({g, "D2"})));
    }
    // adjacent chain curves do not commute
    CHECK_FALSE(exact_equal(w22({"C2", "C3"}), w22({"C3", "C2"})));
}

TEST_CASE("involution lift squares to the boundary multitwist") {
    Word sq = compose(i_tilde(), i_tilde());
    CHECK(exact_equal(sq, w22({"D1", "D2"})));
}

TEST_CASE("the companion-root composite squares to the triple multitwist") {
    Word w4 = compose(psi1_tilde(), psi1());
    Word lhs = compose(w4, w4);
    Word rhs = make_word(sigma22(), {{"D1", 3}, {"D2", 1}});
    CHECK(exact_equal(lhs, rhs));
}

TEST_CASE("all composite power words agree with powers of the root word") {
    const Word p1 = psi1();
    const Word pt = psi1_tilde();
    CHECK(exact_equal(power(p1, 4), compose(pt, p1)));
    CHECK(exact_equal(power(p1, 5), compose(pt, power(p1, 2))));
    CHECK(exact_equal(power(p1, 6), compose(pt, pt)));
    CHECK(exact_equal(power(p1, 7), compose(compose(pt, pt), p1)));
    CHECK(exact_equal(power(p1, 8), make_word(sigma22(), {{"D1", 3}, {"D2", 1}})));
}

TEST_CASE("walk application is invariant under free insertion") {
    std::mt19937 rng(20240811);
    const Catalog& cat = catalog_genus2();
    const GroupModel& gm = cat.model.group();
    std::uniform_int_distribution<int> gen(0, gm.generator_count() - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    const auto& names = catalog_names(annulus4());
    for (int trial = 0; trial < 200; ++trial) {
        const auto& letter = cat.annulus_letters.at(names[trial % names.size()]);
        GWord w;
        for (int i = 0; i < 6; ++i) w.ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
        // insert a cancelling pair at a random position
        GWord noisy = w;
        const int g = gen(rng);
        const int pos = static_cast<int>(rng() % (noisy.ls.size() + 1));
        noisy.ls.insert(noisy.ls.begin() + pos, {g, -1});
        noisy.ls.insert(noisy.ls.begin() + pos, {g, 1});
        for (int sheet = 0; sheet < 2; ++sheet)
            CHECK(cat.model.apply(letter.elem, w, sheet) ==
                  cat.model.apply(letter.elem, noisy, sheet));
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(77);
    const Catalog& cat = catalog_genus2();
    const auto& names = catalog_names(annulus4());
    std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactElement a = cat.annulus_letters.at(names[pick(rng)]).elem;
        const ExactElement b = cat.annulus_letters.at(names[pick(rng)]).elem;
        const ExactElement c = cat.annulus_letters.at(names[pick(rng)]).elem;
        CHECK(cat.model.compose(cat.model.compose(a, b), c) ==
              cat.model.compose(a, cat.model.compose(b, c)));
    }
}

TEST_CASE("elements are determined by their fingerprints") {
    std::mt19937 rng(5150);
    const Catalog& cat = catalog_genus2();
    for (int trial = 0; trial < 40; ++trial) {
        Word w1 = random_word(rng, annulus4(), 4);
        Word w2 = random_word(rng, annulus4(), 4);
        const bool eq = exact_equal(w1, w2);
        CHECK(eq == (exact_fingerprint(w1) == exact_fingerprint(w2)));
    }
    (void)cat;
}

TEST_CASE("surface mismatch is rejected") {
    CHECK_THROWS_AS(compose(psi1(), wa4({{"B1", 1}})), SurfaceMismatchError);
    CHECK_THROWS_AS((void)exact_equal(psi1(), wa4({{"B1", 1}})), SurfaceMismatchError);
}

TEST_CASE("unknown generators are rejected") {
    CHECK_THROWS_AS(make_word(sigma22(), {{"B1", 1}}), UnknownGeneratorError);
    CHECK_THROWS_AS(make_word(annulus4(), {{"C1", 1}}), UnknownGeneratorError);
}
