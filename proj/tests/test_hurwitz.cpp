#include <doctest.h>

#include <random>

#include "fibercalc/factorization.hpp"
#include "helpers.hpp"

using namespace fibercalc;
using namespace fibercalc::testing;

namespace {

Factorization psi1_fact() {
    return make_factorization(sigma22(), {"C4", "C3", "C2", "C1", "C1P"});
}

Factorization psi1_tilde_fact() {
    return make_factorization(sigma22(), {"C2", "C3", "C4", "C5", "C5P", "D1"});
}

Factorization random_fact(std::mt19937& rng, int len, int conj_len) {
    const auto& names = catalog_names(sigma22());
    std::uniform_int_distribution<size_t> pick(0, names.size() - 1);
    Factorization f{sigma22(), {}};
    for (int i = 0; i < len; ++i)
        f.letters.push_back({names[pick(rng)], random_word(rng, sigma22(), conj_len)});
    return f;
}

}  // namespace

TEST_CASE("slide moves keep the product and invert each other") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Factorization f = random_fact(rng, 4, 2);
        const int i = static_cast<int>(rng() % 3);
        for (MoveKind dir : {MoveKind::L, MoveKind::R}) {
            Factorization g = hurwitz_move(f, i, dir);
            CHECK(exact_equal(product(f), product(g)));
            CHECK(g.letters.size() == f.letters.size());
            Factorization back =
                hurwitz_move(g, i, dir == MoveKind::L ? MoveKind::R : MoveKind::L);
            CHECK(letters_equal(back, f));
        }
    }
}

TEST_CASE("slide of intersecting twists conjugates the moved letter") {
    Factorization f = make_factorization(sigma22(), {"C2", "C3"});
    Factorization g = hurwitz_move(f, 0, MoveKind::R);
    CHECK(g.letters[1].base == "C2");
    CHECK(g.letters[1].conj.letters.empty());
    // the first letter is C3 conjugated by the inverse of C2
    Word expect = conjugate(w22({"C3"}), make_word(sigma22(), {{"C2", -1}}));
    CHECK(exact_equal(g.letters[0].as_word(), expect));
    CHECK(exact_equal(product(f), product(g)));
}

TEST_CASE("slide of the disjoint nodal pair just swaps the letters") {
    Factorization f = make_factorization(sigma22(), {"C1", "C1P"});
    Factorization g = hurwitz_move(f, 0, MoveKind::L);
    CHECK(g.letters[0].base == "C1P");
    // the conjugated letter is still the plain twist
    CHECK(exact_equal(g.letters[1].as_word(), w22({"C1"})));
    Factorization plain = make_factorization(sigma22(), {"C1P", "C1"});
    CHECK(letters_equal(g, plain));
}

TEST_CASE("search finds the trivial equivalence") {
    Factorization f = psi1_fact();
    auto trace = hurwitz_equivalent(f, f);
    REQUIRE(trace.has_value());
    CHECK(trace->empty());
}

TEST_CASE("different products are rejected immediately") {
    Factorization f1 = make_factorization(sigma22(), {"C2", "C3"});
    Factorization f2 = make_factorization(sigma22(), {"C3", "C2"});
    CHECK_FALSE(hurwitz_equivalent(f1, f2).has_value());
}

TEST_CASE("the root word is strongly equivalent to its self-conjugate") {
    Factorization f1 = psi1_fact();
    Factorization f2 = conjugate_factorization(f1, psi1());
    SearchOptions opts;
    opts.depth = 6;
    auto trace = hurwitz_equivalent(f1, f2, opts);
    REQUIRE(trace.has_value());
    // certified: replay reproduces the target letter for letter
    CHECK(letters_equal(replay(f1, *trace), f2));
    for (const auto& m : *trace)
        CHECK((m.kind == MoveKind::L || m.kind == MoveKind::R));
}

TEST_CASE("the companion word is strongly equivalent to its root-conjugate") {
    Factorization f1 = psi1_tilde_fact();
    Factorization f2 = conjugate_factorization(f1, psi1());
    SearchOptions opts;
    opts.depth = 6;
    auto trace = hurwitz_equivalent(f1, f2, opts);
    REQUIRE(trace.has_value());
    CHECK(letters_equal(replay(f1, *trace), f2));
}

TEST_CASE("product invariance across random moves") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        Factorization f = random_fact(rng, 3 + trial % 3, 1);
        const Word before = product(f);
        const int idx = static_cast<int>(rng() % (f.letters.size() - 1));
        Factorization g =
            hurwitz_move(f, idx, (rng() % 2) ? MoveKind::L : MoveKind::R);
        REQUIRE(exact_equal(before, product(g)));
    }
}

TEST_CASE("move index bounds") {
    Factorization f = psi1_fact();
    CHECK_THROWS(hurwitz_move(f, -1, MoveKind::L));
    CHECK_THROWS(hurwitz_move(f, 4, MoveKind::L));
}
