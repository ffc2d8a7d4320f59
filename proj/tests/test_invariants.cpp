#include <doctest.h>

#include <random>

#include "fibercalc/invariants.hpp"
#include "helpers.hpp"

using namespace fibercalc;
using namespace fibercalc::testing;

namespace {

Word x0_word() {
    Word pt = psi1_tilde();
    return compose(compose(pt, pt), compose(psi1(), psi1()));
}

}  // namespace

TEST_CASE("curve classification") {
    CHECK(classify_curve(sigma22(), "D1") == CurveKind::BoundaryParallel1);
    CHECK(classify_curve(sigma22(), "D2") == CurveKind::BoundaryParallel2);
    CHECK(classify_curve(sigma22(), "C3") == CurveKind::Nonseparating);
    // conjugation preserves the kind
    FactLetter conj{"C3", psi1()};
    CHECK(classify_curve(conj) == CurveKind::Nonseparating);
}

TEST_CASE("Betti numbers of the catalog words") {
    auto check = [](const Word& w, int64_t b1, int64_t b2) {
        const BettiReport r = lefschetz_betti(w);
        CHECK(r.b1 == b1);
        CHECK(r.b2 == b2);
        CHECK(r.chi == w.surface.euler_characteristic() + w.length());
    };
    check(psi1(), 0, 0);
    check(power(psi1(), 2), 0, 5);
    check(psi1_tilde(), 0, 1);
    check(compose(psi1_tilde(), psi1()), 0, 6);
    check(make_word(sigma22(), {{"D1", 3}, {"D2", 1}}), 4, 3);
    check(x0_word(), 0, 17);
    check(make_word(sigma13(), {{"DG1", 1}, {"DG2", 1}, {"DG3", 1}}), 2, 1);
}

TEST_CASE("capping records boundary twists as blow-ups") {
    const Word x0 = x0_word();
    CappedWord cw = cap_word(x0, true, true);
    CHECK(cw.blowup_count == 2);
    CHECK(cw.word.length() == 20);
    CHECK(cw.word.surface == sigma2());

    CappedWord c2 = cap_word(power(psi1(), 2), false, true);
    CHECK(c2.blowup_count == 0);
    CHECK(c2.word.length() == 10);
    CHECK(c2.word.surface == sigma21());

    CappedWord ce = cap_word(make_word(sigma22(), {}), true, true);
    CHECK(ce.blowup_count == 0);
    CHECK(ce.word.letters.empty());
}

TEST_CASE("hyperelliptic signature of closed genus-2 fibrations") {
    CHECK(hyperelliptic_signature(20, 0, 0) == -12);
    CHECK(hyperelliptic_signature(20, 0, 2) == -14);
    CHECK(hyperelliptic_signature(0, 0, 0) == 0);
    CHECK(hyperelliptic_signature(0, 5, 0) == -1);
    CHECK_THROWS(hyperelliptic_signature(1, 0, 0));
}

TEST_CASE("signature additivity") {
    CHECK(novikov_assemble(-14, -1) == -13);
    CHECK(novikov_assemble(0, 0) == 0);
    CHECK(novikov_assemble(-12, -12) == 0);
}

TEST_CASE("full signature pipeline for the reference word") {
    const BettiReport r = definiteness_report(x0_word(), 4, -1);
    CHECK(r.b2 == 17);
    CHECK(r.sigma == -13);
    CHECK(r.b2_plus == 0);
    CHECK(r.b2_minus == 13);
    CHECK(r.b2_zero == 4);
    CHECK(r.negative_semidefinite());
    CHECK_FALSE(r.negative_definite());
}

TEST_CASE("definiteness by embedding for the subwords") {
    // every catalog power word up to the seventh embeds in the reference
    // word, so it inherits a vanishing positive part
    const std::vector<Word> words = {
        psi1(),
        power(psi1(), 2),
        psi1_tilde(),
        compose(psi1_tilde(), psi1()),
        compose(psi1_tilde(), power(psi1(), 2)),
        power(psi1_tilde(), 2),
        compose(power(psi1_tilde(), 2), psi1()),
    };
    for (size_t k = 0; k < words.size(); ++k) {
        CAPTURE(k + 1);
        const BettiReport r = definiteness_report(words[k], 0);
        CHECK(r.b2_plus == 0);
        CHECK(r.negative_definite());
    }
}

TEST_CASE("the boundary multitwist word is negative definite onto its nullity") {
    const BettiReport r = definiteness_report(make_word(sigma22(), {{"D1", 3}, {"D2", 1}}), 0);
    CHECK(r.b2_plus == 0);
    CHECK(r.b2_minus == 3);
}

TEST_CASE("empty word gives the trivial report") {
    const BettiReport r = definiteness_report(make_word(sigma22(), {}), 0);
    CHECK(r.b1 == 5);
    CHECK(r.b2 == 0);
    CHECK(r.b2_plus == 0);
}

TEST_CASE("abelianization values") {
    CHECK(abelianization_value(CurveKind::Nonseparating, AbelianContext::ClosedGenus2) == 1);
    CHECK(abelianization_value(CurveKind::SeparatingGenus1, AbelianContext::ClosedGenus2) == 2);
    CHECK(abelianization_value(CurveKind::Trivial, AbelianContext::ClosedGenus2) == 0);
    CHECK_THROWS(abelianization_value(CurveKind::BoundaryParallel1,
                                      AbelianContext::ClosedGenus2));
    CHECK(abelianization_value(CurveKind::Nonseparating, AbelianContext::Sigma11) == 1);
    CHECK(abelianization_value(CurveKind::BoundaryParallel1, AbelianContext::Sigma11) == 12);
}

TEST_CASE("obstruction solver") {
    // writing zero mod 10 as four summands from {0, 2}
    auto sols = abelian_obstruction_solve(0, 4, {0, 2}, 10);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == std::vector<int>{0, 0, 0, 0});

    // a single twist of total value 12 must be the boundary twist
    auto s12 = abelian_obstruction_solve(12, 1, {0, 1, 12}, 0);
    REQUIRE(s12.size() == 1);
    CHECK(s12[0] == std::vector<int>{12});

    // below length twelve every solution is one boundary twist plus trivial
    for (int count = 1; count < 12; ++count) {
        CAPTURE(count);
        auto sols_n = abelian_obstruction_solve(12, count, {0, 1, 12}, 0);
        REQUIRE(sols_n.size() == 1);
        int twelves = 0, ones = 0;
        for (int v : sols_n[0]) {
            if (v == 12) ++twelves;
            if (v == 1) ++ones;
        }
        CHECK(twelves == 1);
        CHECK(ones == 0);
    }

    auto empty = abelian_obstruction_solve(0, 0, {0, 2}, 10);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    CHECK_THROWS(abelian_obstruction_solve(0, 25, {0, 1}, 0));
}

TEST_CASE("flat deformation certificate") {
    const BettiReport word_k3 = definiteness_report(psi1_tilde(), 0);
    BettiReport graph_k3;
    graph_k3.b1 = 0;
    graph_k3.b2 = 1;
    graph_k3.b2_plus = 0;
    graph_k3.b2_minus = 1;
    graph_k3.b2_zero = 0;
    CHECK(laufer_certificate(word_k3, graph_k3));

    const BettiReport word_k2 = definiteness_report(power(psi1(), 2), 0);
    CHECK_FALSE(laufer_certificate(word_k2, graph_k3));

    const BettiReport word_k8 =
        definiteness_report(make_word(sigma22(), {{"D1", 3}, {"D2", 1}}), 0);
    BettiReport graph_k8;
    graph_k8.b1 = 4;
    graph_k8.b2 = 3;
    graph_k8.b2_plus = 0;
    graph_k8.b2_minus = 3;
    graph_k8.b2_zero = 0;
    CHECK(laufer_certificate(word_k8, graph_k8));
}

TEST_CASE("canonical square combination") {
    CHECK(k_squared(Rational(0), 1, 0) == Rational(2));
    CHECK(k_squared(Rational(0), 0, -1) == Rational(-3));
    CHECK(k_squared(Rational(1, 2), 3, -2) == Rational(2));
    // equal Euler characteristic and signature give equal squares
    CHECK(k_squared(Rational(7, 3), 5, -3) == k_squared(Rational(7, 3), 5, -3));
}

TEST_CASE("handle count conservation on random positive words") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, sigma22(), 1 + trial % 8, true);
        const BettiReport r = lefschetz_betti(w);
        CHECK(r.b2 + (h1_rank(sigma22()) - r.b1) == w.length());
        CHECK(r.chi == sigma22().euler_characteristic() + w.length());
        CHECK(r.b1 >= 0);
        CHECK(r.b2 >= 0);
    }
}

TEST_CASE("Betti numbers are conjugation invariant") {
    std::mt19937 rng(909);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& names = catalog_names(sigma22());
        Factorization f{sigma22(), {}};
        for (int i = 0; i < 4; ++i)
            f.letters.push_back({names[rng() % names.size()], make_word(sigma22(), {})});
        Word g = random_word(rng, sigma22(), 3);
        Factorization fc = conjugate_factorization(f, g);
        const BettiReport a = lefschetz_betti(f);
        const BettiReport b = lefschetz_betti(fc);
        CHECK(a.b1 == b.b1);
        CHECK(a.b2 == b.b2);
    }
}

TEST_CASE("capping never increases the first Betti number") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, sigma22(), 1 + trial % 6, true);
        const BettiReport before = lefschetz_betti(w);
        CappedWord cw = cap_word(w, true, true);
        const BettiReport after = lefschetz_betti(cw.word);
        CHECK(after.b1 <= before.b1);
        CHECK(cw.blowup_count == w.length() - cw.word.length());
    }
}
