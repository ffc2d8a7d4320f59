#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fibercalc/catalog.hpp"
#include "fibercalc/factorization.hpp"
#include "fibercalc/rational.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// Betti numbers and signature data of the 4-manifold built from a positive
// word: one 2-handle per twist letter on top of (fiber surface) x disk.
struct BettiReport {
    int64_t chi = 0;
    int64_t b1 = 0;
    int64_t b2 = 0;
    std::optional<int64_t> b2_plus, b2_minus, b2_zero, sigma;

    bool negative_definite() const {
        return b2_plus && *b2_plus == 0 && b2_zero && *b2_zero == 0;
    }
    bool negative_semidefinite() const { return b2_plus && *b2_plus == 0; }
    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

CurveKind classify_curve(const SurfaceSig& surf, const std::string& gen);
CurveKind classify_curve(const FactLetter& letter);

// b1 = corank of the span of the letters' curve classes in H_1(fiber),
// b2 = length - rank of that span, chi = chi(fiber) + length.
BettiReport lefschetz_betti(const Word& w);

// Same for a positive factorization; a conjugated letter contributes the
// image of its base class under the conjugator's homology action.
BettiReport lefschetz_betti(const Factorization& f);

// Cap boundary circles: twists about capped boundaries become trivial and
// are recorded as blow-ups; the rest of the word moves to the capped surface.
struct CappedWord {
    Word word;
    int64_t blowup_count = 0;
};
CappedWord cap_word(const Word& w, bool cap_d1, bool cap_d2);

// Signature of a closed genus-2 fibration with n0 twists about
// nonseparating cycles, s1 about genus-1 separating ones, then blown up:
// sigma = -(3 n0 + s1)/5 - blowups.  3 n0 + s1 must be divisible by 5.
int64_t hyperelliptic_signature(int64_t n0, int64_t s1, int64_t blowups);

int64_t novikov_assemble(int64_t sigma_closed, int64_t sigma_complement);

// Full report.  With a complement signature the closed-fibration signature
// is assembled by additivity; otherwise negative semidefiniteness is
// inherited by embedding (subword of the reference semidefinite word, or a
// pure boundary multitwist).
BettiReport definiteness_report(const Word& w, int64_t b2_zero,
                                std::optional<int64_t> complement_sigma = std::nullopt);

enum class AbelianContext { ClosedGenus2, Sigma11 };

// Image of a twist in the abelianized mapping class group: Z/10 for the
// closed genus-2 surface (essential -> 1, genus-1 separating -> 2), Z for
// the once-holed torus (essential -> 1, boundary -> 12).
int abelianization_value(CurveKind kind, AbelianContext ctx);

// All multisets of `count` values drawn from `allowed` summing to target
// (mod `modulus`; modulus 0 means over the integers).  count <= 24.
std::vector<std::vector<int>> abelian_obstruction_solve(int target, int count,
                                                        const std::set<int>& allowed,
                                                        int modulus);

// Flat-deformation certificate: Betti numbers match and both sides are
// negative (semi)definite with the same nullity.
bool laufer_certificate(const BettiReport& word_report, const BettiReport& graph_report);

Rational k_squared(const Rational& d3, int64_t chi, int64_t sigma);

}  // namespace fibercalc
