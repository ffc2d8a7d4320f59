#pragma once

#include <string>
#include <vector>

#include "fibercalc/gword.hpp"

namespace fibercalc {

// Exact model of mapping classes of a marked annulus and of the genus
// surface double-covering it.
//
// Downstairs the group acts on the orbifold fundamental group G_n (see
// gword.hpp) together with a reference arc running from the outer-boundary
// basepoint to the inner boundary.  The arc restores the inner boundary
// twist, which acts trivially on loops based at the outer boundary.
//
// Upstairs elements are handled through the double cover.  A mapping class
// h of the cover fixing the boundary pointwise fixes both basepoint lifts,
// so it induces two "letter image" tables: row 0 records where h sends a
// generator traversed from the even sheet, row 1 where the deck-conjugate
// of h sends it (equivalently, where h sends the generator lifted from the
// odd sheet).  Applying an element to a word walks the letters with a
// running sheet parity; every generator here flips the parity.  Twists that
// commute with the deck action have equal rows and restrict to the familiar
// downstairs action; the two lifts of a nodal vanishing cycle differ in the
// rows and so stay distinguishable.
//
// Composition order matches word order: compose(a, b) acts by a first.

struct ExactElement {
    std::vector<GWord> t0, t1;  // one entry per generator (positive letter)
    GWord arc;                  // image coefficient of the reference arc

    friend bool operator==(const ExactElement&, const ExactElement&) = default;
};

enum class TwistHalf { Full, Sheet0, Sheet1 };

class AnnulusModel {
public:
    explicit AnnulusModel(int marked);

    const GroupModel& group() const { return gm_; }
    int marked() const { return gm_.marked(); }

    ExactElement identity() const;

    // Positive (right-handed) braid half-twist exchanging marked points
    // i and i+1 along the chord between them; sign -1 for the inverse.
    ExactElement half_twist(int i, int sign = 1) const;

    // Dehn twist about the convex circle enclosing marked points
    // first..marked-1 together with the inner boundary.  first == marked
    // is the inner boundary twist itself, first == 0 the outer one.  The
    // Sheet0/Sheet1 halves are the twists about the two circles of the
    // preimage upstairs; they exist only when the circle has a
    // disconnected preimage (even number of enclosed objects).
    ExactElement run_twist(int first, int sign = 1, TwistHalf half = TwistHalf::Full) const;

    // g^{-1} * base * g, with g given as (element of g, element of g^{-1}).
    ExactElement conjugated(const ExactElement& base, const ExactElement& g,
                            const ExactElement& g_inv) const;

    // Image of a word under the element, walking from the given start sheet.
    GWord apply(const ExactElement& e, const GWord& w, int sheet) const;

    ExactElement compose(const ExactElement& a, const ExactElement& b) const;

    bool is_identity(const ExactElement& e) const;

    // Canonical serialization; equal strings iff equal elements.
    std::string fingerprint(const ExactElement& e) const;

    // Consistency of a table: entries preserve parity and rows are
    // compatible with generator involutivity.
    bool coherent(const ExactElement& e) const;

    // Induced permutation of the marked points (each marked loop maps to a
    // conjugate of the image point's loop).
    std::vector<int> marked_permutation(const ExactElement& e) const;

private:
    GroupModel gm_;
};

const AnnulusModel& annulus_model_4();
const AnnulusModel& annulus_model_3();

}  // namespace fibercalc
