#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibercalc {

// Words in the orbifold fundamental group of an n-marked annulus:
//
//   G_n = <x_0, ..., x_{n-1}, y | x_i^2 = 1>
//
// x_i is the loop around the i-th marked point (an involution, because the
// marked points are simple branch points of the double cover), y is the loop
// around the inner boundary circle (infinite order).  Normal forms are the
// usual free-product reduced words, so equality is literal comparison.
//
// The mod-2 "sheet" character theta sends every x_i and y to 1.  It encodes
// which sheet of the double cover a lifted path is on; a word lifts to a loop
// upstairs iff its parity is 0.

struct GLetter {
    int gen;       // 0..n-1 marked-point loops, n = hole loop
    int64_t exp;   // nonzero; for marked-point loops the normal form keeps exp == 1
    friend bool operator==(const GLetter&, const GLetter&) = default;
};

class GroupModel {
public:
    explicit GroupModel(int marked) : marked_(marked) {}
    int marked() const { return marked_; }
    int hole() const { return marked_; }
    int generator_count() const { return marked_ + 1; }
    bool involutive(int gen) const { return gen < marked_; }

private:
    int marked_;
};

struct GWord {
    std::vector<GLetter> ls;

    static GWord one() { return {}; }
    static GWord gen(int g, int64_t e = 1) { return {{GLetter{g, e}}}; }
    bool trivial() const { return ls.empty(); }
    friend bool operator==(const GWord&, const GWord&) = default;
};

// Normal form: adjacent same-generator letters merged, involutive exponents
// reduced mod 2 (representative +1), zero letters dropped, cascading.
GWord reduced(const GroupModel& m, const GWord& w);

GWord gmul(const GroupModel& m, const GWord& a, const GWord& b);
GWord ginv(const GroupModel& m, const GWord& a);
GWord gconj(const GroupModel& m, const GWord& w, const GWord& by);  // by^{-1} w by

int parity(const GroupModel& m, const GWord& w);  // theta in {0,1}

// Total letter count with multiplicity (after reduction), used as a size gauge.
int64_t syllable_weight(const GWord& w);

std::string to_string(const GroupModel& m, const GWord& w);

}  // namespace fibercalc
