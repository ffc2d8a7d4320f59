#include "fibercalc/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "fibercalc/errors.hpp"
#include "fibercalc/homology.hpp"

namespace fibercalc {

namespace {

// rank over Q of a list of integer vectors
int rank_of(std::vector<HVec> rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols; ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[rank]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const int64_t a = rows[rank][c], b = rows[r][c];
            for (int k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
        }
        ++rank;
    }
    return rank;
}

bool capped_surface(const SurfaceSig& s) { return s == sigma21() || s == sigma2(); }

// Curve class of a letter; capped surfaces use the genus-2 classes with the
// boundary coordinate d collapsed.
HVec letter_class(const SurfaceSig& surf, const std::string& gen) {
    if (capped_surface(surf)) {
        HVec v = h1_class(sigma22(), gen);
        v.pop_back();  // kill d: basis (a1, b1, a2, b2, d) -> (a1, b1, a2, b2)
        return v;
    }
    return h1_class(surf, gen);
}

}  // namespace

CurveKind classify_curve(const SurfaceSig& surf, const std::string& gen) {
    return letter_kind(surf, gen);
}

CurveKind classify_curve(const FactLetter& letter) {
    // conjugation preserves the kind
    return letter_kind(letter.conj.surface, letter.base);
}

BettiReport lefschetz_betti(const Word& w) {
    if (!w.positive()) throw UsageError("lefschetz_betti: word must be positive");
    const SurfaceSig& s = w.surface;
    std::vector<HVec> rows;
    for (const auto& l : w.letters) {
        HVec c = letter_class(s, l.gen);
        for (int k = 0; k < l.exp; ++k) rows.push_back(c);
    }
    const int rk = rank_of(rows);
    const int h1 = capped_surface(s) ? 4 : h1_rank(s);
    BettiReport r;
    r.chi = s.euler_characteristic() + w.length();
    r.b1 = h1 - rk;
    r.b2 = w.length() - rk;
    return r;
}

BettiReport lefschetz_betti(const Factorization& f) {
    const SurfaceSig& s = f.surface;
    std::vector<HVec> rows;
    for (const auto& l : f.letters)
        rows.push_back(happly(letter_class(s, l.base), homology_eval(l.conj).matrix));
    const int rk = rank_of(rows);
    const int h1 = capped_surface(s) ? 4 : h1_rank(s);
    BettiReport r;
    const auto len = static_cast<int64_t>(f.letters.size());
    r.chi = s.euler_characteristic() + len;
    r.b1 = h1 - rk;
    r.b2 = len - rk;
    return r;
}

CappedWord cap_word(const Word& w, bool cap_d1, bool cap_d2) {
    if (!w.positive()) throw UsageError("cap_word: word must be positive");
    if (!(w.surface == sigma22()))
        throw UsageError("cap_word expects a word on " + to_string(sigma22()));
    SurfaceSig target = (cap_d1 && cap_d2) ? sigma2() : (cap_d1 || cap_d2 ? sigma21() : sigma22());
    CappedWord out;
    std::vector<WLetter> kept;
    for (const auto& l : w.letters) {
        const CurveKind k = letter_kind(sigma22(), l.gen);
        const bool capped = (k == CurveKind::BoundaryParallel1 && cap_d1) ||
                            (k == CurveKind::BoundaryParallel2 && cap_d2);
        if (capped)
            out.blowup_count += l.exp;
        else
            kept.push_back(l);
    }
    out.word = make_word(target, kept);
    return out;
}

int64_t hyperelliptic_signature(int64_t n0, int64_t s1, int64_t blowups) {
    const int64_t t = 3 * n0 + s1;
    if (t % 5 != 0)
        throw UsageError("hyperelliptic_signature: 3*n0 + s1 = " + std::to_string(t) +
                         " is not divisible by 5");
    return -(t / 5) - blowups;
}

int64_t novikov_assemble(int64_t sigma_closed, int64_t sigma_complement) {
    return sigma_closed - sigma_complement;
}

namespace {

// letter multiset of the reference negative semidefinite word (two copies
// of each six-letter root word followed by two copies of the five-letter
// one); subwords of it inherit b2+ = 0.
const std::map<std::string, int>& reference_semidefinite_counts() {
    static const std::map<std::string, int> counts = {
        {"C1", 2}, {"C1P", 2}, {"C2", 4}, {"C3", 4}, {"C4", 4},
        {"C5", 2}, {"C5P", 2}, {"D1", 2}, {"D2", 0}};
    return counts;
}

bool embeds_in_reference(const Word& w) {
    std::map<std::string, int> counts;
    for (const auto& l : w.letters) counts[l.gen] += l.exp;
    const auto& ref = reference_semidefinite_counts();
    for (const auto& [g, n] : counts) {
        auto it = ref.find(g);
        if (it == ref.end() || n > it->second) return false;
    }
    return true;
}

bool all_boundary_parallel(const Word& w) {
    for (const auto& l : w.letters) {
        const CurveKind k = letter_kind(w.surface, l.gen);
        if (k != CurveKind::BoundaryParallel1 && k != CurveKind::BoundaryParallel2) return false;
    }
    return true;
}

}  // namespace

BettiReport definiteness_report(const Word& w, int64_t b2_zero,
                                std::optional<int64_t> complement_sigma) {
    BettiReport r = lefschetz_betti(w);
    r.b2_zero = b2_zero;
    if (complement_sigma) {
        // close up the fibration, compute the hyperelliptic signature of the
        // closed total space, then cut the complement piece back out
        CappedWord capped = cap_word(w, true, true);
        int64_t n0 = 0, s1 = 0;
        for (const auto& l : capped.word.letters) {
            switch (letter_kind(capped.word.surface, l.gen)) {
                case CurveKind::Nonseparating:
                    n0 += l.exp;
                    break;
                case CurveKind::SeparatingGenus1:
                    s1 += l.exp;
                    break;
                default:
                    break;
            }
        }
        const int64_t sigma_closed = hyperelliptic_signature(n0, s1, capped.blowup_count);
        r.sigma = novikov_assemble(sigma_closed, *complement_sigma);
        const int64_t rest = r.b2 - b2_zero;
        // b2+ + b2- = rest, b2+ - b2- = sigma
        if ((rest + *r.sigma) % 2 != 0)
            throw ComputationError("definiteness_report: parity mismatch in b2 split");
        r.b2_plus = (rest + *r.sigma) / 2;
        r.b2_minus = (rest - *r.sigma) / 2;
        return r;
    }
    if (embeds_in_reference(w) || all_boundary_parallel(w)) {
        // embeds in a negative semidefinite lattice, so no positive part
        r.b2_plus = 0;
        r.b2_minus = r.b2 - b2_zero;
        r.sigma = -(r.b2 - b2_zero);
    }
    return r;
}

int abelianization_value(CurveKind kind, AbelianContext ctx) {
    switch (ctx) {
        case AbelianContext::ClosedGenus2:
            // abelianization of the closed genus-2 mapping class group is
            // Z/10 (Korkmaz); genus-1 separating value comes from the chain
            // relation
            switch (kind) {
                case CurveKind::Trivial:
                    return 0;
                case CurveKind::Nonseparating:
                    return 1;
                case CurveKind::SeparatingGenus1:
                    return 2;
                default:
                    throw UsageError("boundary twist has no class on a closed surface");
            }
        case AbelianContext::Sigma11:
            // MCG of the once-holed torus abelianizes to Z by braid length;
            // the boundary twist is the 12-letter chain relation word
            switch (kind) {
                case CurveKind::Trivial:
                    return 0;
                case CurveKind::Nonseparating:
                    return 1;
                case CurveKind::BoundaryParallel1:
                case CurveKind::BoundaryParallel2:
                    return 12;
                default:
                    throw UsageError("no genus-1 separating curve on a once-holed torus");
            }
    }
    throw UsageError("bad abelianization context");
}

std::vector<std::vector<int>> abelian_obstruction_solve(int target, int count,
                                                        const std::set<int>& allowed,
                                                        int modulus) {
    if (count < 0 || count > 24)
        throw UsageError("abelian_obstruction_solve: count out of the brute-force bound");
    std::vector<int> vals(allowed.begin(), allowed.end());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto norm = [&](long long s) {
        if (modulus <= 0) return s;
        long long r = s % modulus;
        return r < 0 ? r + modulus : r;
    };
    const long long want = norm(target);
    // enumerate nondecreasing index sequences = multisets
    auto rec = [&](auto&& self, size_t start, int left, long long sum) -> void {
        if (left == 0) {
            if (norm(sum) == want) out.push_back(cur);
            return;
        }
        for (size_t i = start; i < vals.size(); ++i) {
            cur.push_back(vals[i]);
            self(self, i, left - 1, sum + vals[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, count, 0);
    return out;
}

bool laufer_certificate(const BettiReport& word_report, const BettiReport& graph_report) {
    if (!word_report.b2_plus || !graph_report.b2_plus)
        throw UsageError("laufer_certificate: incomplete definiteness data");
    if (word_report.b1 != graph_report.b1) return false;
    if (word_report.b2 != graph_report.b2) return false;
    if (!word_report.negative_semidefinite() || !graph_report.negative_semidefinite())
        return false;
    const int64_t wz = word_report.b2_zero.value_or(0);
    const int64_t gz = graph_report.b2_zero.value_or(0);
    return wz == gz;
}

Rational k_squared(const Rational& d3, int64_t chi, int64_t sigma) {
    return Rational(4) * d3 + Rational(2 * chi) + Rational(3 * sigma);
}

}  // namespace fibercalc
