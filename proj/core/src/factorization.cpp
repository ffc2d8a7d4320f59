#include "fibercalc/factorization.hpp"

#include <algorithm>
#include <map>

#include "fibercalc/catalog.hpp"
#include "fibercalc/errors.hpp"

namespace fibercalc {

Word FactLetter::as_word() const {
    Word base_w = make_word(conj.surface, {{base, 1}});
    return conjugate(base_w, conj);
}

Factorization make_factorization(const SurfaceSig& s, const std::vector<std::string>& bases) {
    Factorization f{s, {}};
    for (const auto& b : bases) {
        if (!in_catalog(s, b))
            throw UnknownGeneratorError("factorization letter '" + b + "' not on " + to_string(s));
        f.letters.push_back({b, make_word(s, {})});
    }
    return f;
}

Factorization conjugate_factorization(const Factorization& f, const Word& g) {
    Factorization out = f;
    for (auto& l : out.letters) l.conj = compose(l.conj, g);
    return out;
}

Word product(const Factorization& f) {
    Word w = make_word(f.surface, {});
    for (const auto& l : f.letters) w = compose(w, l.as_word());
    return w;
}

Factorization hurwitz_move(const Factorization& f, int i, MoveKind dir) {
    if (dir != MoveKind::L && dir != MoveKind::R)
        throw UsageError("hurwitz_move: direction must be L or R");
    if (i < 0 || i + 1 >= static_cast<int>(f.letters.size()))
        throw UsageError("hurwitz_move: index " + std::to_string(i) + " out of range");
    Factorization out = f;
    FactLetter a = f.letters[i];
    FactLetter b = f.letters[i + 1];
    if (dir == MoveKind::R) {
        // (a, b) -> (a b a^{-1}, a): the conjugated letter keeps base b with
        // conjugator conj_b . a^{-1}
        FactLetter nb{b.base, compose(b.conj, inverse(a.as_word()))};
        out.letters[i] = nb;
        out.letters[i + 1] = a;
    } else {
        // (a, b) -> (b, b^{-1} a b)
        FactLetter na{a.base, compose(a.conj, b.as_word())};
        out.letters[i] = b;
        out.letters[i + 1] = na;
    }
    return out;
}

Factorization apply_move(const Factorization& f, const Move& m) {
    switch (m.kind) {
        case MoveKind::L:
        case MoveKind::R:
            return hurwitz_move(f, m.index, m.kind);
        case MoveKind::CyclicLeft: {
            if (f.letters.empty()) return f;
            Factorization out = f;
            std::rotate(out.letters.begin(), out.letters.begin() + 1, out.letters.end());
            return out;
        }
        case MoveKind::CyclicRight: {
            if (f.letters.empty()) return f;
            Factorization out = f;
            std::rotate(out.letters.begin(), out.letters.end() - 1, out.letters.end());
            return out;
        }
        case MoveKind::GlobalConj:
            if (!m.conjugator) throw UsageError("global conjugation move without conjugator");
            return conjugate_factorization(f, *m.conjugator);
    }
    throw UsageError("bad move kind");
}

Factorization replay(const Factorization& f, const MoveTrace& trace) {
    Factorization cur = f;
    for (const auto& m : trace) cur = apply_move(cur, m);
    return cur;
}

namespace {

std::string letter_fp(const FactLetter& l) { return exact_fingerprint(l.as_word()); }

std::vector<std::string> letter_fps(const Factorization& f) {
    std::vector<std::string> v;
    v.reserve(f.letters.size());
    for (const auto& l : f.letters) v.push_back(letter_fp(l));
    return v;
}

std::string state_key(const std::vector<std::string>& fps) {
    std::string k;
    for (const auto& s : fps) {
        k += s;
        k += '\x1f';
    }
    return k;
}

struct Node {
    Factorization f;
    std::vector<std::string> fps;
    MoveTrace trace;
};

Move invert_move(const Move& m) {
    switch (m.kind) {
        case MoveKind::L:
            return {MoveKind::R, m.index, {}};
        case MoveKind::R:
            return {MoveKind::L, m.index, {}};
        case MoveKind::CyclicLeft:
            return {MoveKind::CyclicRight, 0, {}};
        case MoveKind::CyclicRight:
            return {MoveKind::CyclicLeft, 0, {}};
        case MoveKind::GlobalConj:
            return {MoveKind::GlobalConj, 0, inverse(*m.conjugator)};
    }
    throw UsageError("bad move kind");
}

MoveTrace inverted_trace(const MoveTrace& t) {
    MoveTrace out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(invert_move(*it));
    return out;
}

std::vector<Move> move_alphabet(const Factorization& f, const SearchOptions& opts) {
    std::vector<Move> moves;
    const int n = static_cast<int>(f.letters.size());
    for (int i = 0; i + 1 < n; ++i) {
        moves.push_back({MoveKind::L, i, {}});
        moves.push_back({MoveKind::R, i, {}});
    }
    if (opts.allow_cyclic && n > 1) {
        moves.push_back({MoveKind::CyclicLeft, 0, {}});
        moves.push_back({MoveKind::CyclicRight, 0, {}});
    }
    for (const auto& g : opts.global_conjugators) {
        moves.push_back({MoveKind::GlobalConj, 0, g});
        moves.push_back({MoveKind::GlobalConj, 0, inverse(g)});
    }
    return moves;
}

// One BFS layer expansion; updates seen-map, returns the meeting key if the
// other side already holds it.
std::optional<std::string> expand_layer(std::map<std::string, Node>& seen,
                                        std::vector<std::string>& frontier,
                                        const std::map<std::string, Node>& other,
                                        const SearchOptions& opts) {
    std::vector<std::string> next;
    std::sort(frontier.begin(), frontier.end());
    for (const auto& key : frontier) {
        const Node cur = seen.at(key);  // copy: map may rehash on insert
        for (const auto& mv : move_alphabet(cur.f, opts)) {
            Node nxt;
            nxt.f = apply_move(cur.f, mv);
            nxt.fps = cur.fps;
            // only the touched letters change fingerprints
            if (mv.kind == MoveKind::L || mv.kind == MoveKind::R) {
                nxt.fps[mv.index] = letter_fp(nxt.f.letters[mv.index]);
                nxt.fps[mv.index + 1] = letter_fp(nxt.f.letters[mv.index + 1]);
            } else {
                nxt.fps = letter_fps(nxt.f);
            }
            std::string k = state_key(nxt.fps);
            if (seen.count(k)) continue;
            nxt.trace = cur.trace;
            nxt.trace.push_back(mv);
            seen.emplace(k, std::move(nxt));
            if (other.count(k)) return k;
            next.push_back(k);
            if (seen.size() > opts.max_states)
                throw ComputationError("hurwitz search exceeded the state budget");
        }
    }
    frontier = std::move(next);
    return std::nullopt;
}

}  // namespace

bool letters_equal(const Factorization& f1, const Factorization& f2) {
    if (f1.letters.size() != f2.letters.size()) return false;
    for (size_t i = 0; i < f1.letters.size(); ++i)
        if (letter_fp(f1.letters[i]) != letter_fp(f2.letters[i])) return false;
    return true;
}

std::optional<MoveTrace> hurwitz_equivalent(const Factorization& f1, const Factorization& f2,
                                            const SearchOptions& opts) {
    if (!(f1.surface == f2.surface)) throw SurfaceMismatchError("hurwitz: different surfaces");
    if (f1.letters.size() != f2.letters.size()) return std::nullopt;
    // slides and cyclic moves never change the product; global conjugation does
    if (opts.global_conjugators.empty() && !exact_equal(product(f1), product(f2)))
        return std::nullopt;

    std::map<std::string, Node> fwd, bwd;
    Node n1{f1, letter_fps(f1), {}};
    Node n2{f2, letter_fps(f2), {}};
    const std::string k1 = state_key(n1.fps), k2 = state_key(n2.fps);
    if (k1 == k2) return MoveTrace{};
    fwd.emplace(k1, n1);
    bwd.emplace(k2, n2);
    std::vector<std::string> ff{k1}, bf{k2};

    auto stitch = [&](const std::string& meet) {
        MoveTrace t = fwd.at(meet).trace;
        MoveTrace back = inverted_trace(bwd.at(meet).trace);
        t.insert(t.end(), back.begin(), back.end());
        return t;
    };

    for (int d = 0; d < opts.depth; ++d) {
        auto meet = (d % 2 == 0) ? expand_layer(fwd, ff, bwd, opts)
                                 : expand_layer(bwd, bf, fwd, opts);
        if (meet) {
            MoveTrace t = stitch(*meet);
            // certify before returning
            if (!letters_equal(replay(f1, t), f2))
                throw ComputationError("hurwitz trace failed certification replay");
            return t;
        }
        if (ff.empty() && bf.empty()) break;
    }
    return std::nullopt;
}

}  // namespace fibercalc
