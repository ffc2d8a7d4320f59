#include "fibercalc/gword.hpp"

#include <cmath>
#include <cstdlib>

namespace fibercalc {

GWord reduced(const GroupModel& m, const GWord& w) {
    GWord out;
    out.ls.reserve(w.ls.size());
    auto push = [&](GLetter l) {
        if (m.involutive(l.gen)) l.exp = ((l.exp % 2) + 2) % 2;
        if (l.exp == 0) return;
        while (!out.ls.empty() && out.ls.back().gen == l.gen) {
            l.exp += out.ls.back().exp;
            out.ls.pop_back();
            if (m.involutive(l.gen)) l.exp = ((l.exp % 2) + 2) % 2;
            if (l.exp == 0) return;
        }
        out.ls.push_back(l);
    };
    for (const auto& l : w.ls) push(l);
    return out;
}

GWord gmul(const GroupModel& m, const GWord& a, const GWord& b) {
    GWord w = a;
    w.ls.insert(w.ls.end(), b.ls.begin(), b.ls.end());
    return reduced(m, w);
}

GWord ginv(const GroupModel& m, const GWord& a) {
    GWord w;
    w.ls.reserve(a.ls.size());
    for (auto it = a.ls.rbegin(); it != a.ls.rend(); ++it)
        w.ls.push_back(GLetter{it->gen, -it->exp});
    return reduced(m, w);
}

GWord gconj(const GroupModel& m, const GWord& w, const GWord& by) {
    return gmul(m, gmul(m, ginv(m, by), w), by);
}

int parity(const GroupModel& m, const GWord& w) {
    int64_t p = 0;
    for (const auto& l : w.ls) p += l.exp;
    return static_cast<int>(((p % 2) + 2) % 2);
}

int64_t syllable_weight(const GWord& w) {
    int64_t n = 0;
    for (const auto& l : w.ls) n += std::llabs(l.exp);
    return n;
}

std::string to_string(const GroupModel& m, const GWord& w) {
    if (w.ls.empty()) return "1";
    std::string s;
    for (const auto& l : w.ls) {
        if (!s.empty()) s += '.';
        s += (l.gen == m.hole()) ? "y" : ("x" + std::to_string(l.gen + 1));
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

}  // namespace fibercalc
