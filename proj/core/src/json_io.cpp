#include "fibercalc/json_io.hpp"

#include <nlohmann/json.hpp>

#include "fibercalc/errors.hpp"

namespace fibercalc {

using njson = nlohmann::ordered_json;

namespace {

njson surface_j(const SurfaceSig& s) {
    return njson{{"genus", s.genus}, {"boundary", s.boundary}, {"marked", s.marked}};
}

SurfaceSig surface_from(const njson& j) {
    SurfaceSig s;
    s.genus = j.at("genus").get<int>();
    s.boundary = j.at("boundary").get<int>();
    s.marked = j.value("marked", 0);
    return s;
}

njson word_j(const Word& w) {
    njson letters = njson::array();
    for (const auto& l : w.letters) letters.push_back(njson{{"gen", l.gen}, {"exp", l.exp}});
    return njson{{"surface", surface_j(w.surface)}, {"letters", letters}};
}

Word word_from(const njson& j) {
    SurfaceSig s = surface_from(j.at("surface"));
    std::vector<WLetter> ls;
    for (const auto& l : j.at("letters"))
        ls.push_back({l.at("gen").get<std::string>(), l.value("exp", 1)});
    return make_word(s, ls);
}

njson fact_j(const Factorization& f) {
    njson letters = njson::array();
    for (const auto& l : f.letters) {
        njson conj = njson::array();
        for (const auto& c : l.conj.letters) conj.push_back(njson{{"gen", c.gen}, {"exp", c.exp}});
        letters.push_back(njson{{"base", l.base}, {"conj", conj}});
    }
    return njson{{"surface", surface_j(f.surface)}, {"letters", letters}};
}

Factorization fact_from(const njson& j) {
    SurfaceSig s = surface_from(j.at("surface"));
    Factorization f{s, {}};
    for (const auto& l : j.at("letters")) {
        std::vector<WLetter> conj;
        if (l.contains("conj"))
            for (const auto& c : l.at("conj"))
                conj.push_back({c.at("gen").get<std::string>(), c.value("exp", 1)});
        f.letters.push_back({l.at("base").get<std::string>(), make_word(s, conj)});
    }
    return f;
}

njson graph_j(const PlumbingGraph& g) {
    njson verts = njson::array();
    for (const auto& v : g.vertices)
        verts.push_back(njson{{"id", v.id}, {"e", v.e}, {"g", v.genus}, {"m", v.m}});
    njson edges = njson::array();
    for (const auto& [a, b] : g.edges) edges.push_back(njson::array({a, b}));
    njson arrows = njson::array();
    for (const auto& a : g.arrows) arrows.push_back(njson{{"at", a.at}, {"m", a.m}});
    return njson{{"vertices", verts}, {"edges", edges}, {"arrows", arrows}};
}

PlumbingGraph graph_from(const njson& j) {
    PlumbingGraph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.push_back({v.at("id").get<int>(), v.at("e").get<int64_t>(), v.value("g", 0),
                              v.value("m", int64_t{1})});
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows"))
            g.arrows.push_back({a.at("at").get<int>(), a.value("m", int64_t{1})});
    g.validate();
    return g;
}

njson report_j(const BettiReport& r) {
    njson j{{"chi", r.chi}, {"b1", r.b1}, {"b2", r.b2}};
    if (r.b2_plus) j["b2_plus"] = *r.b2_plus;
    if (r.b2_minus) j["b2_minus"] = *r.b2_minus;
    if (r.b2_zero) j["b2_zero"] = *r.b2_zero;
    if (r.sigma) j["sigma"] = *r.sigma;
    return j;
}

BettiReport report_from(const njson& j) {
    BettiReport r;
    r.chi = j.value("chi", int64_t{0});
    r.b1 = j.at("b1").get<int64_t>();
    r.b2 = j.at("b2").get<int64_t>();
    if (j.contains("b2_plus")) r.b2_plus = j.at("b2_plus").get<int64_t>();
    if (j.contains("b2_minus")) r.b2_minus = j.at("b2_minus").get<int64_t>();
    if (j.contains("b2_zero")) r.b2_zero = j.at("b2_zero").get<int64_t>();
    if (j.contains("sigma")) r.sigma = j.at("sigma").get<int64_t>();
    return r;
}

njson move_j(const Move& m) {
    switch (m.kind) {
        case MoveKind::L:
            return njson{{"kind", "L"}, {"index", m.index}};
        case MoveKind::R:
            return njson{{"kind", "R"}, {"index", m.index}};
        case MoveKind::CyclicLeft:
            return njson{{"kind", "cyclic-left"}};
        case MoveKind::CyclicRight:
            return njson{{"kind", "cyclic-right"}};
        case MoveKind::GlobalConj: {
            njson conj = njson::array();
            for (const auto& l : m.conjugator->letters)
                conj.push_back(njson{{"gen", l.gen}, {"exp", l.exp}});
            return njson{{"kind", "global-conj"}, {"conjugator", conj}};
        }
    }
    throw UsageError("bad move");
}

std::string dump(const njson& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

njson parse(const std::string& text) {
    try {
        return njson::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const SurfaceSig& s, bool pretty) { return dump(surface_j(s), pretty); }
std::string to_json(const Word& w, bool pretty) { return dump(word_j(w), pretty); }
std::string to_json(const Factorization& f, bool pretty) { return dump(fact_j(f), pretty); }
std::string to_json(const MoveTrace& t, bool pretty) {
    njson arr = njson::array();
    for (const auto& m : t) arr.push_back(move_j(m));
    return dump(arr, pretty);
}
std::string to_json(const PlumbingGraph& g, bool pretty) { return dump(graph_j(g), pretty); }
std::string to_json(const BettiReport& r, bool pretty) { return dump(report_j(r), pretty); }

SurfaceSig surface_from_json(const std::string& text) { return surface_from(parse(text)); }
Word word_from_json(const std::string& text) { return word_from(parse(text)); }
Factorization factorization_from_json(const std::string& text) { return fact_from(parse(text)); }
PlumbingGraph graph_from_json(const std::string& text) { return graph_from(parse(text)); }
BettiReport report_from_json(const std::string& text) { return report_from(parse(text)); }

}  // namespace fibercalc
