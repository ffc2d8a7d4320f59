#include "fibercalc/bank.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fibercalc/braidmon.hpp"
#include "fibercalc/catalog.hpp"
#include "fibercalc/cover.hpp"
#include "fibercalc/errors.hpp"
#include "fibercalc/homology.hpp"
#include "fibercalc/json_io.hpp"

#ifndef FIBERCALC_BANK_SOURCE_PATH
#define FIBERCALC_BANK_SOURCE_PATH "bank.json"
#endif

namespace fibercalc {

using njson = nlohmann::ordered_json;

namespace {

std::string bank_path() {
    if (const char* env = std::getenv("FIBERCALC_BANK")) return env;
    return FIBERCALC_BANK_SOURCE_PATH;
}

}  // namespace

Bank::Bank(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open bank file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    njson j;
    try {
        j = njson::parse(ss.str());
    } catch (const std::exception& e) {
        throw UsageError(std::string("bank file is not valid JSON: ") + e.what());
    }
    for (const auto& ej : j.at("entries")) {
        BankEntry e;
        e.key = ej.at("key").get<std::string>();
        e.kind = ej.at("kind").get<std::string>();
        e.source = ej.value("source", "");
        e.note = ej.value("note", "");
        e.oracle = ej.value("oracle", "");
        if (ej.contains("word")) e.word = word_from_json(ej.at("word").dump());
        if (ej.contains("factorization"))
            e.fact = factorization_from_json(ej.at("factorization").dump());
        if (ej.contains("graph")) e.graph = graph_from_json(ej.at("graph").dump());
        if (ej.contains("report")) e.report = report_from_json(ej.at("report").dump());
        if (ej.contains("braid")) {
            BraidData b;
            b.strands = ej.at("braid").at("strands").get<int>();
            for (const auto& pr : ej.at("braid").at("bands"))
                b.bands.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
            e.braid = b;
        }
        if (ej.contains("value")) e.value = ej.at("value").get<int64_t>();
        if (!entries_.emplace(e.key, e).second)
            throw UsageError("duplicate bank key: " + e.key);
    }
}

const Bank& Bank::instance() {
    static const Bank bank(bank_path());
    return bank;
}

const BankEntry& Bank::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw UsageError("unknown bank key: " + key);
    return it->second;
}

std::vector<std::string> Bank::keys() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, _] : entries_) out.push_back(k);
    return out;
}

namespace {

using Check = std::function<std::string(const Bank&)>;  // empty = pass

std::string check_power_relation(const Bank& b, const std::string& key, int k) {
    const Word psi1 = *b.lookup("psi1").word;
    const Word lhs = power(psi1, k);
    const Word rhs = *b.lookup(key).word;
    if (!exact_equal(lhs, rhs)) return "mapping classes differ";
    return {};
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> m = {
        {"psi1_2", [](const Bank& b) { return check_power_relation(b, "psi1_2", 2); }},
        {"psi1_4", [](const Bank& b) { return check_power_relation(b, "psi1_4", 4); }},
        {"psi1_5", [](const Bank& b) { return check_power_relation(b, "psi1_5", 5); }},
        {"psi1_6", [](const Bank& b) { return check_power_relation(b, "psi1_6", 6); }},
        {"psi1_7", [](const Bank& b) { return check_power_relation(b, "psi1_7", 7); }},
        {"psi1_8", [](const Bank& b) { return check_power_relation(b, "psi1_8", 8); }},
        {"I_tilde",
         [](const Bank& b) -> std::string {
             const Word it = *b.lookup("I_tilde").word;
             if (!exact_equal(power(it, 2), *b.lookup("D1D2").word))
                 return "square is not the boundary multitwist";
             if (!is_h_identity(homology_eval(power(it, 2)).matrix))
                 return "square does not act trivially on homology";
             return {};
         }},
        {"psi1_fact",
         [](const Bank& b) -> std::string {
             if (!exact_equal(product(*b.lookup("psi1_fact").fact), *b.lookup("psi1").word))
                 return "factorization product differs from the word";
             return {};
         }},
        {"psi1_tilde_fact",
         [](const Bank& b) -> std::string {
             if (!exact_equal(product(*b.lookup("psi1_tilde_fact").fact),
                              *b.lookup("psi1_tilde").word))
                 return "factorization product differs from the word";
             return {};
         }},
        {"graph_g1",
         [](const Bank& b) -> std::string {
             const PlumbingGraph& g = *b.lookup("graph_g1").graph;
             if (!fiber_condition(g).holds) return "fiber condition fails";
             const auto [b1, b2] = betti(g);
             if (b1 != 2 || b2 != 1) return "betti mismatch";
             if (is_negative_definite(g).kind != Definiteness::NegativeDefinite)
                 return "not negative definite";
             const auto bd = boundary_h1(cap_arrows(g));
             if (bd.free_rank != 2 || bd.torsion_order != 3) return "boundary homology mismatch";
             return {};
         }},
        {"graph_g1_plane",
         [](const Bank& b) -> std::string {
             const PlumbingGraph& g = *b.lookup("graph_g1_plane").graph;
             if (!fiber_condition(g).holds) return "fiber condition fails";
             const auto [b1, b2] = betti(g);
             if (b1 != 0 || b2 != 1) return "betti mismatch";
             return {};
         }},
        {"graph_k3",
         [](const Bank& b) -> std::string {
             const PlumbingGraph& g = *b.lookup("graph_k3").graph;
             const auto [b1, b2] = betti(g);
             if (b1 != 0 || b2 != 1) return "betti mismatch";
             if (is_negative_definite(g).kind != Definiteness::NegativeDefinite)
                 return "not negative definite";
             return {};
         }},
        {"X0_report",
         [](const Bank& b) -> std::string {
             const Word w = *b.lookup("X0_word").word;
             BettiReport r = definiteness_report(w, *b.lookup("b2_zero_X0").value,
                                                 *b.lookup("complement_sigma_N0").value);
             if (!(r == *b.lookup("X0_report").report)) return "recomputed report differs";
             return {};
         }},
        {"braid1",
         [](const Bank& b) -> std::string {
             const auto& bd = *b.lookup("braid1").braid;
             if (bennequin_genus(bd.bands, bd.strands) != 2) return "genus is not 2";
             return {};
         }},
        {"cubic_braid",
         [](const Bank& b) -> std::string {
             const Word cube = power(*b.lookup("cubic_braid").word, 3);
             if (!exact_equal(cube, *b.lookup("cubic_multitwist_downstairs").word))
                 return "cube is not the downstairs multitwist";
             return {};
         }},
        {"cubic_multitwist_downstairs",
         [](const Bank& b) -> std::string {
             const Word lifted = lift_word(*b.lookup("cubic_multitwist_downstairs").word);
             if (!exact_equal(lifted, *b.lookup("sigma13_multitwist").word))
                 return "lift is not the boundary multitwist upstairs";
             return {};
         }},
    };
    return m;
}

std::string check_betti_expect(const Bank& b, const std::string& word_key,
                               const std::string& report_key) {
    const BettiReport got = lefschetz_betti(*b.lookup(word_key).word);
    const BettiReport& want = *b.lookup(report_key).report;
    if (got.b1 != want.b1 || got.b2 != want.b2 || got.chi != want.chi)
        return "computed (" + std::to_string(got.b1) + "," + std::to_string(got.b2) +
               ") chi " + std::to_string(got.chi) + " differs";
    return {};
}

}  // namespace

std::vector<RegressionLine> run_regressions(const Bank& bank) {
    std::vector<RegressionLine> out;
    static const std::map<std::string, std::string> betti_pairs = {
        {"betti_psi1", "psi1"},
        {"betti_psi1_2", "psi1_2"},
        {"betti_psi1_tilde", "psi1_tilde"},
        {"betti_psi1_4", "psi1_4"},
        {"betti_psi1_5", "psi1_5"},
        {"betti_psi1_6", "psi1_6"},
        {"betti_psi1_7", "psi1_7"},
        {"betti_psi1_8", "psi1_8"},
        {"betti_X0", "X0_word"},
        {"betti_sigma13_multitwist", "sigma13_multitwist"},
    };
    for (const auto& key : bank.keys()) {
        const BankEntry& e = bank.lookup(key);
        RegressionLine line{key, "listed", ""};
        try {
            if (e.source == "unverified") {
                line.status = "skipped";
                line.detail = "figure-only data, excluded from pass/fail";
            } else if (auto it = checks().find(key); it != checks().end()) {
                const std::string msg = it->second(bank);
                line.status = msg.empty() ? "pass" : "fail";
                line.detail = msg;
            } else if (auto bit = betti_pairs.find(key); bit != betti_pairs.end()) {
                const std::string msg = check_betti_expect(bank, bit->second, key);
                line.status = msg.empty() ? "pass" : "fail";
                line.detail = msg;
            } else if (key == "N0_report") {
                line.status = "skipped";
                line.detail = "transcribed data is internally inconsistent; only sigma is consumed";
            }
        } catch (const std::exception& ex) {
            line.status = "fail";
            line.detail = ex.what();
        }
        out.push_back(line);
    }
    return out;
}

}  // namespace fibercalc
