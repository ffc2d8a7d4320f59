#include "fibercalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fibercalc/bank.hpp"
#include "fibercalc/braidmon.hpp"
#include "fibercalc/catalog.hpp"
#include "fibercalc/cover.hpp"
#include "fibercalc/errors.hpp"
#include "fibercalc/homology.hpp"
#include "fibercalc/json_io.hpp"

namespace fibercalc {

using njson = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Word references: "bank:KEY", products with '*', powers with '^int',
// "@file.json" or a literal JSON object.
Word parse_word_ref(const std::string& ref) {
    if (!ref.empty() && ref[0] == '@') return word_from_json(slurp(ref.substr(1)));
    if (!ref.empty() && ref[0] == '{') return word_from_json(ref);

    std::string body = ref;
    if (body.rfind("bank:", 0) == 0) body = body.substr(5);

    std::optional<Word> acc;
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, '*')) {
        int exp = 1;
        std::string key = term;
        if (auto pos = term.find('^'); pos != std::string::npos) {
            key = term.substr(0, pos);
            exp = std::stoi(term.substr(pos + 1));
        }
        if (key.empty()) throw UsageError("empty term in word reference '" + ref + "'");
        const Word w = power(*Bank::instance().lookup(key).word, exp);
        acc = acc ? compose(*acc, w) : w;
    }
    if (!acc) throw UsageError("empty word reference");
    return *acc;
}

Factorization parse_fact_ref(const std::string& ref) {
    if (!ref.empty() && ref[0] == '@') return factorization_from_json(slurp(ref.substr(1)));
    if (!ref.empty() && ref[0] == '{') return factorization_from_json(ref);
    std::string key = ref;
    if (key.rfind("bank:", 0) == 0) key = key.substr(5);
    const BankEntry& e = Bank::instance().lookup(key);
    if (!e.fact) throw UsageError("bank entry '" + key + "' is not a factorization");
    return *e.fact;
}

PlumbingGraph parse_graph_ref(const std::string& ref) {
    if (!ref.empty() && ref[0] == '@') return graph_from_json(slurp(ref.substr(1)));
    if (!ref.empty() && ref[0] == '{') return graph_from_json(ref);
    std::string key = ref;
    if (key.rfind("bank:", 0) == 0) key = key.substr(5);
    const BankEntry& e = Bank::instance().lookup(key);
    if (!e.graph) throw UsageError("bank entry '" + key + "' is not a graph");
    return *e.graph;
}

cxd parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return cxd(std::stod(s), 0);
    return cxd(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::string dump(const njson& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

int cmd_verify(const std::string& lhs, const std::string& rhs, const std::string& backend,
               bool pretty, std::ostream& out) {
    const Word w1 = parse_word_ref(lhs);
    const Word w2 = parse_word_ref(rhs);
    njson j;
    bool equal = true;
    if (backend == "exact" || backend == "both") {
        const bool e = exact_equal(w1, w2);
        j["exact"] = e;
        equal = equal && e;
    }
    if (backend == "homology" || backend == "both") {
        const bool h = homology_eval(w1) == homology_eval(w2);
        j["homology"] = h;
        equal = equal && h;
    }
    j["equal"] = equal;
    out << dump(j, pretty) << "\n";
    return equal ? 0 : 1;
}

int cmd_hurwitz(const std::string& f1r, const std::string& f2r, const std::string& conj_f2,
                int depth, bool cyclic, const std::vector<std::string>& conj_refs, bool pretty,
                std::ostream& out) {
    Factorization f1 = parse_fact_ref(f1r);
    Factorization f2 = parse_fact_ref(f2r);
    if (!conj_f2.empty()) f2 = conjugate_factorization(f2, parse_word_ref(conj_f2));
    SearchOptions opts;
    opts.depth = depth;
    opts.allow_cyclic = cyclic;
    for (const auto& r : conj_refs) opts.global_conjugators.push_back(parse_word_ref(r));
    auto trace = hurwitz_equivalent(f1, f2, opts);
    njson j;
    j["equivalent"] = trace.has_value();
    if (trace) j["trace"] = njson::parse(to_json(*trace));
    out << dump(j, pretty) << "\n";
    return trace ? 0 : 1;
}

int cmd_invariants(const std::string& word_ref, const std::string& cap, int64_t b2zero,
                   std::optional<int64_t> complement_sigma, bool pretty, std::ostream& out) {
    Word w = parse_word_ref(word_ref);
    njson j;
    if (!cap.empty()) {
        const bool d1 = cap.find("d1") != std::string::npos;
        const bool d2 = cap.find("d2") != std::string::npos;
        CappedWord cw = cap_word(w, d1, d2);
        j["capped_word"] = njson::parse(to_json(cw.word));
        j["blowup_count"] = cw.blowup_count;
        w = cw.word;
    }
    const BettiReport r = complement_sigma || b2zero
                              ? definiteness_report(w, b2zero, complement_sigma)
                              : definiteness_report(w, 0);
    j["report"] = njson::parse(to_json(r));
    out << dump(j, pretty) << "\n";
    return 0;
}

int cmd_plumbing(const std::string& graph_ref, const std::string& op, bool pretty,
                 std::ostream& out) {
    njson j;
    if (op.rfind("hj:", 0) == 0) {
        const std::string frac = op.substr(3);
        auto slash = frac.find('/');
        if (slash == std::string::npos) throw UsageError("--op hj:n/q");
        const auto string_ = hj_string(std::stoll(frac.substr(0, slash)),
                                       std::stoll(frac.substr(slash + 1)));
        j["euler_numbers"] = string_;
        out << dump(j, pretty) << "\n";
        return 0;
    }
    PlumbingGraph g = parse_graph_ref(graph_ref);
    if (op == "matrix") {
        j["matrix"] = intersection_matrix(g);
    } else if (op == "definite") {
        const auto rep = is_negative_definite(g);
        j["definite"] = rep.kind == Definiteness::NegativeDefinite ? "negative_definite"
                        : rep.kind == Definiteness::NegativeSemidefinite
                            ? "negative_semidefinite"
                            : "indefinite";
        j["corank"] = rep.corank;
    } else if (op == "betti") {
        const auto [b1, b2] = betti(g);
        j["b1"] = b1;
        j["b2"] = b2;
    } else if (op == "fiber") {
        const auto fc = fiber_condition(g);
        j["holds"] = fc.holds;
        njson res = njson::array();
        for (const auto& [id, r] : fc.residuals)
            res.push_back(njson{{"vertex", id}, {"residual", r}});
        j["residuals"] = res;
    } else if (op.rfind("blowdown:", 0) == 0) {
        const int v = std::stoi(op.substr(9));
        j["graph"] = njson::parse(to_json(blow_down(g, v)));
    } else if (op == "cap") {
        j["graph"] = njson::parse(to_json(cap_arrows(g)));
    } else if (op == "boundary") {
        const auto bh = boundary_h1(g);
        j["free_rank"] = bh.free_rank;
        j["torsion_order"] = bh.torsion_order;
    } else {
        throw UsageError("unknown plumbing op '" + op + "'");
    }
    out << dump(j, pretty) << "\n";
    return 0;
}

int cmd_braidmon(const std::string& family, const std::string& s_str, const std::string& base_str,
                 const std::string& paths_file, const std::string& emit, bool pretty,
                 std::ostream& out) {
    const PolyFamily fam = family_from_name(family, parse_complex(s_str));
    const cxd base = parse_complex(base_str);
    njson j;
    if (emit == "critical") {
        const CriticalValues cv = critical_values(fam);
        njson vals = njson::array();
        for (const auto& v : cv.values) vals.push_back(njson{{"re", v.real()}, {"im", v.imag()}});
        j["critical_values"] = vals;
        if (cv.ambient_nodal)
            j["ambient_nodal"] =
                njson{{"re", cv.ambient_nodal->real()}, {"im", cv.ambient_nodal->imag()}};
        out << dump(j, pretty) << "\n";
        return 0;
    }
    std::vector<TPath> paths;
    if (!paths_file.empty()) {
        const njson pj = njson::parse(slurp(paths_file));
        for (const auto& pl : pj) {
            TPath p;
            for (const auto& pt : pl)
                p.points.push_back(cxd(pt.at("re").get<double>(), pt.at("im").get<double>()));
            paths.push_back(p);
        }
    } else {
        paths = default_paths(fam, base);
    }
    if (emit == "factorization") {
        FactorizationOptions opts;
        opts.base = base;
        const Factorization f = braid_factorization(fam, paths, opts);
        j["factorization"] = njson::parse(to_json(f));
        out << dump(j, pretty) << "\n";
        return 0;
    }
    if (emit == "permutation" || emit == "events") {
        // track around the circle through the base enclosing all critical values
        TPath circle;
        const int N = 64;
        for (int k = 0; k <= N; ++k) {
            const double th = 2.0 * M_PI * k / N;
            circle.points.push_back(base * std::polar(1.0, th));
        }
        const TrackResult res = track_roots(fam, circle);
        if (emit == "permutation") {
            j["permutation"] = res.permutation;
        } else {
            njson evs = njson::array();
            for (const auto& e : res.events)
                evs.push_back(njson{{"kind", e.kind == BraidEvent::Kind::Crossing ? "crossing"
                                                                                  : "boundary_exit"},
                                    {"i", e.i},
                                    {"j", e.j},
                                    {"sign", e.sign},
                                    {"at", e.at}});
            j["events"] = evs;
        }
        out << dump(j, pretty) << "\n";
        return 0;
    }
    throw UsageError("unknown --emit mode '" + emit + "'");
}

int cmd_bank(bool list, const std::string& key, bool run, bool pretty, std::ostream& out) {
    const Bank& bank = Bank::instance();
    njson j;
    if (run) {
        njson lines = njson::array();
        bool all_ok = true;
        for (const auto& line : run_regressions(bank)) {
            lines.push_back(njson{{"key", line.key}, {"status", line.status},
                                  {"detail", line.detail}});
            if (line.status == "fail") all_ok = false;
        }
        j["regressions"] = lines;
        out << dump(j, pretty) << "\n";
        return all_ok ? 0 : 1;
    }
    if (!key.empty()) {
        const BankEntry& e = bank.lookup(key);
        j["key"] = e.key;
        j["kind"] = e.kind;
        j["source"] = e.source;
        j["note"] = e.note;
        if (!e.oracle.empty()) j["oracle"] = e.oracle;
        if (e.word) j["word"] = njson::parse(to_json(*e.word));
        if (e.fact) j["factorization"] = njson::parse(to_json(*e.fact));
        if (e.graph) j["graph"] = njson::parse(to_json(*e.graph));
        if (e.report) j["report"] = njson::parse(to_json(*e.report));
        if (e.value) j["value"] = *e.value;
        out << dump(j, pretty) << "\n";
        return 0;
    }
    (void)list;
    njson keys = njson::array();
    for (const auto& k : bank.keys()) {
        const BankEntry& e = bank.lookup(k);
        keys.push_back(njson{{"key", k}, {"kind", e.kind}, {"source", e.source}});
    }
    j["keys"] = keys;
    out << dump(j, pretty) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mapping class group word calculus for singular fibrations"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* verify = app.add_subcommand("verify", "compare two words as mapping classes");
    std::string lhs, rhs, backend = "exact";
    verify->add_option("--lhs", lhs)->required();
    verify->add_option("--rhs", rhs)->required();
    verify->add_option("--backend", backend)->check(CLI::IsMember({"exact", "homology", "both"}));

    auto* hurwitz = app.add_subcommand("hurwitz", "search for a Hurwitz move sequence");
    std::string f1r, f2r, conj_f2;
    int depth = 8;
    bool cyclic = false;
    std::vector<std::string> conj_refs;
    hurwitz->add_option("--f1", f1r)->required();
    hurwitz->add_option("--f2", f2r)->required();
    hurwitz->add_option("--conj-f2-by", conj_f2, "conjugate f2 by this word first");
    hurwitz->add_option("--depth", depth);
    hurwitz->add_flag("--cyclic", cyclic);
    hurwitz->add_option("--conj", conj_refs, "global conjugator words for the search");

    auto* invariants = app.add_subcommand("invariants", "Betti and signature data of a word");
    std::string word_ref, cap;
    int64_t b2zero = 0;
    double complement_sigma_in = 0;
    bool have_complement = false;
    invariants->add_option("--word", word_ref)->required();
    invariants->add_option("--cap", cap, "comma list from d1,d2");
    invariants->add_option("--b2zero", b2zero);
    auto* cs = invariants->add_option("--complement-sigma", complement_sigma_in);
    invariants->callback([&] { have_complement = cs->count() > 0; });

    auto* plumbing = app.add_subcommand("plumbing", "resolution graph calculus");
    std::string graph_ref, op;
    plumbing->add_option("--graph", graph_ref);
    plumbing->add_option("--op", op)->required();

    auto* braidmon = app.add_subcommand("braidmon", "numerical braid monodromy");
    std::string family = "quartic", s_str = "0.1", base_str = "1", paths_file, emit = "critical";
    braidmon->add_option("--family", family);
    braidmon->add_option("--s", s_str);
    braidmon->add_option("--base", base_str);
    braidmon->add_option("--paths", paths_file);
    braidmon->add_option("--emit", emit);

    auto* bank = app.add_subcommand("bank", "curated constants");
    bool list = false, run = false;
    std::string key;
    bank->add_flag("--list", list);
    bank->add_option("--key", key);
    bank->add_flag("--run", run);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(lhs, rhs, backend, pretty, out);
        if (hurwitz->parsed())
            return cmd_hurwitz(f1r, f2r, conj_f2, depth, cyclic, conj_refs, pretty, out);
        if (invariants->parsed())
            return cmd_invariants(word_ref, cap, b2zero,
                                  have_complement
                                      ? std::optional<int64_t>(
                                            static_cast<int64_t>(complement_sigma_in))
                                      : std::nullopt,
                                  pretty, out);
        if (plumbing->parsed()) return cmd_plumbing(graph_ref, op, pretty, out);
        if (braidmon->parsed())
            return cmd_braidmon(family, s_str, base_str, paths_file, emit, pretty, out);
        if (bank->parsed()) return cmd_bank(list, key, run, pretty, out);
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace fibercalc
