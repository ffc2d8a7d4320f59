#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibercalc/factorization.hpp"
#include "fibercalc/invariants.hpp"
#include "fibercalc/plumbing.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// Curated constants: named words, factorizations, resolution graphs and
// expected invariants, kept in one JSON file so every number used by the
// regression and acceptance suites has a single auditable home.
//
// source tags: "stated"      carried over from the source computation,
//              "derived"     computed by an oracle named in `oracle`,
//              "definitional" true by construction,
//              "unverified"  placeholder where only partial data is pinned;
//                            excluded from pass/fail.

struct BraidData {
    int strands = 0;
    std::vector<std::pair<int, int>> bands;
};

struct BankEntry {
    std::string key;
    std::string kind;  // word | factorization | graph | report | braid | value
    std::string source;
    std::string note;
    std::string oracle;
    std::optional<Word> word;
    std::optional<Factorization> fact;
    std::optional<PlumbingGraph> graph;
    std::optional<BettiReport> report;
    std::optional<BraidData> braid;
    std::optional<int64_t> value;
};

class Bank {
public:
    static const Bank& instance();
    explicit Bank(const std::string& path);

    bool has(const std::string& key) const { return entries_.count(key) > 0; }
    const BankEntry& lookup(const std::string& key) const;
    std::vector<std::string> keys() const;

private:
    std::map<std::string, BankEntry> entries_;
};

struct RegressionLine {
    std::string key;
    std::string status;  // pass | fail | skipped | listed
    std::string detail;
};

std::vector<RegressionLine> run_regressions(const Bank& bank = Bank::instance());

}  // namespace fibercalc
