#pragma once

#include <string>

#include "fibercalc/factorization.hpp"
#include "fibercalc/invariants.hpp"
#include "fibercalc/plumbing.hpp"
#include "fibercalc/word.hpp"

namespace fibercalc {

// Stable JSON encodings used by the CLI and the bank file.  Serialization
// is deterministic: fixed key order, no whitespace unless pretty.

std::string to_json(const SurfaceSig& s, bool pretty = false);
std::string to_json(const Word& w, bool pretty = false);
std::string to_json(const Factorization& f, bool pretty = false);
std::string to_json(const MoveTrace& t, bool pretty = false);
std::string to_json(const PlumbingGraph& g, bool pretty = false);
std::string to_json(const BettiReport& r, bool pretty = false);

SurfaceSig surface_from_json(const std::string& text);
Word word_from_json(const std::string& text);
Factorization factorization_from_json(const std::string& text);
PlumbingGraph graph_from_json(const std::string& text);
BettiReport report_from_json(const std::string& text);

}  // namespace fibercalc
