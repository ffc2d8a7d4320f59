#include <doctest.h>

#include <sstream>

#include "fibercalc/cli.hpp"

using namespace fibercalc;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify returns 0 on equal words and prints JSON") {
    auto r = run({"verify", "--lhs", "bank:I_tilde^2", "--rhs", "bank:D1*D2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
}

TEST_CASE("verify returns 1 on different mapping classes") {
    auto r = run({"verify", "--lhs", "bank:psi1", "--rhs", "bank:psi1_tilde"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"equal\":false") != std::string::npos);
}

TEST_CASE("verify with both backends") {
    auto r = run({"verify", "--lhs", "bank:psi1_4^2", "--rhs", "bank:psi1_8", "--backend",
                  "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"homology\":true") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    auto r = run({"verify", "--lhs", "bank:psi1"});
    CHECK(r.code == 2);
    auto r2 = run({"nonsense"});
    CHECK(r2.code == 2);
}

TEST_CASE("computation errors exit with 3") {
    // blowing down a vertex that is not a (-1) curve
    auto r = run({"plumbing", "--graph", "bank:graph_g1", "--op", "blowdown:0"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("plumbing subcommand") {
    auto r = run({"plumbing", "--graph", "bank:graph_g1", "--op", "definite"});
    CHECK(r.code == 0);
    CHECK(r.out.find("negative_definite") != std::string::npos);

    auto hj = run({"plumbing", "--op", "hj:5/3"});
    CHECK(hj.code == 0);
    CHECK(hj.out.find("[-2,-3]") != std::string::npos);

    auto fiber = run({"plumbing", "--graph", "bank:graph_g1", "--op", "fiber"});
    CHECK(fiber.code == 0);
    CHECK(fiber.out.find("\"holds\":true") != std::string::npos);
}

TEST_CASE("invariants subcommand reproduces the signature pipeline") {
    auto r = run({"invariants", "--word", "bank:X0_word", "--b2zero", "4",
                  "--complement-sigma", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"sigma\":-13") != std::string::npos);
    CHECK(r.out.find("\"b2_minus\":13") != std::string::npos);
}

TEST_CASE("bank subcommand lists and runs") {
    auto r = run({"bank", "--key", "psi1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"source\":\"stated\"") != std::string::npos);

    auto lst = run({"bank", "--list"});
    CHECK(lst.code == 0);
    CHECK(lst.out.find("graph_g1") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
    auto a = run({"invariants", "--word", "bank:psi1_8"});
    auto b = run({"invariants", "--word", "bank:psi1_8"});
    CHECK(a.out == b.out);
    auto c = run({"bank", "--list"});
    auto d = run({"bank", "--list"});
    CHECK(c.out == d.out);
}

TEST_CASE("hurwitz subcommand emits a trace") {
    auto r = run({"hurwitz", "--f1", "bank:psi1_fact", "--f2", "bank:psi1_fact",
                  "--conj-f2-by", "bank:psi1", "--depth", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equivalent\":true") != std::string::npos);
    CHECK(r.out.find("\"trace\"") != std::string::npos);
}
