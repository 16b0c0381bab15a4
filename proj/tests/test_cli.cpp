#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "defobs/cli.hpp"
#include "defobs/rational.hpp"

using namespace defobs;
using nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage and unknown commands exit 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(contains(run({"frobnicate"}).err, "unknown command"));
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("dinv") {
    RunResult r = run({"dinv", "surgery(T(2,3),2)"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "{-7/4, -1/4}"));

    RunResult sum = run({"dinv", "P # -O"});
    CHECK(sum.status == 0);
    CHECK(contains(sum.out, "{1/4, 7/4}"));

    RunResult s3 = run({"dinv", "S3"});
    CHECK(contains(s3.out, "{0}"));

    RunResult big = run({"dinv", "3*P # -25*O"});
    CHECK(big.status == 0);
    CHECK(contains(big.out, "table too large"));
    CHECK(contains(big.out, "max d = -1/4"));

    CHECK(run({"dinv", "nonsense"}).status == 2);
    CHECK(run({"dinv", "sigma(2,3,7)"}).status == 2);  // no d data
    CHECK(run({"dinv"}).status == 2);
}

TEST_CASE("obstruct-neg") {
    RunResult r = run({"obstruct-neg", "P # -9*O"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "max d = -1/4"));
    CHECK(contains(r.out, "threshold = 1/4"));
    CHECK(contains(r.out, "verdict: obstructed"));

    RunResult boundary = run({"obstruct-neg", "P # -8*O"});
    CHECK(contains(boundary.out, "verdict: inconclusive"));
}

TEST_CASE("cs with and without the oracle") {
    RunResult r = run({"cs", "sigma(2,3,5)"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "alpha(1,1,1)"));
    CHECK(contains(r.out, "CS = 1/120"));
    CHECK(contains(r.out, "CS = 49/120"));
    CHECK(contains(r.out, "spectrum: {0, 1/120, 49/120}"));

    RunResult oracle = run({"cs", "sigma(2,3,5)", "--oracle"});
    CHECK(oracle.status == 0);
    CHECK(contains(oracle.out, "2 accepted"));
    CHECK(contains(oracle.out, "agrees with exact enumeration"));

    CHECK(run({"cs", "O"}).status == 2);  // no flat data for O
}

TEST_CASE("gap") {
    RunResult r = run({"gap", "P"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "= 1/120"));
    CHECK(contains(run({"gap", "P", "--beyond-minimal"}).out, "= 2/5"));
    CHECK(contains(run({"gap", "-P", "--to", "trivial"}).out, "= 71/120"));
    CHECK(contains(run({"gap", "O"}).out, "= 1/48"));
    CHECK(contains(run({"gap", "-O"}).out, "= 1/48"));
    CHECK(run({"gap", "P", "--from", "bogus"}).status == 2);
}

TEST_CASE("ends") {
    RunResult r = run({"ends", "--index", "1"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "3 patterns"));
    CHECK(contains(r.out, "(iii)"));

    RunResult loose = run({"ends", "--index", "1", "--no-reducible-rule"});
    CHECK(contains(loose.out, "B=[4]"));

    CHECK(run({"ends"}).status == 2);
    CHECK(run({"ends", "--index", "99"}).status == 2);
}

TEST_CASE("audit-pos") {
    RunResult r = run({"audit-pos", "P # -9*O"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "verdict: contradiction"));
    CHECK(contains(r.out, "no positive-definite filling"));
    CHECK(contains(r.out, "±|H|"));

    RunResult grouped = run({"audit-pos", "P # -9*O", "--group", "2,2"});
    CHECK(contains(grouped.out, "±4"));

    RunResult blocked = run({"audit-pos", "P # -P"});
    CHECK(blocked.status == 0);
    CHECK(contains(blocked.out, "verdict: inconclusive"));

    CHECK(run({"audit-pos", "-9*O"}).status == 2);
}

TEST_CASE("theorem") {
    RunResult r = run({"theorem", "--m", "1", "--k", "9"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "obstructed"));
    CHECK(contains(r.out, "contradiction"));
    // exact final line
    std::string expected_tail =
        "no definite filling of either sign; does not embed in any closed symplectic "
        "4-manifold\n";
    REQUIRE(r.out.size() >= expected_tail.size());
    CHECK(r.out.substr(r.out.size() - expected_tail.size()) == expected_tail);

    RunResult boundary = run({"theorem", "--m", "1", "--k", "8"});
    CHECK(contains(boundary.out, "negative-definite: max d = 0"));
    CHECK(contains(boundary.out, "inconclusive"));
    CHECK(contains(boundary.out, "contradiction"));
    CHECK_FALSE(contains(boundary.out, "does not embed"));

    CHECK(run({"theorem", "--m", "1"}).status == 2);
}

TEST_CASE("alexander") {
    RunResult r = run({"alexander", "T(2,3)"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "t^-1 - 1 + t"));
    CHECK(contains(r.out, "t_0..t_1: [1, 0]"));

    RunResult t25 = run({"alexander", "T(2,5)", "--json"});
    json env = json::parse(t25.out);
    CHECK(env["results"]["polynomial"] == "t^-2 - t^-1 + 1 - t + t^2");
    CHECK(env["results"]["torsion_coefficients"] == json::array({1, 1, 0}));  // t_0..t_genus

    CHECK(run({"alexander", "T(2,4)"}).status == 2);
    CHECK(run({"alexander", "K(2,3)"}).status == 2);
}

TEST_CASE("json envelopes are stable, sorted, and string-rational") {
    RunResult r = run({"cs", "sigma(2,3,5)", "--json"});
    CHECK(r.status == 0);
    json env = json::parse(r.out);
    CHECK(env["command"] == "cs");
    CHECK(env["input"] == "sigma(2,3,5)");
    CHECK(env["provenance"].is_array());
    CHECK(env["results"]["spectrum"] == json::array({"0", "1/120", "49/120"}));
    for (const auto& v : env["results"]["spectrum"]) {
        CHECK(v.is_string());
        CHECK_NOTHROW(Rational::parse(v.get<std::string>()));
    }

    json dinv = json::parse(run({"dinv", "P # -O", "--json"}).out);
    CHECK(dinv["results"]["d_invariants"] == json::array({"1/4", "7/4"}));
    CHECK(dinv["results"]["max_d"] == "7/4");

    json theorem = json::parse(run({"theorem", "--m", "1", "--k", "9", "--json"}).out);
    CHECK(theorem["results"]["negative_definite"]["verdict"] == "obstructed");
    CHECK(theorem["results"]["positive_definite"]["verdict"] == "contradiction");
    CHECK(theorem["results"]["symplectic_embedding_obstructed"] == true);

    json audit = json::parse(run({"audit-pos", "P # -9*O", "--group", "2", "--json"}).out);
    CHECK(audit["results"]["reducibles"]["z"] == 2);
    CHECK(audit["results"]["reducibles"]["a"] == 0);
    CHECK(audit["results"]["end_count"] == "±2");
}

TEST_CASE("dispatch is deterministic") {
    std::vector<std::vector<std::string>> invocations = {
        {"dinv", "P # -O"},
        {"cs", "sigma(2,3,5)", "--oracle", "--json"},
        {"theorem", "--m", "2", "--k", "17"},
        {"ends", "--index", "1", "--no-reducible-rule", "--json"},
    };
    for (const auto& args : invocations) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
