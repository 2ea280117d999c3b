#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hijac/motivic.hpp"
#include "hijac/parse.hpp"
#include "hijac/resolve.hpp"
#include "hijac/rg_io.hpp"

using namespace hijac;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("jac prints the worked second-order matrix") {
    auto r = run({"jac", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out ==
          "[3*x1^2, -2*x2, 3*x1, 0, -1]\n"
          "[0, 0, 3*x1^2, -2*x2, 0]\n"
          "[0, 0, 0, 3*x1^2, -2*x2]\n");
}

TEST_CASE("ideal prints canonical generators") {
    auto r = run({"ideal", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out == "x1^2\nx2\n");
}

TEST_CASE("nash-dim") {
    auto r = run({"nash-dim", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out == "dimension: 2\nbasis: 1 x1\n");
}

TEST_CASE("exit-status contract") {
    // usage errors
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"jac", "-f", "x1^3 -", "-d", "2", "-n", "2"}).code == cli::kUsageError);
    CHECK(run({"jac", "-f", "x9", "-d", "2", "-n", "2"}).code == cli::kUsageError);
    CHECK(run({"nash-dim", "-f", "1 + x1", "-d", "2", "-n", "1"}).code == cli::kUsageError);
    // failing check
    auto fail = run({"check", "contact", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1", "--g",
                     "x1^2 - x2^2", "--u", "1", "--sigma", "x1;x2", "--degree-bound", "2"});
    CHECK(fail.code == cli::kCheckFailed);
    // computation abort: separating across a non-rational crossing
    ResolutionGraph node = resolve_curve(parse_poly("x1^2 + x2^2", 2));
    std::ofstream("/tmp/hijac_test_qnode.rg") << write_rg(node);
    CHECK(run({"separate", "--graph", "/tmp/hijac_test_qnode.rg", "--m", "3"}).code ==
          cli::kAborted);
}

TEST_CASE("checks pass on the lemma instances") {
    CHECK(run({"check", "unit", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2", "--u", "1 + x1"}).code ==
          cli::kPass);
    CHECK(run({"check", "det-congruence", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2", "--u",
               "1 + x1"}).code == cli::kPass);
    CHECK(run({"check", "autoeq", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2", "--sigma",
               "x1 + x2^2;x2"}).code == cli::kPass);
    CHECK(run({"check", "inclusion", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2"}).code == cli::kPass);
    CHECK(run({"check", "weighted", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1", "--weights", "2,3",
               "--u", "1 + x1"}).code == cli::kPass);
}

TEST_CASE("resolve then zeta round-trips through the file format") {
    auto res = run({"resolve", "-f", "x1^3 - x2^2", "-d", "2", "-o", "/tmp/hijac_test_cusp.rg"});
    REQUIRE(res.code == cli::kPass);
    std::ifstream in("/tmp/hijac_test_cusp.rg");
    std::stringstream buf;
    buf << in.rdbuf();
    ResolutionGraph direct = resolve_curve(parse_poly("x1^3 - x2^2", 2));
    CHECK(buf.str() == write_rg(direct));
    ResolutionGraph parsed = parse_rg(buf.str());
    CHECK(zeta(parsed, 2) == zeta(direct, 2));

    auto z = run({"zeta", "--graph", "/tmp/hijac_test_cusp.rg", "--expand", "2"});
    CHECK(z.code == cli::kPass);
    CHECK(z.out.find("[X_1] = L*[cl_E0]") != std::string::npos);

    auto n = run({"nearby", "--graph", "/tmp/hijac_test_cusp.rg"});
    CHECK(n.code == cli::kPass);

    auto e = run({"expand", "--graph", "/tmp/hijac_test_cusp.rg", "--upto", "2"});
    CHECK(e.code == cli::kPass);
}

TEST_CASE("compare pipeline on the theorem instance") {
    auto r = run({"compare", "-f", "x1^3 - x2^2", "--g", "(1 + x1^6)*(x1^3 - x2^2)", "-d", "2",
                  "--m-max", "4"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    auto bad = run({"compare", "-f", "x1^3 - x2^2", "--g", "x1^2 - x2^2", "-d", "2"});
    CHECK(bad.code == cli::kCheckFailed);
}

TEST_CASE("json output has stable key order") {
    auto a = run({"nash-dim", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1", "--json"});
    auto b = run({"nash-dim", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1", "--json"});
    CHECK(a.code == cli::kPass);
    CHECK(a.out == b.out);
    CHECK(a.out ==
          "{\n  \"f\": \"x1^3 - x2^2\",\n  \"n\": 1,\n  \"finite\": true,\n"
          "  \"dimension\": 2,\n  \"monomial_basis\": [\n    \"1\",\n    \"x1\"\n  ]\n}\n");
    auto j = run({"jac", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2", "--json"});
    CHECK(j.code == cli::kPass);
    CHECK(j.out.find("\"entries\"") != std::string::npos);
}
