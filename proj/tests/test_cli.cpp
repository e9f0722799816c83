#include "qesqnm/catalog.hpp"
#include "qesqnm/cli.hpp"
#include "qesqnm/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qesqnm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("qesqnm_test_" + name);
}

} // namespace

TEST_CASE("spec JSON round-trips")
{
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        const ModelSpec s = instantiate(p.id);
        const ModelSpec back = spec_from_json(spec_to_json(s));
        CHECK(spec_to_json(back).dump() == spec_to_json(s).dump());
    }
}

TEST_CASE("complex values parse from pairs and numbers")
{
    CHECK(complex_from_json(Json::parse("[1.5, -2]")) == cplx(1.5, -2.0));
    CHECK(complex_from_json(Json::parse("3")) == cplx(3.0, 0.0));
    CHECK_THROWS(complex_from_json(Json::parse("[1]")));
    CHECK_THROWS(complex_from_json(Json::parse("\"x\"")));
}

TEST_CASE("catalog lists every preset")
{
    const Run r = run({"catalog"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out).size() == list_presets().size());
}

TEST_CASE("solve is deterministic and its output reloads")
{
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        const Run a = run({"solve", "--preset", p.id});
        const Run b = run({"solve", "--preset", p.id});
        REQUIRE(a.code == kExitOk);
        CHECK(a.out == b.out);
        const Json spec = Json::parse(a.out).at("spec");
        const Run c = run({"solve", "--spec", spec.dump()});
        REQUIRE(c.code == kExitOk);
        CHECK(c.out == a.out);
    }
}

TEST_CASE("solve output files reload through --spec-file")
{
    const std::filesystem::path f = temp_path("solve.json");
    REQUIRE(run({"solve", "--preset", "morse-qnm", "--N", "2", "--out", f.string()}).code == kExitOk);
    const Run again = run({"solve", "--spec-file", f.string()});
    CHECK(again.code == kExitOk);
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == again.out);
    std::filesystem::remove(f);
}

TEST_CASE("bad input exits 2")
{
    CHECK(run({}).code == kExitInvalidInput);
    CHECK(run({"solve", "--preset", "nope"}).code == kExitInvalidInput);
    CHECK(run({"solve", "--preset", "scarf2-exact", "--c", "1"}).code == kExitInvalidInput);
    CHECK(run({"solve", "--preset", "morse-exact", "--a", "1"}).code == kExitInvalidInput);
    CHECK(run({"solve", "--spec", "{not json"}).code == kExitInvalidInput);
    CHECK(run({"solve"}).code == kExitInvalidInput);
    CHECK(run({"spectrum", "--preset", "sextic-qes"}).code == kExitInvalidInput);
    const Run complex_v = run({"solve", "--spec",
                               R"({"family":"scarf2","A2":0,"A1":[1,0.5],"A0":0,)"
                               R"("alpha":1,"beta":0,"gamma":1,"N":1})"});
    CHECK(complex_v.code == kExitInvalidInput);
    CHECK_FALSE(complex_v.err.empty());
}

TEST_CASE("verification failure exits 3")
{
    CHECK(run({"verify", "--preset", "scarf2-qes-qnm"}).code == kExitOk);
    CHECK(run({"verify", "--preset", "scarf2-qes-qnm", "--tol", "1e-300"}).code ==
          kExitVerificationFailed);
}

TEST_CASE("higher prepotentials exit 4")
{
    const Run r = run({"solve", "--spec",
                       R"({"family":"custom","A2":1,"A1":0,"A0":0,"higher_p":[1],)"
                       R"("alpha":0,"beta":0,"gamma":1,"N":1})"});
    CHECK(r.code == kExitUnsupported);
}

TEST_CASE("potential writes a CSV and the term breakdown")
{
    const std::filesystem::path csv = temp_path("pot.csv");
    const Run r = run({"potential", "--preset", "scarf2-exact", "--grid-points", "200", "--out",
                       csv.string()});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,V_re,V_im,phi_re,phi_im");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    CHECK(rows == 200);
    const std::filesystem::path terms = csv.string() + ".terms.json";
    REQUIRE(std::filesystem::exists(terms));
    std::ifstream tj(terms);
    const Json t = Json::parse(tj);
    CHECK(t.contains("potential_terms"));
    std::filesystem::remove(csv);
    std::filesystem::remove(terms);
}

TEST_CASE("spectrum gives the closed-form ladder")
{
    const Run r = run({"spectrum", "--preset", "morse-exact"});
    REQUIRE(r.code == kExitOk);
    CHECK_FALSE(Json::parse(r.out).at("ladder").empty());
}
