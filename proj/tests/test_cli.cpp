#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitcalc/json_io.hpp"
#include "orbitcalc/library.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace orbitcalc;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_payload = "") {
    std::string infile = "/tmp/orbitcalc_cli_in.json";
    std::string cmd = std::string(ORBITCALC_CLI_PATH) + " " + args;
    if (!stdin_payload.empty()) {
        std::ofstream f(infile);
        f << stdin_payload;
        f.close();
        cmd += " < " + infile;
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("matroid subcommand round-trips JSON") {
    RunResult r = run("matroid --input -", R"({"uniform":[2,4]})");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    Matroid m = matroid_from_json(j);
    CHECK(m == uniform_matroid(2, 4));
    CHECK(matroid_to_json(m) == j);  // parse(serialize(x)) = x
}

TEST_CASE("matroid from matrix and from constructors") {
    RunResult r = run("matroid --input -",
                      R"({"rows":2,"cols":3,"entries":[["1","0","1"],["0","1","1"]]})");
    CHECK(r.exit_code == 0);
    CHECK(matroid_from_json(Json::parse(r.out)) == uniform_matroid(2, 3));

    RunResult s = run("matroid --input -",
                      R"({"schubert":{"ranks":[1,2],"chain":[[1,2],[1,2,3]]}})");
    CHECK(s.exit_code == 0);
    Matroid sch = matroid_from_json(Json::parse(s.out));
    CHECK(sch.bases() == schubert_bases({1, 2}, {3u, 7u}, 3));

    RunResult t = run("matroid --input -", R"({"truncate":[2,{"uniform":[3,4]}]})");
    CHECK(matroid_from_json(Json::parse(t.out)) == uniform_matroid(2, 4));
}

TEST_CASE("class subcommand: routes agree byte for byte") {
    std::string diag = R"({"uniform":[1,2]})";
    RunResult a = run("class --via duals --r 1 --input -", diag);
    RunResult b = run("class --via formula --r 1 --input -", diag);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    ChowClass c = class_from_json(Json::parse(a.out));
    CHECK(c.n == 2);
    CHECK(c.ctx.r == 1);
}

TEST_CASE("determinism across runs and across --jobs") {
    std::string part = R"({"partition":[[1,2],[3],[4,5]]})";
    RunResult a = run("--seed 7 class --via formula --r 2 --input -", part);
    RunResult b = run("--seed 7 class --via formula --r 2 --input -", part);
    RunResult c = run("--seed 7 --jobs 4 class --via formula --r 2 --input -", part);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("line-sections prints the quintic degree") {
    RunResult r = run("line-sections --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "420\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("class --via formula --r 1 --input /nonexistent.json").exit_code == 2);
    CHECK(run("matroid --input -", R"({"bogus": 1})").exit_code == 2);
    CHECK(run("nonsense-subcommand").exit_code == 2);
    // Rank-deficient matrices yield the zero class, not an error.
    RunResult z = run("class --via duals --r 1 --input -",
                      R"({"rows":2,"cols":3,"entries":[["1","2","3"],["2","4","6"]]})");
    CHECK(z.exit_code == 0);
    CHECK(class_from_json(Json::parse(z.out)).poly.is_zero());
}

TEST_CASE("subdivide emits the shadow-facet cells") {
    RunResult r = run("subdivide --dir 3,1 --input -",
                      R"({"schubert":{"ranks":[1,2],"chain":[[1,2],[1,2,3]]}})");
    CHECK(r.exit_code == 0);
    Subdivision s = subdivision_from_json(Json::parse(r.out));
    CHECK(s.cells.size() >= 1);
    CHECK(indicator_residual(s, 1000, 3));
}

TEST_CASE("dual subcommand evaluates monomial panels") {
    RunResult r = run("dual --r 1 --exps 1,1 --input -", R"({"uniform":[1,2]})");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.at("duals").size() == 1);
    // integral of H^2 over P^1 is -c1
    MPoly val = poly_from_json(j.at("duals")[0].at("value"));
    MPoly c1 = MPoly::variable(2, 0);
    CHECK(val == -c1);
}

TEST_CASE("mhbar, graph, and lattice subcommands") {
    RunResult m = run("mhbar --r 1 --exps 1,1 --input -", R"({"uniform":[2,2]})");
    CHECK(m.exit_code == 0);
    // z * z = (-c1 z - c2) + hbar
    Json j = Json::parse(m.out);
    CHECK(j.at("r") == 1);
    MPoly p = poly_from_json(j);  // vars c1,c2,z,hbar
    Mono hbar(4), zc1(4), c2m(4);
    hbar.set(3, 1);
    zc1.set(0, 1);
    zc1.set(2, 1);
    c2m.set(1, 1);
    CHECK(p.coeff(hbar) == 1);
    CHECK(p.coeff(zc1) == -1);
    CHECK(p.coeff(c2m) == -1);

    RunResult g = run("graph --r 1 --input -", R"({"uniform":[1,1]})");
    CHECK(g.exit_code == 0);
    // The graph closure of a single point is the diagonal: H1 + H + c1.
    MPoly gp = poly_from_json(Json::parse(g.out));  // vars c1,c2,H1,H
    Mono h1(4), h(4), c1m(4);
    h1.set(2, 1);
    h.set(3, 1);
    c1m.set(0, 1);
    CHECK(gp.coeff(h1) == 1);
    CHECK(gp.coeff(h) == 1);
    CHECK(gp.coeff(c1m) == 1);
    CHECK(gp.term_count() == 3);

    RunResult l = run("lattice --r 1 --input - --format text", R"({"uniform":[2,3]})");
    CHECK(l.exit_code == 0);
    CHECK(l.out == "[1,1,1]\n");
}

TEST_CASE("subdivide accepts a path matrix") {
    RunResult r = run("subdivide --path --input -",
                      R"({"rows":2,"cols":4,"entries":[["1","0","1","1"],["0","1","1","t"]]})");
    CHECK(r.exit_code == 0);
    Subdivision s = subdivision_from_json(Json::parse(r.out));
    CHECK(s.cells.size() == 2);
}

TEST_CASE("example-3-1 verifies and exits 0") {
    RunResult r = run("example-3-1 --r 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("verify suites exit 0") {
    for (const char* suite : {"crossroute", "valuativity", "serpar", "mhbar-props"}) {
        RunResult r = run(std::string("verify ") + suite + " --r 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("0 failed") != std::string::npos);
    }
}
