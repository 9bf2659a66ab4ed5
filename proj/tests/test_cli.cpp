#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gdz/json_io.hpp"

using namespace gdz;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string out_file = "cli_out.json.tmp";
    std::string cmd = std::string(GDZ_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

std::string write_matrix(const std::string& name, const ExactMatrix& m) {
    write_json_file(name, matrix_to_json(m));
    return name;
}

} // namespace

TEST_CASE("compute: invertible, nilpotent and idempotent-like inputs") {
    ExactMatrix diag{{2, 0}, {0, 3}};
    write_matrix("m1.tmp.json", diag);
    CmdResult r = run_cli("compute m1.tmp.json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["index"] == 0);
    CHECK(exact_matrix_from_json(j["inverse"]) == inverse(diag));
    CHECK(exact_matrix_from_json(j["projector"]).is_zero());

    write_matrix("m2.tmp.json", ExactMatrix{{0, 1}, {0, 0}});
    r = run_cli("compute m2.tmp.json");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["index"] == 2);
    CHECK(exact_matrix_from_json(j["inverse"]).is_zero());

    ExactMatrix idem{{1, 1}, {0, 0}};
    write_matrix("m3.tmp.json", idem);
    r = run_cli("compute m3.tmp.json");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["index"] == 1);
    CHECK(exact_matrix_from_json(j["inverse"]) == idem);
}

TEST_CASE("compute: parse failures exit 3") {
    std::ofstream bad("bad.tmp.json");
    bad << "{ not json";
    bad.close();
    CHECK(run_cli("compute bad.tmp.json").exit_code == 3);
    CHECK(run_cli("compute missing-file.json").exit_code == 3);
    std::remove("bad.tmp.json");
}

TEST_CASE("route: match, violation and force") {
    // L2.1 with a = 0, b = diag(2): match
    write_matrix("a0.tmp.json", ExactMatrix::zeros(2, 2));
    write_matrix("b2.tmp.json", ExactMatrix{{2, 0}, {0, 2}});
    CmdResult r = run_cli("route L2.1 a0.tmp.json b2.tmp.json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["discrepancy"] == 0.0);

    // T3.1 with scalars a = b = 1: hypothesis violated, exit 1
    ExactMatrix one(1, 1);
    one.at(0, 0) = ExactScalar(1);
    write_matrix("one.tmp.json", one);
    r = run_cli("route T3.1 one.tmp.json one.tmp.json");
    CHECK(r.exit_code == 1);
    j = json::parse(r.out);
    CHECK(j["hypothesis"]["satisfied"] == false);
    CHECK(j["result"].is_null());

    // forced run still reports the discrepancy and hypothesis
    r = run_cli("route T3.1 one.tmp.json one.tmp.json --force");
    CHECK(r.exit_code != 3);
    j = json::parse(r.out);
    CHECK(j["hypothesis"]["satisfied"] == false);
    CHECK_FALSE(j["result"].is_null());

    // T4.1 scalar blocks A=1,B=1,C=0,D=0: match
    ExactMatrix zero1(1, 1);
    write_matrix("zero1.tmp.json", zero1);
    r = run_cli("route T4.1 one.tmp.json one.tmp.json zero1.tmp.json zero1.tmp.json");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["match"] == true);
    ExactMatrix expect{{1, 1}, {0, 0}};
    CHECK(exact_matrix_from_json(j["result"]) == expect);

    // wrong arity: exit 3
    CHECK(run_cli("route T4.1 one.tmp.json one.tmp.json").exit_code == 3);
    CHECK(run_cli("route NOPE one.tmp.json one.tmp.json").exit_code == 3);
}

TEST_CASE("explore: determinism and exit discipline") {
    CmdResult r1 = run_cli("explore H27 --trials 6 --dim 2 --seed 1");
    CHECK(r1.exit_code == 0);
    json a = json::parse(r1.out);
    CHECK(a["summary"]["pass"] == 6);

    CmdResult r2 = run_cli("explore H27 --trials 6 --dim 2 --seed 1 --jobs 3");
    CHECK(r2.exit_code == 0);
    json b = json::parse(r2.out);
    a.erase("meta");
    b.erase("meta");
    CHECK(a.dump() == b.dump());

    // empty campaign exits 0
    CHECK(run_cli("explore H22 --trials 0").exit_code == 0);

    // bad parameters exit 3
    CHECK(run_cli("explore NOPE --trials 2").exit_code == 3);
    CHECK(run_cli("explore H22 --trials 2 --dim 0").exit_code == 3);
}

TEST_CASE("explore: violated campaign records and exits 0") {
    CmdResult r = run_cli("explore H27 --trials 4 --dim 2 --seed 2 --violate 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    for (const auto& t : j["trials"]) {
        if (t["error"].is_null()) CHECK(t["hypothesis"]["satisfied"] == false);
    }
}

TEST_CASE("float routes through the cli") {
    FloatMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = FloatScalar(0.0);
    b.at(0, 0) = FloatScalar(2.0);
    write_json_file("fa.tmp.json", matrix_to_json(a));
    write_json_file("fb.tmp.json", matrix_to_json(b));
    CmdResult r = run_cli("route L2.1 fa.tmp.json fb.tmp.json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["match"] == true);

    // mixed modes are refused
    write_matrix("ea.tmp.json", ExactMatrix::zeros(1, 1));
    CHECK(run_cli("route L2.1 ea.tmp.json fb.tmp.json").exit_code == 3);
}
