#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "borel/rd_file.hpp"
#include "borel/root_datum.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(BOREL_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse_doc(const RunResult& r) {
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("rootdatum subcommand reports lattice facts") {
    auto doc = parse_doc(run_cli("rootdatum --type A2 --isogeny sc"));
    CHECK(doc["tool"] == "borel");
    CHECK(doc["result"]["positive_roots"] == 3);
    CHECK(doc["result"]["weyl_order"] == 6);
    CHECK(doc["result"]["fundamental_degrees"] == nlohmann::json({2, 3}));

    auto adj = parse_doc(run_cli("rootdatum --type A1 --isogeny adjoint"));
    CHECK(adj["result"]["simple_roots"] == nlohmann::json({{1}}));
}

TEST_CASE("rootdatum rejects a malformed pairing and names the entry") {
    const std::string path = "cli_bad_pairing.rd";
    {
        std::ofstream out(path);
        out << "{\"lattice_rank\":2,\"simple_roots\":[[2,-1],[-1,2]],"
               "\"simple_coroots\":[[1,0],[0,2]],\"label\":\"broken\"}\n";
    }
    auto r = run_cli("rootdatum --file " + path, /*merge_stderr=*/true);
    std::remove(path.c_str());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("Cartan entry") != std::string::npos);
}

TEST_CASE("torsion subcommand golden values") {
    auto gl3 = parse_doc(run_cli("torsion --type A2 --isogeny gl"));
    CHECK(gl3["result"]["torsion_index"] == 1);

    auto pgl2 = parse_doc(run_cli("torsion --type A1 --isogeny adjoint"));
    CHECK(pgl2["result"]["torsion_index"] == 2);
    REQUIRE(pgl2["result"]["witnesses"].size() == 1);
    CHECK(pgl2["result"]["witnesses"][0]["prime"] == 2);
    CHECK(pgl2["result"]["witnesses"][0]["monomial"] == "x1");

    auto g2 = parse_doc(run_cli("torsion --type G2 --cross-check"));
    CHECK(g2["result"]["cross_check"]["agreement"] == true);
}

TEST_CASE("split subcommand verdicts across rings") {
    auto ok = parse_doc(run_cli("split --type A1 --isogeny sc --invert \"\" --cutoff 6"));
    CHECK(ok["result"]["verdict"] == true);
    CHECK(ok["result"]["ring"] == "Z");
    REQUIRE(ok["result"]["records"].size() == 7);

    auto fail = parse_doc(run_cli("split --type A1 --isogeny adjoint --invert \"\" --cutoff 6"));
    CHECK(fail["result"]["verdict"] == false);
    CHECK(fail["result"]["failure"]["degree"] == 1);
    CHECK(fail["result"]["basis"].is_null());

    auto localized = parse_doc(run_cli("split --type A1 --isogeny adjoint --invert \"2\" --cutoff 6"));
    CHECK(localized["result"]["verdict"] == true);
    CHECK(localized["result"]["ring"] == "Z[1/2]");

    auto modp = parse_doc(run_cli("split --type A1 --isogeny adjoint --mod-p 3 --cutoff 6"));
    CHECK(modp["result"]["verdict"] == true);
    CHECK(modp["result"]["ring"] == "F_3");
}

TEST_CASE("motive subcommand series") {
    auto flag = parse_doc(run_cli("motive flag --type A2"));
    CHECK(flag["result"]["series"]["coefficients"] ==
          nlohmann::json({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    CHECK(flag["result"]["series"]["truncation"].is_null());

    auto bg = parse_doc(run_cli("motive bg --type A1 --isogeny sc --trunc -12"));
    const auto coeffs = bg["result"]["series"]["coefficients"];
    REQUIRE(coeffs.size() == 6);
    for (const auto& pair : coeffs) {
        CHECK(pair[0].get<int>() % 2 == 0);
        CHECK(pair[1] == 1);
    }

    auto check = parse_doc(run_cli("motive check --type B2 --trunc -16"));
    CHECK(check["result"]["identity_holds"] == true);

    auto bt = parse_doc(run_cli("motive bt --rank 2 --trunc -5"));
    CHECK(bt["result"]["series"]["coefficients"] ==
          nlohmann::json({{-5, 4}, {-4, 3}, {-3, 2}, {-2, 1}}));
}

TEST_CASE("charmap subcommand expands and cross-checks") {
    auto doc = parse_doc(run_cli("charmap --type A1 --isogeny adjoint --poly x1 --cross-check"));
    REQUIRE(doc["result"]["expansion"]["terms"].size() == 1);
    CHECK(doc["result"]["expansion"]["terms"][0]["coefficient"] == 2);
    CHECK(doc["result"]["expansion"]["terms"][0]["element"] == "S[s1]");
    CHECK(doc["result"]["cross_check"]["agreement"] == true);

    auto empty = parse_doc(run_cli("charmap --type A1 --isogeny adjoint --poly x1^2"));
    CHECK(empty["result"]["expansion"]["terms"].empty());

    auto bad = run_cli("charmap --type A2 --poly \"x1 + 1\"");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical stdout") {
    for (const std::string args :
         {std::string("rootdatum --type G2"), std::string("torsion --type A2 --isogeny gl"),
          std::string("split --type A1 --isogeny adjoint --invert \"2\" --cutoff 4"),
          std::string("motive check --type A2 --trunc -10"),
          std::string("charmap --type B2 --poly x1*x2 --cross-check")}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        REQUIRE(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("table format carries the same numbers") {
    auto table = run_cli("torsion --type A1 --isogeny adjoint --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("torsion_index: 2") != std::string::npos);

    auto rdt = run_cli("rootdatum --type A2 --format table");
    CHECK(rdt.out.find("weyl_order: 6") != std::string::npos);
    CHECK(rdt.out.find("positive_roots: 3") != std::string::npos);
}

TEST_CASE("usage errors exit with status one") {
    CHECK(run_cli("torsion --type Q7").exit_code == 1);
    CHECK(run_cli("torsion").exit_code == 1);
    CHECK(run_cli("split --type A1 --invert \"2\" --mod-p 3").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("motive bg --type A1 --trunc 5").exit_code == 1);
}

TEST_CASE("isogeny spellings sc and simply_connected agree") {
    auto a = run_cli("rootdatum --type B2 --isogeny sc");
    auto b = run_cli("rootdatum --type B2 --isogeny simply_connected");
    auto da = nlohmann::json::parse(a.out), db = nlohmann::json::parse(b.out);
    CHECK(da["result"] == db["result"]);
}

TEST_CASE("description files work through the command line") {
    const std::string path = "cli_roundtrip.rd";
    {
        auto rd = borel::build_root_datum(borel::Series::C, 2, borel::Isogeny::simply_connected);
        std::ofstream out(path);
        out << borel::root_datum_to_json(rd).dump() << "\n";
    }
    auto doc = parse_doc(run_cli("rootdatum --file " + path));
    CHECK(doc["result"]["weyl_order"] == 8);
    CHECK(doc["result"]["positive_roots"] == 4);
    auto tor = parse_doc(run_cli("torsion --file " + path));
    CHECK(tor["result"]["torsion_index"] == 1);
    std::remove(path.c_str());
}
