#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cosep/report.hpp"
#include "support/corpus.hpp"

using namespace cosep;
using namespace cosep::testing;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CommandResult run(const std::string& cmd, const std::string& name, const std::string& n = "regular",
                  const std::string& m = "regular") {
    CommandRequest req;
    req.command = cmd;
    req.path = name + ".json";
    req.n = n;
    req.m = m;
    return run_command(req, read_file(corpus_path(name)));
}

}  // namespace

TEST_CASE("validate") {
    auto ok = run("validate", "grouplike2");
    CHECK(ok.exit == ExitCode::Completed);
    CHECK(ok.report["result"]["passed"] == true);
    CHECK(ok.report["schema_version"] == kReportSchemaVersion);
    CHECK(ok.report["command"]["name"] == "validate");

    std::string text = read_file(corpus_path("divpow2"));
    auto pos = text.find("\"counit\": {\"c0\": \"1\"}");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 22, "\"counit\": {\"c0\": \"1\", \"c1\": \"1\"}");
    CommandRequest req{"validate", "bad.json"};
    auto bad = run_command(req, text);
    CHECK(bad.exit == ExitCode::Validation);
    CHECK(bad.report["status"] == "invalid");
    const json& fails = bad.report["result"]["coring"]["failures"];
    REQUIRE(!fails.empty());
    CHECK(fails[0]["axiom"].get<std::string>().find("counit") != std::string::npos);
    CHECK(!fails[0]["location"].get<std::string>().empty());

    // other commands refuse invalid input the same way
    req.command = "cosep";
    CHECK(run_command(req, text).exit == ExitCode::Validation);

    auto empty = run_command(req, "");
    CHECK(empty.exit == ExitCode::Parse);
    CHECK(empty.report["error"]["kind"] == "ParseError");
}

TEST_CASE("cosep") {
    auto c = run("cosep", "comatrix2");
    CHECK(c.report["result"]["coseparable"] == true);
    CHECK(c.report["result"]["splitting"].contains("witness"));
    CHECK(c.report["result"]["trichotomy"]["agree"] == true);

    auto d = run("cosep", "divpow2");
    CHECK(d.exit == ExitCode::Completed);
    CHECK(d.report["result"]["coseparable"] == false);
    CHECK(d.report["result"]["splitting"].contains("certificate"));
    CHECK(d.report["result"]["trichotomy"]["agree"] == true);

    CHECK(run("cosep", "trivial").report["result"]["coseparable"] == true);
    CHECK(run("cosep", "coext_identity").exit == ExitCode::Parse);
}

TEST_CASE("spaces") {
    auto tuple = [](const json& r) {
        return std::vector<std::size_t>{r["coder"], r["inner_coder"], r["coint"], r["inner_coint"]};
    };
    CHECK(tuple(run("spaces", "divpow2").report["result"]) == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(tuple(run("spaces", "grouplike2").report["result"]) == std::vector<std::size_t>{0, 0, 0, 0});
    auto z = run("spaces", "divpow2", "zero", "regular").report["result"];
    CHECK(z["coint"] == 0);
    CHECK(z["inner_coint"] == 0);
    CHECK(run("spaces", "divpow2", "nosuch").exit == ExitCode::Parse);

    auto e = run("spaces", "coext_divpow_base").report["result"];
    CHECK(e["coder"].get<int>() - e["inner_coder"].get<int>() == 1);
}

TEST_CASE("ext and universal") {
    auto e = run("ext", "divpow2").report["result"];
    CHECK(e["ext"][1] == 1);
    for (const auto& s : e["shift"]) CHECK(s["holds"] == true);

    auto g = run("ext", "grouplike2").report["result"];
    CHECK(g["ext"][1] == 0);
    CHECK(g["h"][1] == 0);

    CommandRequest req{"ext", "comatrix2.json"};
    req.budget = 50;
    CHECK(run_command(req, read_file(corpus_path("comatrix2"))).exit == ExitCode::Budget);

    auto u = run("universal", "divpow2").report["result"];
    CHECK(u["coderivation"]["k_dim"] == 2);
    CHECK(u["coderivation"]["inner"]["found"] == false);
    CHECK(u["cointegration"]["inner"]["found"] == false);
}

TEST_CASE("battery is constant on every corpus coring") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        auto r = run("battery", name);
        REQUIRE(r.exit == ExitCode::Completed);
        CHECK(r.report["result"]["all_equal"] == true);
        for (const auto& b : r.report["result"]["bicomodules"]) {
            CHECK(b["coherent"] == true);
            CHECK(b["induced_relatively_injective"] == true);
        }
    }
    CHECK(run("battery", "trivial").report["result"]["common_value"] == true);
    CHECK(run("battery", "divpow2").report["result"]["common_value"] == false);
}

TEST_CASE("coext") {
    CHECK(run("coext", "coext_identity").report["result"]["separable"] == true);
    CHECK(run("coext", "coext_grouplike").report["result"]["separable"] == true);
    auto d = run("coext", "coext_divpow_base").report["result"];
    CHECK(d["separable"] == false);
    CHECK(d["coherent"] == true);
    auto inc = run("coext", "coext_divpow_inclusion").report["result"];
    CHECK(inc["hypothesis_met"] == false);
    CHECK(inc["separable"].is_null());
    CHECK(run("coext", "divpow2").exit == ExitCode::Parse);
}

TEST_CASE("reports are deterministic") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        for (const char* cmd : {"validate", "cosep", "spaces", "universal"}) {
            auto a = render(run(cmd, name).report, Format::Json);
            auto b = render(run(cmd, name).report, Format::Json);
            CHECK(a == b);
            CHECK(render(run(cmd, name).report, Format::Human) == render(run(cmd, name).report, Format::Human));
        }
    }
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}
