#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihrep/cli.hpp"
#include "ihrep/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

using Json = nlohmann::ordered_json;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ihrep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Exit status of the real binary; stdout and stderr are discarded.
int spawn(const std::string& args) {
    const std::string command = std::string(IHREP_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string golden(const std::string& name) {
    std::ifstream in(std::filesystem::path(IHREP_GOLDEN_DIR) / name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json json_of(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line)
            return true;
    return false;
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const std::string& value) : name_(name) { ::setenv(name, value.c_str(), 1); }
    ~ScopedEnv() { ::unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

}  // namespace

TEST_CASE("betti") {
    const auto r = run({"betti", "--genus", "2"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "betti: 1,0,1,0,1,0,1"));
    CHECK(has_line(r.out, "series: 1 + t^2 + t^4 + t^6"));
    const auto structural = run({"betti", "--genus", "2", "--route", "structural"});
    CHECK(has_line(structural.out, "betti: 1,0,1,0,1,0,1"));
    CHECK(has_line(structural.out, "route: structural"));

    const auto doc = json_of({"betti", "--genus", "3"});
    CHECK(doc["data"]["betti"].size() == 13);
    CHECK(doc["data"]["palindromic"] == true);
}

TEST_CASE("ring") {
    const auto zero = run({"ring", "--k", "0"});
    CHECK(zero.code == 0);
    CHECK(has_line(zero.out, "gen alpha"));
    CHECK(has_line(zero.out, "gen gamma"));
    CHECK(has_line(zero.out, "hilbert series: 1/(1 - t^4)"));

    const auto doc = json_of({"ring", "--k", "2", "--order", "6"});
    CHECK(doc["genus"].is_null());
    CHECK(doc["data"]["expansion"].size() == 7);
    CHECK(doc["data"]["expansion"][6] == 2);
}

TEST_CASE("pairing") {
    const auto two = json_of({"pairing", "--genus", "2"});
    const auto& entries = two["data"]["entries"];
    REQUIRE(entries.size() == 4);
    for (const auto& e : entries) {
        CHECK(e["value"]["num"] == "8");
        CHECK(e["value"]["den"] == "1");
    }

    const auto three = json_of({"pairing", "--genus", "3"});
    std::vector<std::pair<int, int>> groups;
    for (const auto& e : three["data"]["entries"]) {
        const std::pair<int, int> mn{e["m"].get<int>(), e["n"].get<int>()};
        if (groups.empty() || groups.back() != mn)
            groups.push_back(mn);
    }
    CHECK(groups == std::vector<std::pair<int, int>>{{6, 0}, {4, 1}});

    const auto latex = run({"pairing", "--genus", "3", "--format", "latex"});
    CHECK(latex.out.find("\\begin{tabular}") != std::string::npos);
    CHECK(latex.out.find("$-128$") != std::string::npos);
}

TEST_CASE("eq-series and e-basis") {
    const auto closed = json_of({"eq-series", "--genus", "2", "--order", "6"});
    CHECK(closed["data"]["coefficients"] == Json::parse("[1,0,1,4,2,4,7]"));
    const auto structural = json_of({"eq-series", "--genus", "3", "--route", "structural"});
    const auto closed3 = json_of({"eq-series", "--genus", "3"});
    CHECK(structural["data"]["coefficients"] == closed3["data"]["coefficients"]);

    const auto e2 = json_of({"e-basis", "--k", "2"});
    CHECK(e2["data"]["size"] == 4);
    CHECK(e2["checks"][0]["status"] == "pass");
    const auto decomposition = json_of({"e-basis", "--genus", "2"});
    CHECK(decomposition["data"]["betti"] == Json::parse("[1,0,1,0,1,0,1]"));
}

TEST_CASE("verify") {
    const auto two = json_of({"verify", "--genus", "2"});
    CHECK(two["data"]["overall"] == "pass");
    REQUIRE(two["checks"].size() == ihrep::verification_check_names().size());
    for (const auto& c : two["checks"])
        CHECK(c["status"] == "pass");

    const auto six = json_of({"verify", "--genus", "6"});
    CHECK(six["data"]["overall"] == "pass");
    std::vector<std::string> skipped;
    for (const auto& c : six["checks"])
        if (c["status"] == "skipped")
            skipped.push_back(c["name"].get<std::string>());
    for (const char* name : {"equivariant-route-agreement", "e-independence", "top-identity"})
        CHECK(std::find(skipped.begin(), skipped.end(), name) != skipped.end());
    for (const auto& c : six["checks"])
        CHECK(c["status"] != "fail");

    const auto raised = json_of({"verify", "--genus", "5", "--unsafe-genus-cap", "5"});
    for (const auto& c : raised["checks"])
        if (c["name"] == "top-identity" || c["name"] == "e-independence")
            CHECK(c["status"] == "pass");
}

TEST_CASE("report status ignores skipped checks") {
    ihrep::VerificationReport report;
    report.checks.push_back({"a", 2, ihrep::CheckStatus::pass, "", std::nullopt});
    report.checks.push_back({"b", 2, ihrep::CheckStatus::skipped, "", std::nullopt});
    CHECK(report.passed());
    report.checks.push_back({"c", 2, ihrep::CheckStatus::fail, "", 7});
    CHECK_FALSE(report.passed());
}

TEST_CASE("json output is schema-shaped and round-trips byte for byte") {
    const std::vector<std::vector<std::string>> commands{
        {"betti", "--genus", "4"},          {"betti", "--genus", "3", "--route", "structural"},
        {"ring", "--k", "3"},               {"pairing", "--genus", "4"},
        {"eq-series", "--genus", "2"},      {"e-basis", "--k", "3"},
        {"e-basis", "--genus", "4"},        {"verify", "--genus", "3"},
    };
    for (auto args : commands) {
        args.insert(args.end(), {"--format", "json"});
        const auto r = run(args);
        CAPTURE(args[0]);
        REQUIRE(r.code == 0);
        const Json doc = Json::parse(r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
        std::vector<std::string> keys;
        for (const auto& [key, value] : doc.items())
            keys.push_back(key);
        CHECK(keys == std::vector<std::string>{"genus", "command", "data", "checks"});
        CHECK(doc["command"] == args[0]);
    }
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "--genus", "4", "--format", "json"},
                                                                   {"verify", "--genus", "3"},
                                                                   {"ring", "--k", "4", "--format", "latex"}}) {
        const auto first = run(args);
        for (int i = 0; i < 3; ++i)
            CHECK(run(args).out == first.out);
    }
}

TEST_CASE("golden files") {
    CHECK(run({"betti", "--genus", "2", "--format", "json"}).out == golden("betti-g2.json"));
    CHECK(run({"pairing", "--genus", "2", "--format", "json"}).out == golden("pairing-g2.json"));
    CHECK(run({"pairing", "--genus", "3", "--format", "latex"}).out == golden("pairing-g3.tex"));
    CHECK(run({"ring", "--k", "2"}).out == golden("ring-k2.txt"));
    CHECK(run({"verify", "--genus", "2", "--format", "json"}).out == golden("verify-g2.json"));
}

TEST_CASE("cache directory changes nothing but speed") {
    const auto dir = std::filesystem::temp_directory_path() / "ihrep-cli-cache";
    std::filesystem::remove_all(dir);
    const auto plain = run({"ring", "--k", "3", "--format", "json"});
    const auto verify_plain = run({"verify", "--genus", "3", "--format", "json"});
    {
        ScopedEnv env(ihrep::kCacheDirEnv, dir.string());
        CHECK(run({"ring", "--k", "3", "--format", "json"}).out == plain.out);
        CHECK(std::filesystem::exists(dir / "relation-ideal-k3.gb"));
        // Second run reads the files back.
        CHECK(run({"ring", "--k", "3", "--format", "json"}).out == plain.out);
        CHECK(run({"verify", "--genus", "3", "--format", "json"}).out == verify_plain.out);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors in process") {
    CHECK(run({"betti", "--genus", "1"}).code == 2);
    CHECK(run({"betti"}).code == 2);
    CHECK(run({"ring", "--k", "-1"}).code == 2);
    CHECK(run({"betti", "--genus", "3", "--order", "11"}).code == 2);
    CHECK(run({"betti", "--genus", "3", "--order", "12"}).code == 0);
    CHECK(run({"betti", "--genus", "2", "--route", "sideways"}).code == 2);
    CHECK(run({"betti", "--genus", "2", "--format", "yaml"}).code == 2);
    CHECK(run({"eq-series", "--genus", "6", "--route", "structural"}).code == 2);
    CHECK(run({"e-basis", "--genus", "3", "--k", "2"}).code == 2);
    CHECK(run({"e-basis"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    const auto bad = run({"betti", "--genus", "1"});
    CHECK(bad.out.empty());
    CHECK(bad.err.find("--genus") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit codes of the binary") {
    CHECK(spawn("betti --genus 2") == 0);
    CHECK(spawn("betti --genus 1") == 2);
    CHECK(spawn("ring --k -1") == 2);
    CHECK(spawn("ring --k 0") == 0);
    CHECK(spawn("verify --genus 2") == 0);
    CHECK(spawn("verify --genus 6") == 0);
    CHECK(spawn("pairing --genus 2 --format json") == 0);
    CHECK(spawn("verify") == 2);
    CHECK(spawn("nonsense") == 2);
}
