#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("\"") + TROPREAL_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string scn(const std::string& name) {
    return std::string("\"") + TROPREAL_SCENARIO_DIR + "/" + name + ".trop.json\"";
}

fs::path temp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("tropreal_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("hyperbolic report on the stable quartic") {
    Run r = run("hyperbolic --spec " + scn("stable_quartic") + " --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["hyperbolic"] == true);
    CHECK(j["stable"] == true);
    CHECK(j["H_size"] == 15);
    CHECK(j["methods_agree"] == true);
    CHECK(j["kernel_dim"] == 1);

    Run text = run("hyperbolic --spec " + scn("stable_quartic"));
    CHECK(text.code == 0);
    CHECK(text.out.find("H_size: 15") != std::string::npos);
}

TEST_CASE("single point verdicts") {
    Run pos = run("hyperbolic --spec " + scn("stable_quartic") + " --point \"(2,1)\" --eps 0,0 --format json");
    REQUIRE(pos.code == 0);
    CHECK(json::parse(pos.out)["positive"] == true);
    Run neg = run("hyperbolic --spec " + scn("empty_twists_d4") + " --point \"(1,1)\" --eps 0,0 --format json");
    REQUIRE(neg.code == 0);
    json j = json::parse(neg.out);
    CHECK(j["positive"] == false);
    CHECK(j["failing_condition"] == 3);
}

TEST_CASE("analyze the quartic without twists") {
    Run r = run("analyze --spec " + scn("empty_twists_d4") + " --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["admissible"] == true);
    CHECK(j["dividing"] == true);
    CHECK(j["hyperbolic"] == false);
    CHECK(j["kernel_dim"] == 3);
    CHECK(j["components"]["matrix"] == 4);
    CHECK(j["components"]["direct"] == 4);
}

TEST_CASE("intersect a line with a quartic") {
    Run r = run("intersect --a " + scn("line") + " --b " + scn("quartic") + " --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total_multiplicity"] == 4);
    CHECK(j["count"] == 4);
    for (const auto& c : j["components"]) CHECK(c["lift"]["kind"] == "ForcedReal");

    Run second = run("intersect --spec " + scn("line_and_conic") + " --format json");
    REQUIRE(second.code == 0);
    CHECK(json::parse(second.out)["total_multiplicity"] == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("--bogus").code == 1);
    CHECK(run("analyze").code == 1);
    CHECK(run("analyze --spec /nonexistent/x.trop.json").code == 1);
    fs::path both = temp_file("both.trop.json",
                              R"({"curve":{"honeycomb":2},"real_structure":{"signs":"all+","twists":[]}})");
    CHECK(run("analyze --spec \"" + both.string() + "\"").code == 1);
    fs::path broken = temp_file("broken.trop.json", "{\"curve\":");
    CHECK(run("build --spec \"" + broken.string() + "\"").code == 1);
    CHECK(run("intersect --a " + scn("line") + " --b " + scn("line")).code == 2);
    fs::remove(both);
    fs::remove(broken);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string& args : {"hyperbolic --spec " + scn("conic") + " --format json",
                                    "analyze --spec " + scn("quartic"),
                                    "render --spec " + scn("stable_quartic"),
                                    "build --spec " + scn("line_and_conic") + " --format json"}) {
        CAPTURE(args);
        Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--out writes the same bytes to a file") {
    fs::path p = fs::temp_directory_path() / ("tropreal_cli_" + std::to_string(::getpid()) + ".svg");
    Run to_file = run("render --spec " + scn("line") + " --out \"" + p.string() + "\"");
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run("render --spec " + scn("line")).out);
    CHECK(ss.str().find("<svg") != std::string::npos);
    fs::remove(p);
}

TEST_CASE("verify succeeds") {
    Run r = run("verify --seed 7 --trials 3 --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.is_object());
}
