#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(FG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_tmp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/fg_cli_" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("frobnicate").code == 2);
    CHECK(run("lame").code == 2);
    CHECK(run("lame --n 2 --bogus").code == 2);
    CHECK(run("lame --n 2 --format pdf").code == 2);
    CHECK(run("covers verify").code == 2);
    CHECK(run("covers verify --case nope").code == 2);
}

TEST_CASE("lame latex output") {
    auto r = run("lame --n 2 --format latex");
    CHECK(r.code == 0);
    CHECK(r.out.find("f_s = z^{2} - 3g_2") != std::string::npos);
    CHECK(r.out.find("f_i = 3e + z") != std::string::npos);
}

TEST_CASE("JSON run report round-trips and echoes tolerances") {
    auto r = run("periods genus2 --xi 1,2,3 --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(nlohmann::json::parse(j.dump()) == j);
    CHECK(j["pass"] == true);
    CHECK(j["tolerances"]["pipeline"] == 1e-9);
    for (auto& a : j["assertions"]) {
        CHECK(a.contains("value"));
        CHECK(a.contains("threshold"));
        CHECK(a.contains("pass"));
    }
}

TEST_CASE("covers verify and search") {
    auto one = run("covers verify --case table-n3 --json");
    CHECK(one.code == 0);
    auto all = run("covers verify --all --json");
    CHECK(all.code == 0);
    CHECK(nlohmann::json::parse(all.out)["outputs"]["count"].get<int>() >= 13);
    auto curve = write_tmp("n3.json", R"({"k":2,"p":"(2376*z^3*g3 - 91125*g3^2 - 16*z^6)*z","label":"n3"})");
    auto s = run("covers search --curve " + curve + " --template cubic-in-z --max-degree 3 --json");
    CHECK(s.code == 0);
    CHECK(s.out.find("105948") != std::string::npos);
}

TEST_CASE("theta eval and reduce") {
    auto tau = write_tmp("tau.json", "[[[0.1,1.2],[0.3,0.1]],[[0.3,0.1],[-0.2,0.9]]]");
    auto t = run("theta eval --v 0.1,0.2 --tau-file " + tau + " --char '1/2,0;0,1/2' --json");
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["outputs"]["value"].is_array());
    auto m = write_tmp("m.json", "{\"m\": [[0,0,2,1],[1,0,0,0]]}");
    auto g2 = run("periods genus2 --json");
    auto gtau = write_tmp("g2tau.json", nlohmann::json::parse(g2.out)["outputs"]["periods"]["tau"].dump());
    auto red = run("reduce --m-file " + m + " --tau-file " + gtau + " --json");
    CHECK(red.code == 0);
    auto j = nlohmann::json::parse(red.out);
    CHECK(j["outputs"]["hopf"] == 2);
    // a relation that does not hold for this tau is an assertion failure
    auto bad = write_tmp("bad.json", "[[1,0,0,1],[0,1,1,0]]");
    CHECK(run("reduce --m-file " + bad + " --tau-file " + gtau).code == 1);
}

TEST_CASE("check all is deterministic for a fixed seed") {
    auto a = run("check all --seed 3 --json"), b = run("check all --seed 3 --json");
    CHECK(a.code == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja["assertions"] == jb["assertions"]);
}
