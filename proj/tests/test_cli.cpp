#include "doctest.h"

#include "monocat/json_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

using namespace monocat;
using io::Json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(MONOCAT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(MONOCAT_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

const char* m1_to_zero = R"({"base":"chain:poly:2:2","quiver":"An-linear:2","modules":{"1":{"parts":["M1"]}}})";

}  // namespace

TEST_CASE("mono-check names the failing vertex and kernel") {
    const auto f = write_temp("m1zero.json", m1_to_zero);
    const auto r = cli("mono-check -i " + f);
    CHECK(r.status == 1);
    const auto j = Json::parse(r.out);
    CHECK(j.at("mono") == false);
    REQUIRE(j.at("failures").size() == 1);
    CHECK(j.at("failures")[0].at("vertex") == "2");
    CHECK(j.at("failures")[0].at("kernel").at("parts") == Json::array({"M1"}));

    const auto ok = write_temp("m1m2.json", R"({"base":"chain:poly:2:2","quiver":"An-linear:2",
        "modules":{"1":{"parts":["M1"]},"2":{"parts":["M2"]}},"maps":{"a1":{"entries":[[{"coeff":[1]}]]}}})");
    CHECK(cli("mono-check -i " + ok).status == 0);
}

TEST_CASE("mimo emits (M1 -> M2) and the projection") {
    const auto f = write_temp("m1zero.json", m1_to_zero);
    const auto r = cli("mimo -i " + f);
    REQUIRE(r.status == 0);
    const auto j = Json::parse(r.out);
    const auto rep = io::representation_from_json(j.at("representation"));
    CHECK(rep.module(0).names() == std::vector<std::string>{"M1"});
    CHECK(rep.module(1).names() == std::vector<std::string>{"M2"});
    CHECK(is_mono(rep));
    CHECK(j.at("projection").at("components").contains("1"));
}

TEST_CASE("emitted files re-validate and reload equal") {
    const auto f = write_temp("m1zero.json", m1_to_zero);
    const auto out = std::string(MONOCAT_TEST_TMP) + "/fshriek_out.json";
    REQUIRE(cli("fshriek -i " + f + " -o " + out).status == 0);
    const auto first = io::representation_from_json(io::read_file(out));
    const auto v = cli("validate -i " + out);
    CHECK(v.status == 0);
    CHECK(Json::parse(v.out).at("mono") == true);
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(io::dump(io::to_json(first)) == text);
    CHECK(io::representation_from_json(Json::parse(cli("fshriek -i " + f).out)) == first);
    CHECK(first.length_vector() == std::vector<int>{1, 1});
    // Deterministic output.
    CHECK(cli("kronecker --kind R --n 2 --param 1:1").out == cli("kronecker --kind R --n 2 --param 1:1").out);
}

TEST_CASE("rad2-count suite reports 9 classes") {
    const auto r = cli("verify-suite --suite rad2-count --quiver An-linear:3 --base chain:poly:2:2");
    CHECK(r.status == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("results")[0].at("detail").get<std::string>().rfind("9 classes", 0) == 0);
    CHECK(cli("verify-suite --suite rad2-count --quiver D4 --base rad2nak:2:2").status == 0);
}

TEST_CASE("enumerate and transfer") {
    const auto r = cli("enumerate --quiver An-linear:2 --base chain:int:2:3 --caps 3,4 --mono");
    REQUIRE(r.status == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("classes").size() == 10);
    const auto f = write_temp("class.json", j.at("classes")[9].at("representation").dump());
    const auto t = cli("transfer -i " + f + " --base chain:poly:2:3");
    REQUIRE(t.status == 0);
    CHECK(io::representation_from_json(Json::parse(t.out)).base()->name() == "chain:poly:2:3");
    CHECK(cli("enumerate --quiver kronecker --base chain:poly:2:2").status == 2);
}

TEST_CASE("exit codes for errors and budgets") {
    CHECK(cli("validate -i /nonexistent.json").status == 2);
    CHECK(cli("validate -i " + write_temp("bad.json", "{not json")).status == 2);
    CHECK(cli("validate -i " + write_temp("badlabel.json", R"({"base":"chain:int:2:2","quiver":"An-linear:2","modules":{"1":{"parts":["M9"]}}})")).status == 2);
    CHECK(cli("nosuchcommand").status == 2);
    CHECK(cli("enumerate --quiver An-linear:3 --base chain:poly:2:3 --caps 3,3,3 --mono --budget 10").status == 3);
    CHECK(cli("verify-suite --suite Z9").status == 2);
    CHECK(cli("transfer -i " + write_temp("m1zero.json", m1_to_zero) + " --base chain:int:2:2").status == 2);
}

TEST_CASE("text format") {
    const auto r = cli("kopf -i " + write_temp("m1zero.json", m1_to_zero) + " --format text");
    CHECK(r.status == 0);
    CHECK(r.out.find("l1_kopf") != std::string::npos);
}
