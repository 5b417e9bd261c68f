#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "wvc/experiment.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
};

auto cli(std::string const& args) -> Outcome
{
    auto const cmd = std::string(WVC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) { out.append(buf.data(), n); }
    auto const status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

auto slurp(fs::path const& p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("wvc_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    auto write(std::string const& name, std::string const& text) const -> std::string
    {
        std::ofstream(path / name, std::ios::binary) << text;
        return (path / name).string();
    }
};

} // namespace

TEST_CASE("generate")
{
    TempDir tmp;
    auto a = (tmp.path / "a.wvc").string();
    auto b = (tmp.path / "b.wvc").string();
    CHECK(cli("generate --kind star --k 3 --wmax 1 --seed 7 --out " + a).code == 0);
    CHECK(cli("generate --kind star --k 3 --wmax 1 --seed 7 --out " + b).code == 0);
    CHECK(slurp(a) == "p wvc 4 3\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 0 2\ne 0 3\n");
    CHECK(slurp(a) == slurp(b));
    CHECK(cli("generate --kind star --k 3 --wmax 0 --seed 7").code == 2);
    CHECK(cli("generate --kind hypercube --n 3").code == 2);
    CHECK(cli("generate --bogus").code == 2);
}

TEST_CASE("lp and exact")
{
    TempDir tmp;
    auto tri = tmp.write("tri.wvc", "p wvc 3 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 0 2\ne 1 2\n");
    auto r = cli("lp --instance " + tri);
    CHECK(r.code == 0);
    CHECK(r.out == "value2 3\nLP 1.5\nassign2 111\ny 0.5 0.5 0.5\n");
    r = cli("lp --instance " + tri + " --select 111");
    CHECK(r.out == "value2 0\nLP 0\nassign2 ---\ny - - -\n");
    CHECK(cli("lp --instance " + tri + " --select 11").code == 2);

    auto edge = tmp.write("edge.wvc", "p wvc 2 1\nv 0 1\nv 1 5\ne 0 1\n");
    CHECK(cli("lp --instance " + edge).out == "value2 2\nLP 1\nassign2 20\ny 1 0\n");

    CHECK(cli("exact --instance " + tri).out == "opt 2\nwitness 011\n");
    auto star = tmp.write("star.wvc", "p wvc 4 3\nv 0 2\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 0 2\ne 0 3\n");
    CHECK(cli("exact --instance " + star).out == "opt 2\nwitness 1000\n");
    auto edgeless = tmp.write("none.wvc", "p wvc 2 0\nv 0 1\nv 1 1\n");
    CHECK(cli("exact --instance " + edgeless).out == "opt 0\nwitness 00\n");

    auto broken = tmp.write("broken.wvc", "p wvc 2 1\nv 0 1\ne 0 1\n");
    CHECK(cli("exact --instance " + broken).code == 3);
    CHECK(cli("exact --instance " + (tmp.path / "missing.wvc").string()).code == 3);
}

TEST_CASE("run")
{
    TempDir tmp;
    auto tri = tmp.write("tri.wvc", "p wvc 3 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 0 2\ne 1 2\n");
    auto r = cli("run --algo demo --instance " + tri + " --target-ratio 2 --budget 100000 --seed 3 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["target_met"] == true);
    CHECK(j["record"]["ratio"].get<double>() <= 2.0);
    CHECK(j["record"]["opt"] == 2);
    CHECK(cli("run --algo demo --instance " + tri + " --target-ratio 2 --budget 100000 --seed 3 --format json").out ==
          r.out);

    auto big = "--kind gnp --n 14 --p 0.5 --wmax 10 --graph-seed 1";
    auto censored = cli(std::string("run --algo gsemo ") + big + " --budget 0 --target-ratio 1 --format json");
    CHECK(censored.code == 1);
    CHECK(nlohmann::json::parse(censored.out)["record"]["censored"] == true);

    CHECK(cli("run --algo nope --instance " + tri + " --budget 5").code == 2);
    CHECK(cli("run --instance " + tri + " --budget 5 --epsilon 0.5 --target-ratio 2").code == 2);
    CHECK(cli("run --instance " + tri).code == 0); // any-cover target
    CHECK(cli("run --instance " + tri + " --budget 10 --format text").out.find("algorithm") != std::string::npos);
}

TEST_CASE("experiment")
{
    TempDir tmp;
    auto inst = "--kind gnp --n 10 --p 0.4 --wmax 8 --graph-seed 5";
    auto one = (tmp.path / "one.csv").string();
    auto many = (tmp.path / "many.csv").string();
    auto base = std::string("experiment --algo gsemo ") + inst + " --trials 40 --seed 9 --budget 100000 "
                "--target-ratio 2 --check-bounds ";
    CHECK(cli(base + "--threads 1 --out " + one).code == 0);
    CHECK(cli(base + "--threads 4 --out " + many).code == 0);
    CHECK(slurp(one) == slurp(many));
    CHECK(slurp(one + ".summary.json") == slurp(many + ".summary.json"));

    auto rows = wvc::parse_csv(slurp(one));
    CHECK(rows.size() == 40);
    auto summary = nlohmann::json::parse(slurp(one + ".summary.json"));
    CHECK(summary["bound_violations"] == 0);
    CHECK(summary["trials"] == 40);

    auto j = cli(std::string("experiment --algo dpbea ") + inst + " --trials 3 --seed 1 --budget 5000 --format json");
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["trials"].size() == 3);

    // trials = 1 reproduces the record of `run` with the same seed
    auto single = cli(std::string("experiment --algo demo ") + inst +
                      " --trials 1 --seed 4 --budget 20000 --target-ratio 1.5 --format json");
    auto run = cli(std::string("run --algo demo ") + inst + " --seed 4 --budget 20000 --target-ratio 1.5 --format json");
    CHECK(nlohmann::json::parse(single.out)["trials"][0] == nlohmann::json::parse(run.out)["record"]);
}
