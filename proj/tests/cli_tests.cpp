// End-to-end checks of the command-line surface: exit codes and basic output
// shape, run against the built binary.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

#include "dilemma/fixtures.hpp"
#include "dilemma/game_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli;
int failures = 0;

int run(const std::string& args, std::string* out = nullptr) {
    const std::string capture = (fs::temp_directory_path() / "dilemma_cli_out.txt").string();
    const std::string cmd = cli + " " + args + " > " + capture + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(capture);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        *out = text;
    }
    return WEXITSTATUS(status);
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL " << what << "\n";
        ++failures;
    } else {
        std::cout << "ok   " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];

    const fs::path dir = fs::temp_directory_path() / "dilemma_cli_tests";
    fs::create_directories(dir);
    const auto write_game = [&](const std::string& name, const dilemma::Game& g) {
        const fs::path p = dir / name;
        std::ofstream out(p);
        out << dilemma::game_to_json(g).dump(2);
        return p.string();
    };

    const std::string pd = write_game("pd.json", dilemma::fixtures::tables_12_13());
    const std::string non_pd = write_game("nonpd.json", dilemma::fixtures::tables_5_6());
    const std::string pair = write_game("pair.json", dilemma::fixtures::table1());

    std::string out;

    expect(run("validate-pd " + pd + " --recursive-oracle --lemmas") == 0,
           "validate-pd accepts a dilemma");
    expect(run("validate-pd " + non_pd, &out) == 3 && out.find("witness") != std::string::npos,
           "validate-pd rejects with a witness");

    {
        const fs::path bad = dir / "bad.json";
        std::ofstream(bad) << "{ not json";
        expect(run("validate-pd " + bad.string()) == 4, "malformed input exits 4");
    }
    expect(run("nonsense") == 2, "unknown subcommand exits 2");

    expect(run("check-eq " + pair + " --profile 2,2") == 0, "equilibrium profile accepted");
    expect(run("check-eq " + pair + " --profile 1,1") == 3, "non-equilibrium exits 3");
    expect(run("check-eq " + pair + " --all-nash", &out) == 0 &&
               json::parse(out).size() == 1,
           "equilibrium listing");
    expect(run("check-eq " + pd + " --profile 1,1,1 --strong") == 3,
           "cooperation alone is not strong");

    const std::string contract = (dir / "contract.json").string();
    expect(run("make-contract " + pd + " --scheme theorem1", &out) == 0,
           "contract construction");
    {
        std::ofstream(contract) << out;
        const json c = json::parse(out);
        expect(c["scheme"] == "theorem1" && c["amounts"].size() == 3, "contract file shape");
    }
    expect(run("apply " + pd + " " + contract, &out) == 0, "contract application");
    {
        const dilemma::Game modified = dilemma::game_from_json(json::parse(out));
        const fs::path mod = dir / "modified.json";
        std::ofstream(mod) << json::parse(out).dump();
        expect(run("check-eq " + mod.string() + " --profile 1,1,1 --strong") == 0,
               "cooperation is strong after the contract");
    }
    expect(run("apply " + pd + " " + contract + " --reduced") == 0, "reduced application");

    expect(run("verify-theorems " + pd + " --max-fixed 1", &out) == 0 &&
               json::parse(out)["pass"] == true,
           "theorem verification on a fixture");
    expect(run("verify-theorems " + non_pd) == 3, "verification refuses a non-dilemma");

    expect(run("gen pd --seed 5 --players 3 --max-k 3", &out) == 0, "random instance");
    {
        const fs::path gen = dir / "gen.json";
        std::ofstream(gen) << out;
        expect(run("validate-pd " + gen.string()) == 0, "generated instance validates");
    }

    {
        const fs::path sched = dir / "sched.json";
        std::ofstream(sched) << R"({"contributions": [[2,1,0],[2,1,0],[2,1,0]],
                                    "threshold": 3, "multiplier": 2})";
        expect(run("gen pgg --schedule " + sched.string(), &out) == 0, "provision-point game");
        const json g = json::parse(out);
        expect(g["players"] == 3 && g["strategies"][0] == 3, "provision-point shape");
    }

    expect(run("run-suite --name theorem1 --trials 3 --seed 21 --output json", &out) == 0 &&
               json::parse(out)["pass"] == true,
           "small property suite");
    expect(run("reproduce-paper --output json", &out) == 0 &&
               json::parse(out)["pass"] == true,
           "fixture reproduction");
    expect(run("reproduce-paper --section 4") == 0, "section-level reproduction");

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli checks failed\n";
    return 1;
}
