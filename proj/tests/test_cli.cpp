#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stderr is dropped; stdout is captured.
Run run(const std::string& args)
{
    std::string cmd = std::string("\"") + SCL_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse(const Run& r)
{
    json j = json::parse(r.out, nullptr, false);
    CHECK_FALSE(j.is_discarded());
    return j;
}

fs::path scratch()
{
    auto p = fs::temp_directory_path() / "scl_cli_test";
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("gen")
{
    auto dir = scratch();
    auto out = (dir / "t36.g6").string();
    Run r = run("gen turan --r 3 --n 6 --out " + out);
    CHECK(r.code == 0);
    parse(r);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "E]~o");

    Run a = run("gen random --n 6 --p 0.5 --count 10 --seed 1");
    Run b = run("gen random --n 6 --p 0.5 --count 10 --seed 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 10);

    CHECK(run("gen turan --r 5 --n 3").code == 2);
    CHECK(run("gen bogus --n 3").code == 2);
    CHECK(run("gen turan --r 2 --n 4 --out /nonexistent/dir/x.g6").code == 3);
}

TEST_CASE("check")
{
    Run r = run("check --g6 Bw --theorem polyn");
    CHECK(r.code == 0);
    json j = parse(r);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["equality"] == true);

    r = run("check --g6 Bw --theorem theorem1 --r 2");
    CHECK(r.code == 0);
    j = parse(r);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["lhs"].get<double>() == doctest::Approx(8.0));
    CHECK(j["reports"][0]["rhs"].get<double>() == doctest::Approx(9.0));

    CHECK(run("check --g6 \"###\"").code == 2);
    CHECK(run("check --g6 Bw --theorem nonsense").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("check --file /nonexistent/dir/x.g6").code == 3);

    r = run("check --g6 Dhc --theorem theorem3 --r 2 --s 1 --alpha 0.05,1/4");
    CHECK(r.code == 0);
    CHECK(parse(r)["reports"].size() == 2);
}

TEST_CASE("scan")
{
    Run r = run("scan --exhaustive-n 5 --check theorem1 --r 2..3");
    CHECK(r.code == 0);
    json j = parse(r);
    CHECK(j["graphs_checked"] == 1024);
    CHECK(j["violations"].empty());

    r = run("scan --exhaustive-n 6 --check conjecture --r 2 --filter kfree");
    CHECK(r.code == 0);
    parse(r);

    auto dir = scratch();
    auto corpus = (dir / "graphs.g6").string();
    std::ofstream(corpus) << "# small corpus\nBw\nDhc\nE]~o\n";
    r = run("scan --file " + corpus + " --check momo");
    CHECK(r.code == 0);
    CHECK(parse(r)["graphs_checked"] == 3);

    auto csv = (dir / "out.csv").string();
    r = run("scan --file " + corpus + " --check wilf --csv " + csv);
    CHECK(r.code == 0);
    CHECK(fs::exists(csv));

    CHECK(run("scan --exhaustive-n 9").code == 2);
    CHECK(run("scan --exhaustive-n 8").code == 2);
    CHECK(run("scan --exhaustive-n 4 --file " + corpus).code == 2);
    CHECK(run("scan --file /nonexistent/dir/x.g6").code == 3);
    CHECK(run("scan --exhaustive-n 4 --r 3..2").code == 2);
}

TEST_CASE("witness")
{
    Run r = run("witness --g6 \"E]~o\" --r 3 --alpha 0.0000013 --mode exhaustive");
    CHECK(r.code == 0);
    json j = parse(r);
    CHECK(j["verdict"] == "witnessed");
    CHECK(j["witness"]["vertices"].size() == 6);

    r = run("witness --g6 Dhc --r 2 --alpha 0.00001");
    CHECK(r.code == 0);
    CHECK(parse(r)["verdict"] == "premise-failed");

    r = run("witness --g6 \"G?~vf_\" --r 2 --alpha 0 --mode exhaustive");
    CHECK(r.code == 0);
    j = parse(r);
    CHECK(j["thresholds"]["boundary"] == true);
    CHECK(j["witness"]["vertices"].size() == 8);

    CHECK(run("witness --g6 Dhc --r 2 --alpha abc").code == 2);
    CHECK(run("witness --g6 Dhc --r 2 --mode sideways").code == 2);
}

TEST_CASE("gen output feeds check for every generator")
{
    auto dir = scratch();
    const char* gens[] = {
        "turan --r 3 --n 7",
        "multipartite --parts 1,2,3 --isolated 2",
        "random --n 7 --p 0.4 --count 5 --seed 3",
        "named --name cycle --n 6",
        "named --name star --n 5",
    };
    int i = 0;
    for (const char* g : gens) {
        auto path = (dir / ("gen" + std::to_string(i++) + ".g6")).string();
        REQUIRE(run(std::string("gen ") + g + " --out " + path).code == 0);
        Run r = run("check --file " + path);
        CHECK(r.code == 0);
        parse(r);
    }
}

TEST_CASE("tolerance flag")
{
    CHECK(run("--tol 10 check --g6 Bw --theorem wilf").code == 0);
    CHECK(run("--tol 0 check --g6 Bw --theorem wilf").code == 2);
}
