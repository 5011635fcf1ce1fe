#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args, const std::string& stdin_text = "")
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(stdin_text);
    Run r;
    r.code = slidewave::cli::run_cli(args, out, err, in);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string tmp(const std::string& name)
{
    return (std::filesystem::path(SLIDEWAVE_TEST_TMP) / name).string();
}

std::string write(const std::string& name, const std::string& body)
{
    const std::string p = tmp(name);
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

} // namespace

TEST_CASE("distance prints the value or exceeds k")
{
    const std::string x = write("cli_x.txt", "ABA");
    const std::string y = write("cli_y.txt", "AAB");
    for (const char* algo : {"dp", "band", "rowwave", "stream-lce", "stream-periodic", "auto"}) {
        const Run r = cli({"distance", x, y, "--k", "2", "--algo", algo});
        CHECK(r.code == 0);
        CHECK(r.out == "2\n");
    }
    const Run over = cli({"distance", x, y, "--k", "1"});
    CHECK(over.code == 4);
    CHECK(over.out == "exceeds k\n");
}

TEST_CASE("standard input and newline stripping")
{
    const std::string y = write("cli_nl.txt", "ACGT\n");
    CHECK(cli({"distance", "-", y, "--k", "3"}, "ACGT").out == "1\n");
    CHECK(cli({"distance", "-", y, "--k", "3", "--strip-newlines"}, "ACGT\n").out == "0\n");
    CHECK(cli({"distance", "-", "-", "--k", "3"}).code == 2);
}

TEST_CASE("auto-k reports the budget it settled on")
{
    const std::string x = write("cli_ak_x.txt", std::string(100, 'A'));
    std::string b(100, 'A');
    b[10] = b[40] = b[70] = 'C';
    const std::string y = write("cli_ak_y.txt", b);
    const Run r = cli({"distance", x, y, "--auto-k"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(r.err == "k=4 passes=3\n");

    const Run capped = cli({"distance", x, y, "--auto-k", "--k-ceiling", "2", "--json"});
    CHECK(capped.code == 4);
    const auto j = nlohmann::json::parse(capped.out);
    CHECK(j["ceiling_exceeded"] == true);
    CHECK(j["distance"].is_null());
    CHECK(cli({"distance", x, y, "--auto-k", "--k", "3"}).code == 2);
}

TEST_CASE("json report fields")
{
    const std::string x = write("cli_j_x.txt", "GATTACA");
    const std::string y = write("cli_j_y.txt", "GATTTACA");
    const Run r = cli({"distance", x, y, "--k", "4", "--algo", "stream-periodic", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["distance"] == 1);
    CHECK(j["algorithm"] == "stream-periodic");
    CHECK(j["exceeds_k"] == false);
    CHECK(j["readers"]["x"]["bytes_read"] == 7);
    CHECK(j["readers"]["y"]["passes"] == 1);
    CHECK(j["stats"].contains("comparisons"));
}

TEST_CASE("align prints cigar or ops")
{
    const std::string x = write("cli_al_x.txt", "ABA");
    const std::string y = write("cli_al_y.txt", "AAB");
    const Run c = cli({"align", x, y, "--k", "2", "--algo", "stream-lce"});
    CHECK(c.code == 0);
    CHECK(c.out == "1=2X\n");
    const Run d = cli({"align", x, y, "--k", "2", "--algo", "dp"});
    CHECK(d.code == 0);
    const Run o = cli({"align", x, y, "--k", "2", "--ops"});
    CHECK(o.out.rfind("= 1\n", 0) == 0);
    CHECK(cli({"align", x, y, "--k", "1"}).code == 4);
    CHECK(cli({"align", x, y, "--k", "2", "--ops", "--cigar"}).code == 2);
}

TEST_CASE("usage and io errors")
{
    const std::string x = write("cli_e_x.txt", "A");
    CHECK(cli({}).code == 2);
    CHECK(cli({"distance", x}).code == 2);
    CHECK(cli({"distance", x, x}).code == 2);
    CHECK(cli({"distance", x, x, "--k", "-1"}).code == 2);
    CHECK(cli({"distance", x, x, "--k", "1", "--algo", "nope"}).code == 2);
    const Run missing = cli({"distance", x, tmp("does_not_exist"), "--k", "1"});
    CHECK(missing.code == 3);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("gen and bench")
{
    const Run g = cli({"gen", "--n", "500", "--k", "5", "--seed", "3", "--out-x", tmp("g_x"), "--out-y", tmp("g_y")});
    CHECK(g.code == 0);
    CHECK(g.out == "planted 5\n");
    CHECK(cli({"distance", tmp("g_x"), tmp("g_y"), "--k", "5"}).code == 0);
    CHECK(cli({"gen", "--n", "3", "--k", "5", "--out-x", tmp("g_x"), "--out-y", tmp("g_y")}).code == 2);

    const Run b = cli({"bench", "--n", "2000", "--k", "4", "--csv", "--algo", "rowwave", "stream-periodic"});
    CHECK(b.code == 0);
    CHECK(b.out.rfind("algo,n,k,sigma,seed,distance", 0) == 0);
    CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 3);
    const Run t = cli({"bench", "--n", "1000", "--k", "2", "--preset", "periodic"});
    CHECK(t.code == 0);
    CHECK(t.out.find("stream-periodic") != std::string::npos);
}
