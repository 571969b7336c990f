#include "fpsrev/cli.hpp"
#include "fpsrev/series_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

using namespace fpsrev;
using namespace fpsrev::testing;

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch()
    {
        static int counter = 0;
        dir_ = fs::temp_directory_path() / ("fpsrev_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text) const
    {
        const auto p = (dir_ / name).string();
        write_text_file(p, text);
        return p;
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

const char* const kXPlusY2 = "vars 2\ndegree 4\ncomp 1: 1 0 -> 1\ncomp 1: 0 2 -> 1\ncomp 2: 0 1 -> 1\n";
const char* const kXPlusX2 = "vars 1\ndegree 5\ncomp 1: 1 -> 1\ncomp 1: 2 -> 1\n";

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("cli invert with all methods")
{
    Scratch s;
    const auto in = s.file("phi.txt", kXPlusY2);
    const auto out = s.path("inv.txt");
    const auto r = run_cli({"invert", "--in", in, "--method", "all", "--out", out});
    CHECK(r.code == 0);
    CHECK(r.err.find("verified") != std::string::npos);
    CHECK(slurp(out) == "vars 2\ndegree 4\ncomp 1: 1 0 -> 1\ncomp 1: 0 2 -> -1\ncomp 2: 0 1 -> 1\n");

    const auto catalan = run_cli({"invert", "--in", s.file("c.txt", kXPlusX2)});
    CHECK(catalan.code == 0);
    CHECK(catalan.out == "vars 1\ndegree 5\ncomp 1: 1 -> 1\ncomp 1: 2 -> -1\ncomp 1: 3 -> 2\ncomp 1: 4 -> -5\n"
                         "comp 1: 5 -> 14\n");

    for (const char* method : {"neumann", "recurrence", "fixpoint"}) {
        CHECK(run_cli({"invert", "--in", in, "--method", method}).out == slurp(out));
    }

    const auto deeper = run_cli({"invert", "--in", s.file("c2.txt", kXPlusX2), "--degree", "3"});
    CHECK(deeper.out == "vars 1\ndegree 3\ncomp 1: 1 -> 1\ncomp 1: 2 -> -1\ncomp 1: 3 -> 2\n");
}

TEST_CASE("cli exit codes")
{
    Scratch s;
    const auto linear = s.file("two_x.txt", "vars 1\ndegree 3\ncomp 1: 1 -> 2\n");
    CHECK(run_cli({"invert", "--in", linear}).code == 3);
    CHECK(run_cli({"invert", "--in", linear, "--general"}).code == 0);
    CHECK(run_cli({"invert", "--in", s.file("const.txt", "vars 1\ndegree 3\ncomp 1: 0 -> 1\n")}).code == 3);
    CHECK(run_cli({"invert", "--in", s.file("bad.txt", "vars 1\ndegree 3\ncomp 1: 1 -> q\n")}).code == 2);
    CHECK(run_cli({"invert", "--in", s.file("dup.txt", "vars 1\ndegree 3\ncomp 1: 1 -> 1\ncomp 1: 1 -> 1\n")}).code
          == 2);
    CHECK(run_cli({"invert", "--in", s.file("over.txt", "vars 1\ndegree 3\ncomp 1: 4 -> 1\n")}).code == 2);
    CHECK(run_cli({"invert"}).code == 1);
    CHECK(run_cli({"no-such-command"}).code == 1);
    CHECK(run_cli({"invert", "--in", s.path("missing.txt")}).code == 1);
    CHECK(run_cli({"invert", "--in", linear, "--method", "bogus"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);

    const auto err = run_cli({"invert", "--in", s.file("bad2.txt", "vars 1\ndegree 3\n\ncomp 1: 1 ->\n")});
    CHECK(err.code == 2);
    CHECK(err.err.find("line 4") != std::string::npos);

    const auto quad = s.file("quad.txt", kXPlusX2);
    const auto capped = run_cli({"tail-test", "--in", quad, "--max-m", "8", "--max-degree", "20"});
    CHECK(capped.code == 5);
}

TEST_CASE("cli compose and iterate")
{
    Scratch s;
    const auto phi = s.file("phi.txt", kXPlusY2);
    const auto inv = s.file("inv.txt", "vars 2\ndegree 4\ncomp 1: 1 0 -> 1\ncomp 1: 0 2 -> -1\ncomp 2: 0 1 -> 1\n");
    const auto r = run_cli({"compose", "--outer", phi, "--inner", inv});
    CHECK(r.code == 0);
    CHECK(r.out == "vars 2\ndegree 4\ncomp 1: 1 0 -> 1\ncomp 2: 0 1 -> 1\n");

    const auto it = run_cli({"iterate", "--in", s.file("q.txt", "vars 1\ndegree 4\ncomp 1: 1 -> 1\ncomp 1: 2 -> 1\n"),
                             "--times", "2"});
    CHECK(it.out == "vars 1\ndegree 4\ncomp 1: 1 -> 1\ncomp 1: 2 -> 2\ncomp 1: 3 -> 2\ncomp 1: 4 -> 1\n");

    const auto mismatch = s.file("n3.txt", "vars 3\ndegree 4\ncomp 1: 1 0 0 -> 1\n");
    CHECK(run_cli({"compose", "--outer", phi, "--inner", mismatch}).code == 2);
}

TEST_CASE("cli phi-seq")
{
    Scratch s;
    const auto r = run_cli({"phi-seq", "--in", s.file("q.txt", "vars 1\ndegree 4\ncomp 1: 1 -> 1\ncomp 1: 2 -> 1\n"),
                            "--m", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "vars 1\ndegree 4\n"
                   "# phi 0 order 1\ncomp 1: 1 -> 1\n"
                   "# phi 1 order 2\ncomp 1: 2 -> -1\n"
                   "# phi 2 order 3\ncomp 1: 3 -> 2\ncomp 1: 4 -> 1\n"
                   "# phi 3 order 4\ncomp 1: 4 -> -6\n"
                   "# phi 4 order inf\n");

    const auto j = nlohmann::json::parse(
        run_cli({"phi-seq", "--in", s.file("p.txt", kXPlusY2), "--m", "2", "--json"}).out);
    CHECK(j["phi"].size() == 3);
    CHECK(j["phi"][1]["order"] == 2);
    CHECK(j["phi"][2]["order"].is_null());
    CHECK(j["phi"][1]["terms"][0]["coefficient"] == "-1");
}

TEST_CASE("cli tail-test")
{
    Scratch s;
    const auto quad = run_cli({"tail-test", "--in", s.file("q.txt", kXPlusX2), "--max-m", "6"});
    CHECK(quad.code == 0);
    CHECK(quad.out.find("vanishing_m0 none") != std::string::npos);
    CHECK(quad.out.find("\n1 2 1 no\n") != std::string::npos);
    CHECK(quad.out.find("\n2 4 2 no\n") != std::string::npos);

    const auto good = run_cli({"tail-test", "--in", s.file("p.txt", kXPlusY2), "--max-m", "3"});
    CHECK(good.code == 0);
    CHECK(good.out.find("vanishing_m0 2\n") != std::string::npos);
    CHECK(good.out.find("comp 1: 0 2 -> -1\n") != std::string::npos);

    const auto j = nlohmann::json::parse(
        run_cli({"tail-test", "--in", s.file("p2.txt", kXPlusY2), "--max-m", "3", "--json"}).out);
    CHECK(j["vanishing_m0"] == 2);
    CHECK(j["records"].size() == 3);
    CHECK(j["certificate_inverse"]["terms"].size() == 3);
}

TEST_CASE("cli jacobian-check")
{
    Scratch s;
    const auto ok = run_cli({"jacobian-check", "--in", s.file("p.txt", kXPlusY2), "--m", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "holds yes\n");
    const auto bad = run_cli(
        {"jacobian-check", "--in", s.file("q.txt", "vars 1\ndegree 4\ncomp 1: 1 -> 1\ncomp 1: 2 -> 1\n"), "--m", "2"});
    CHECK(bad.code == 0);
    CHECK(bad.out == "holds no\nresidual 1 1 | 2 | -6\nresidual 1 1 | 3 | -4\n");
}

TEST_CASE("cli matrix dump")
{
    Scratch s;
    const auto in = s.file("p.txt", "vars 2\ndegree 2\ncomp 1: 1 0 -> 1\ncomp 1: 0 2 -> 1\ncomp 2: 0 1 -> 1\n");
    const auto r = run_cli({"matrix", "--in", in});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1 | 1 0 | 1 0 | 1\n1 1 | 0 1 | 0 1 | 1\n2 1 | 0 2 | 1 0 | 1\n");
    const auto e = run_cli({"matrix", "--in", in, "--exp"});
    CHECK(e.code == 0);
    // Unit (0,0) block, identity blocks on (1,1) and (2,2), and the screened (2,1) entry.
    CHECK(e.out == "0 0 | 0 0 | 0 0 | 1\n1 1 | 1 0 | 1 0 | 1\n1 1 | 0 1 | 0 1 | 1\n2 1 | 0 2 | 1 0 | 1\n"
                   "2 2 | 2 0 | 2 0 | 1\n2 2 | 1 1 | 1 1 | 1\n2 2 | 0 2 | 0 2 | 1\n");
}

TEST_CASE("cli output is deterministic")
{
    Scratch s;
    const auto in = s.file("p.txt", kXPlusY2);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"invert", "--in", in, "--json"},
             {"phi-seq", "--in", in, "--m", "3", "--json"},
             {"matrix", "--in", in, "--exp", "--json"},
             {"tail-test", "--in", in, "--max-m", "3"},
         }) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto j = nlohmann::json::parse(run_cli({"invert", "--in", in, "--json"}).out);
    CHECK(j["verified"] == true);
    CHECK(j["terms"][1]["coefficient"] == "-1");
}

TEST_CASE("cli bench")
{
    const auto r = run_cli({"bench", "--n", "2", "--degree", "5", "--seed", "7", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["agreement"] == true);
    CHECK(j["inverse_verified"] == true);
    CHECK(j["runs"].size() == 3);
}
