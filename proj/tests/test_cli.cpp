#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "")
{
    std::string cmd;
    if (!stdin_text.empty())
        cmd = "printf '" + stdin_text + "' | ";
    cmd += std::string(ESTRADA_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST_CASE("compute")
{
    const auto r = run("compute -", "3 2\\n0 1\\n1 2\\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("LEE 23.8038187516") != std::string::npos);

    const auto j = run("compute - --format graph6 --output json", "Bg\\n");
    CHECK(j.status == 0);
    CHECK(j.out.find("\"laplacian_estrada_index\": 23.8038187516") != std::string::npos);
}

TEST_CASE("build feeds compute")
{
    const auto built = run("build star 5");
    CHECK(built.status == 0);
    CHECK(built.out.rfind("5 4\n", 0) == 0);
    CHECK(run("build double-star 8 3").status == 0);
    CHECK(run("build double-star 8 5").status == 2);
    CHECK(run("build broom 5").status == 2);
}

TEST_CASE("exit codes for bad input")
{
    CHECK(run("compute -", "3 1\\n1 1\\n").status == 2);
    CHECK(run("compute -", "3 2\\n0 1\\n").status == 2);
    CHECK(run("compute - --format graph6", "~~~\\n").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("rank").status == 2);
    CHECK(run("rank --n 3").status == 2);
    CHECK(run("verify-identity --samples 3 --cycles 6").status == 0);
}

TEST_CASE("sigma subcommand")
{
    const auto r = run("sigma - --chain --output json", "4 3\\n0 1\\n1 2\\n2 3\\n");
    CHECK(r.status == 0);
    CHECK(run("sigma - --at 0", "4 3\\n0 1\\n1 2\\n2 3\\n").status == 2);
}

TEST_CASE("reports are identical across thread counts")
{
    const auto a = run("rank --n 10 --top 5 --bottom 2 --threads 1");
    const auto b = run("rank --n 10 --top 5 --bottom 2 --threads 3 --chunk 17");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    const auto c = run("verify-extremal --max-n 10 --threads 1");
    const auto d = run("verify-extremal --max-n 10 --threads 4");
    CHECK(c.status == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("double-star table")
{
    const auto r = run("double-star table --n-min 6 --n-max 7");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n,a,b,x1,x2,x3,lee_closed_form,margin_to_next\n", 0) == 0);
    CHECK(run("double-star verify --n-min 6 --n-max 20").status == 0);
}
