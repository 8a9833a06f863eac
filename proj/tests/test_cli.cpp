#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CONSTACODE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("build golden example, csv") {
    RunResult r = run("build --q 4 --n 15 --r 3 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("C,15,6,4,") != std::string::npos);
    CHECK(r.out.find("dual,15,9,3,") != std::string::npos);
    CHECK(r.out.find("exp1,15,2,12,\"1 + 15z^12\"") != std::string::npos);
    CHECK(r.out.find("exp2,5,2,4,") != std::string::npos);
}

TEST_CASE("build degenerate length-1 code") {
    RunResult r = run("build --q 3 --n 1 --r 1 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("C,1,1,1,") != std::string::npos);
}

TEST_CASE("build json output is deterministic") {
    RunResult a = run("build --q 3 --n 11 --r 2");
    RunResult b = run("build --q 3 --n 11 --r 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"d\": 6") != std::string::npos);
}

TEST_CASE("build restricted code subset") {
    RunResult r = run("build --q 4 --n 15 --r 3 --codes exp2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("exp2,5,2,4,") != std::string::npos);
    CHECK(r.out.find("C,15") == std::string::npos);
}

TEST_CASE("verify passes on published instances") {
    CHECK(run("verify thm5 --q 4 --n 15 --r 3").exit_code == 0);
    CHECK(run("verify thm6 --q 4 --n 15 --r 3").exit_code == 0);
    CHECK(run("verify thm4 --q 3 --n 11 --r 2").exit_code == 0);
    CHECK(run("verify thm7 --q 5 --n 39 --r 4").exit_code == 0);
    CHECK(run("verify bridge --q 3 --n 11 --r 2").exit_code == 0);
    CHECK(run("verify thm9 --q 13 --m 4 --e 4 --u 1 --r 12").exit_code == 0);
    CHECK(run("verify sqrt --q 3 --n 11 --variant nega").exit_code == 0);
}

TEST_CASE("exit 1 on verification failure") {
    RunResult r = run("verify sqrt --q 3 --n 11 --variant nega --expect-d 7");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("exit 2 on parameter errors") {
    CHECK(run("build --q 6 --n 5 --r 1").exit_code == 2);
    CHECK(run("build --q 4 --n 15 --r 5").exit_code == 2);
    CHECK(run("verify bridge --q 4 --n 15 --r 3").exit_code == 2);
    CHECK(run("verify nosuch --q 3 --n 11 --r 2").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("table 3 --q 3 --max-n 23").exit_code == 2);
}

TEST_CASE("exit 3 on budget exhaustion") {
    CHECK(run("build --q 3 --n 23 --r 2 --budget 1000").exit_code == 3);
    CHECK(run("verify thm5 --q 3 --n 23 --r 2 --budget 1000").exit_code == 3);
}

TEST_CASE("table rows and bound-only entries") {
    RunResult r = run("table 1 --q 3 --max-n 23 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,d,d_perp\n11,6,5\n23,9,8\n");

    RunResult empty = run("table 1 --q 3 --max-n 10 --csv");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "n,d,d_perp\n");

    RunResult bounded = run("table 1 --q 3 --max-n 37 --budget 100000 --csv");
    CHECK(bounded.exit_code == 0);
    CHECK(bounded.out.find("23,>=6,>=5") != std::string::npos);
    CHECK(bounded.out.find("37,>=8,>=7") != std::string::npos);
}

TEST_CASE("scan qr matches the published prime lists") {
    CHECK(run("scan qr --q 3 --variant nega --max-n 75 --csv").out ==
          "11,23,37,47,59,71\n");
    CHECK(run("scan qr --q 5 --variant nega --max-n 41 --csv").out == "11,19,29,41\n");
    CHECK(run("scan qr --q 7 --variant nega --max-n 47 --csv").out == "31,47\n");
    CHECK(run("scan qr --q 3 --variant bogus --max-n 10").exit_code == 2);
}

TEST_CASE("scan family lists valid parameter tuples") {
    RunResult r = run("scan family --q 3 --max-n 30 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("26,3,1,2,2,e1") != std::string::npos);
    CHECK(r.out.find("4,2,1,1,2,e1") != std::string::npos);
}
