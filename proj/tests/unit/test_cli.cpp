#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {
struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(SUBPART_CLI) + " " + args + " 2>&1";
    Result r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / ("subpart_cli_" + name)).string(); }
}  // namespace

TEST_CASE("sigma") {
    const auto r = run("sigma --n 7 --t 3 --q 2");
    CHECK(r.status == 0);
    CHECK(r.out == "21\n");
    const auto o = run("sigma --n 4 --t 2 --q 3 --oracle");
    CHECK(o.status == 0);
    CHECK(o.out.find("agree") != std::string::npos);
    CHECK(run("sigma --n 3 --t 3 --q 2").status == 1);
}

TEST_CASE("construct then verify") {
    const auto f = tmp("v4.txt");
    CHECK(run("construct minimal --n 4 --q 2 --t 2 --out " + f).status == 0);
    const auto v = run("verify " + f + " --all-identities");
    CHECK(v.status == 0);
    CHECK(v.out.find("type [2^5]") != std::string::npos);
    CHECK(v.out.find("FAIL") == std::string::npos);
    const auto j = run("--json verify " + f);
    CHECK(j.status == 0);
    CHECK(j.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("analyze the V(6,2) partition") {
    const auto s = tmp("s6.txt"), b = tmp("b3.txt"), p = tmp("p6.json");
    REQUIRE(run("construct spread --n 6 --t 3 --q 2 --out " + s).status == 0);
    REQUIRE(run("construct beutelspacher --n 3 --d 1 --q 2 --out " + b).status == 0);
    REQUIRE(run("--json construct refine --in " + s + " --member 4 --with " + b + " --out " + p).status == 0);
    const auto a = run("analyze " + p + " --cut 3 --mode assert");
    CHECK(a.status == 0);
    CHECK(a.out.find("classification OnePlusQtCase") != std::string::npos);
    CHECK(a.out.find("a 3-subspace") != std::string::npos);
    CHECK(run("analyze " + p + " --cut 5").status == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("verify /nonexistent/file").status == 2);
    const auto bad = tmp("bad.txt");
    {
        FILE* f = fopen(bad.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("version 1\nq 2\nn 2\nmember 1 0\nmember 0 1\n", f);
        fclose(f);
    }
    CHECK(run("verify " + bad).status == 3);
    CHECK(run("search partitions --n 4 --q 2 --budget 10").status == 5);
}

TEST_CASE("budget from the environment and resumable search") {
    const auto ck = tmp("ck.txt");
    std::filesystem::remove(ck);
    CHECK(run("search partitions --n 4 --q 2 --checkpoint " + ck).status == 0);
    const std::string env = "SUBPART_BUDGET=300 ";
    const std::string cmd = env + SUBPART_CLI + " search partitions --n 4 --q 2 --checkpoint " + ck + " --resume 2>&1";
    CHECK(std::system(cmd.c_str()) != 0);
    CHECK(std::filesystem::exists(ck));
    const auto done = run("search partitions --n 4 --q 2 --checkpoint " + ck + " --resume");
    CHECK(done.status == 0);
    CHECK(done.out.find("1227 in total") != std::string::npos);
    std::filesystem::remove(ck);
}

TEST_CASE("conjecture sweep") {
    const auto r = run("search conjecture --n 4 --q 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("asserted failures 0") != std::string::npos);
    CHECK(r.out.find("not reached") != std::string::npos);
}
