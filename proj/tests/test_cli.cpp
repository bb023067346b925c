#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(HURWITZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_cache() {
    auto p = std::filesystem::temp_directory_path() / ("hurwitz_cli_cache_" + std::to_string(::getpid()));
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST(CliHurwitz, AnchorValues) {
    EXPECT_EQ(run("hurwitz --genus 0 --profile 1,1,1").out, "4\n");
    EXPECT_EQ(run("hurwitz --genus 1 --profile 2").out, "1/2\n");
    EXPECT_EQ(run("hurwitz --genus 1 --profile 1").out, "0\n");
    for (const char* engine : {"brute", "frobenius", "cutjoin", "auto"}) {
        CliResult r = run(std::string("hurwitz -g 2 -p 3 -e ") + engine);
        EXPECT_EQ(r.status, 0) << engine;
        EXPECT_EQ(r.out, "81\n") << engine;
    }
}

TEST(CliHurwitz, RecordFormat) {
    EXPECT_EQ(run("hurwitz -g 0 -p 1,2 -f record").out,
              "{\"kind\":\"hurwitz\",\"g\":0,\"profile\":[2,1],\"value\":\"4\",\"engine\":\"frobenius\",\"version\":1}\n");
}

TEST(CliHurwitz, ExitCodes) {
    EXPECT_EQ(run("hurwitz -g 0 -p 1,0").status, 1);
    EXPECT_EQ(run("hurwitz -g 0 -p a,b").status, 1);
    EXPECT_EQ(run("hurwitz -g 0").status, 1);
    EXPECT_EQ(run("hurwitz -g 0 -p 2 -e nosuch").status, 1);
    EXPECT_EQ(run("hurwitz -g 0 -p 3,3 -e brute").status, 2);
    EXPECT_EQ(run("hurwitz -g 0 -p 11").status, 2);
    EXPECT_EQ(run("hurwitz -g 0 -p 11 -e cutjoin").status, 2);
    CliResult raised = run("hurwitz -g 0 -p 11 --max-sheets 11");
    EXPECT_EQ(raised.status, 0);
    EXPECT_EQ(raised.out, "214358881\n");  // 11^8, the genus-zero closed form
}

TEST(CliHurwitz, CacheIsTransparent) {
    const std::string cache = temp_cache();
    std::string without = run("hurwitz -g 1 -p 2,1 -f record").out;
    std::string first = run("hurwitz -g 1 -p 2,1 -f record --cache " + cache).out;
    std::string second = run("hurwitz -g 1 -p 2,1 -f record --cache " + cache).out;
    EXPECT_EQ(without, first);
    EXPECT_EQ(first, second);
    std::ifstream in(cache);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "{\"schema\":\"hurwitz-cache\",\"version\":1}");
    CliResult degll = run("verify degll --cache " + cache);
    EXPECT_EQ(degll.status, 0);
    EXPECT_NE(degll.out.find("cache recompute g=1 mu=(2,1)"), std::string::npos);
    std::filesystem::remove(cache);
}

TEST(CliHurwitz, StaleCacheVersionRejected) {
    const std::string cache = temp_cache();
    {
        std::ofstream out(cache);
        out << "{\"schema\":\"hurwitz-cache\",\"version\":99}\n";
    }
    EXPECT_EQ(run("hurwitz -g 0 -p 2 --cache " + cache).status, 1);
    std::filesystem::remove(cache);
}

TEST(CliHodge, Records) {
    EXPECT_EQ(run("hodge --genus 1 --points 1").out,
              "{\"g\":1,\"n\":1,\"b\":[1],\"j\":0,\"value\":\"1/24\"}\n"
              "{\"g\":1,\"n\":1,\"b\":[0],\"j\":1,\"value\":\"1/24\"}\n");
    EXPECT_EQ(run("hodge -g 0 -n 3").out, "{\"g\":0,\"n\":3,\"b\":[0,0,0],\"j\":0,\"value\":\"1\"}\n");
    EXPECT_EQ(run("hodge -g 2 -n 1 -f table").out, "2\t1\t4\t0\t1/1152\n2\t1\t3\t1\t1/480\n2\t1\t2\t2\t7/5760\n");
}

TEST(CliHodge, Deterministic) {
    CliResult a = run("hodge -g 2 -n 2"), b = run("hodge -g 2 -n 2");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliHodge, ErrorsMapToExitCodes) {
    EXPECT_EQ(run("hodge -g 0 -n 2").status, 1);
    EXPECT_EQ(run("hodge -g 1 -n 1 -B 2").status, 2);
    EXPECT_EQ(run("hodge -g 2 -n 3 -B 4").status, 2);
}

TEST(CliVerify, Suites) {
    for (const char* suite : {"engines", "genus0", "degll", "fp-identity", "elsv-roundtrip"}) {
        CliResult r = run(std::string("verify ") + suite);
        EXPECT_EQ(r.status, 0) << suite;
        EXPECT_EQ(r.out.find("\"status\":\"fail\""), std::string::npos) << suite;
        EXPECT_NE(r.out.find("\"status\":\"pass\""), std::string::npos) << suite;
    }
    EXPECT_EQ(run("verify nosuch").status, 1);
}

TEST(CliVerify, FailedCheckExitsThree) {
    // With a too-small brute bound the engine comparisons report errors as failures.
    EXPECT_EQ(run("verify engines --max-brute-sheets 3").status, 3);
}
