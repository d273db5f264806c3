// Drives the built binary (path in EXPSIEVE_CLI).
#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

class Cli : public ::testing::Test {
protected:
    fs::path dir;
    std::string bin;

    void SetUp() override {
        const char* b = std::getenv("EXPSIEVE_CLI");
        if (!b) GTEST_SKIP() << "EXPSIEVE_CLI not set";
        bin = b;
        dir = fs::temp_directory_path() /
              ("expsieve-cli-" + std::to_string(::getpid()) + "-" +
               ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override {
        if (!dir.empty()) fs::remove_all(dir);
    }

    Outcome run(const std::string& args) {
        std::string cmd = "EXPSIEVE_OUT='" + dir.string() + "' '" + bin + "' " + args + " 2>&1";
        Outcome r;
        FILE* p = ::popen(cmd.c_str(), "r");
        char buf[4096];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
        int st = ::pclose(p);
        r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
        return r;
    }

    std::string report_of(const Outcome& r) {
        std::smatch m;
        if (!std::regex_search(r.out, m, std::regex("report: (\\S+)"))) return {};
        return m[1];
    }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string strip_wall_clock(std::string s) {
    return std::regex_replace(s, std::regex("\"wall_clock_seconds\":[0-9.]+"), "\"wall_clock_seconds\":X");
}

}  // namespace

TEST_F(Cli, EuclidWitnessExample) {
    auto r = run("euclid witness --n 1 --E 3 --N 5");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("lQ = 2t + 1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("l = 15"), std::string::npos) << r.out;
}

TEST_F(Cli, EuclidSurveyExample) {
    auto r = run("euclid survey --q 5 --y 1..3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("y=3"), std::string::npos);
}

TEST_F(Cli, OracleCountExample) {
    auto r = run("oracle count --a 3 --b 10 --c 13");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("N(3,10,13) = 2"), std::string::npos) << r.out;
}

TEST_F(Cli, ZgapExampleAndHashEverywhere) {
    auto r = run("sieve zgap --c 7 --z 5..30");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("verdict: verified-empty"), std::string::npos);
    std::string path = report_of(r);
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(fs::path(path).parent_path(), dir);
    std::ifstream f(path);
    std::string line, hash;
    int lines = 0;
    while (std::getline(f, line)) {
        ++lines;
        std::smatch m;
        ASSERT_TRUE(std::regex_search(line, m, std::regex("\"config_hash\":\"([0-9a-f]{64})\""))) << line;
        if (hash.empty()) hash = m[1];
        EXPECT_EQ(hash, m[1]);
    }
    EXPECT_GE(lines, 2);
    EXPECT_NE(r.out.find(hash), std::string::npos);
}

TEST_F(Cli, RerunsAreByteIdenticalButWallClock) {
    auto a = run("bounds --c 7");
    std::string first = slurp(report_of(a));
    auto b = run("bounds --c 7");
    std::string second = slurp(report_of(b));
    EXPECT_EQ(report_of(a), report_of(b));
    EXPECT_EQ(strip_wall_clock(first), strip_wall_clock(second));
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("bounds-matched"), std::string::npos);
}

TEST_F(Cli, SurvivorsExitNonZero) {
    auto r = run("sieve final --c 13 --Y 7 --T 1..1 --T-step 1 --z2 1 --z-max 1");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("survivors-found"), std::string::npos);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(run("bounds --c 11").code, 2);
    EXPECT_EQ(run("oracle count --a 3 --b 10 --c 13 --max-indices 3").code, 2);
    EXPECT_EQ(run("sieve step123 --case ii").code, 2);
    auto h = run("euclid congruence --X 3 --q 2 --m 3 --n 1 --y1 5 --y2 3");
    EXPECT_EQ(h.code, 2);
    EXPECT_NE(h.out.find("hypothesis not met"), std::string::npos) << h.out;
    EXPECT_NE(run("sieve nosuch").code, 0);
}

TEST_F(Cli, ConfigFileMirrorsFlags) {
    std::ofstream(dir / "c.toml") << "[sieve.zgap]\nc = \"13\"\nz = \"1..1\"\ngap = 2\n";
    auto from_file = run("--config '" + (dir / "c.toml").string() + "' sieve zgap");
    auto from_flags = run("sieve zgap --c 13 --z 1..1 --gap 2");
    EXPECT_EQ(report_of(from_file), report_of(from_flags));
    EXPECT_EQ(from_file.code, 1);
}

TEST_F(Cli, MaxIndicesResumes) {
    auto a = run("sieve zfloor --z 5..12 --max-indices 3");
    EXPECT_EQ(a.code, 1) << a.out;
    EXPECT_NE(a.out.find("verdict: incomplete"), std::string::npos);
    auto b = run("sieve zfloor --z 5..12 --max-indices 10");
    EXPECT_EQ(b.code, 0) << b.out;
    EXPECT_NE(b.out.find("verdict: verified-empty"), std::string::npos);
}

TEST_F(Cli, FullScaleWarns) {
    auto r = run("sieve c97 --scale full --Z 1..3");
    EXPECT_NE(r.out.find("within 55 hours"), std::string::npos) << r.out;
    EXPECT_TRUE(fs::exists(dir));
}
