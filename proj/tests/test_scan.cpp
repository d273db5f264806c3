#include "expsieve/scan.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace expsieve;
namespace fs = std::filesystem;

namespace {

std::vector<SieveCandidate> body(std::uint64_t i) {
    std::vector<SieveCandidate> out;
    if (i % 3 == 0) out.push_back({"toy", {Int(i), Int(i * i)}, {"div3"}});
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("expsieve-scan-" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(Partition, BlocksCoverRange) {
    auto p = parse_partition("1/3");
    EXPECT_EQ(p.index, 1u);
    EXPECT_EQ(p.count, 3u);
    EXPECT_THROW(parse_partition("3/3"), std::exception);
    std::uint64_t next = 10;
    for (unsigned w = 0; w < 4; ++w) {
        auto [lo, hi] = partition_block(10, 31, {w, 4});
        EXPECT_EQ(lo, next);
        next = hi;
    }
    EXPECT_EQ(next, 31u);
}

TEST(Encoding, RoundTrip) {
    SieveCandidate c{"list2", {Int(3), Int(10), Int(-7)}, {"a", "b"}};
    auto [i, d] = decode_candidate(encode_candidate(42, c));
    EXPECT_EQ(i, 42u);
    EXPECT_EQ(d, c);
    EXPECT_EQ(d.predicates, c.predicates);
}

TEST(RunScan, ThreadsDoNotChangeOutput) {
    auto one = run_scan("toy", 0, 100, body);
    ScanOptions o;
    o.threads = 4;
    auto four = run_scan("toy", 0, 100, body, o);
    EXPECT_TRUE(one.complete);
    EXPECT_EQ(one.records, four.records);
    EXPECT_EQ(one.records.size(), 34u);
}

TEST(RunScan, PartitionsConcatenate) {
    std::vector<SieveCandidate> joined;
    for (unsigned w = 0; w < 3; ++w) {
        ScanOptions o;
        o.partition = {w, 3};
        auto r = run_scan("toy", 0, 100, body, o);
        joined.insert(joined.end(), r.records.begin(), r.records.end());
    }
    EXPECT_EQ(joined, run_scan("toy", 0, 100, body).records);
}

TEST(Checkpoint, ResumeMatchesUninterrupted) {
    TempDir d;
    ScanOptions o;
    o.checkpoint_path = (d.path / "toy.ckpt").string();
    o.config_hash = "abc";
    o.max_indices = 40;
    ScanResult progress;
    o.progress = &progress;
    auto first = run_scan("toy", 0, 100, body, o);
    EXPECT_FALSE(first.complete);
    EXPECT_FALSE(progress.complete);
    EXPECT_EQ(first.next_cursor, 40u);
    auto cp = read_checkpoint(o.checkpoint_path);
    ASSERT_TRUE(cp);
    EXPECT_EQ(cp->cursor, 40u);
    o.max_indices.reset();
    auto second = run_scan("toy", 0, 100, body, o);
    EXPECT_TRUE(second.complete);
    EXPECT_EQ(second.resumed_from, 40u);
    EXPECT_EQ(second.records, run_scan("toy", 0, 100, body).records);
}

TEST(Checkpoint, ForeignConfigRejected) {
    TempDir d;
    ScanOptions o;
    o.checkpoint_path = (d.path / "toy.ckpt").string();
    o.config_hash = "abc";
    o.max_indices = 10;
    run_scan("toy", 0, 100, body, o);
    o.config_hash = "def";
    EXPECT_THROW(run_scan("toy", 0, 100, body, o), CheckpointError);
    o.config_hash = "abc";
    EXPECT_THROW(run_scan("other", 0, 100, body, o), CheckpointError);
}
