#pragma once

#include "expsieve/arith.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace expsieve {

// A record emitted by a sieve stage. Tuples:
//   list1     [z, n', t]
//   list2     [a, b, x, y, z, n']
//   survivor  [a, b, x, y, z, X, Y, Z] (Step 3) or a stage-specific tuple documented at the scan.
struct SieveCandidate {
    std::string stage;
    std::vector<Int> tuple;
    std::vector<std::string> predicates;   // filters passed, in order
    friend bool operator==(const SieveCandidate& a, const SieveCandidate& b) {
        return a.stage == b.stage && a.tuple == b.tuple;
    }
};

// Worker w of n owns the w-th contiguous block of the outer index range.
struct Partition {
    unsigned index = 0;
    unsigned count = 1;
};
// Parses "w/n".
Partition parse_partition(const std::string& s);
// Half-open block [lo, hi) of [begin, end) owned by p.
std::pair<std::uint64_t, std::uint64_t> partition_block(std::uint64_t begin, std::uint64_t end, const Partition& p);

struct ScanResult;

struct ScanOptions {
    unsigned threads = 1;
    Partition partition;
    std::string checkpoint_path;         // empty: no checkpointing
    std::uint64_t checkpoint_every = 1;  // outer indices per checkpoint
    std::string config_hash;
    // Stop (leaving a checkpoint) after this many outer indices; for resume tests and sharded runs.
    std::optional<std::uint64_t> max_indices;
    // When set, receives the cursor fields of the last run_scan call (records left empty).
    ScanResult* progress = nullptr;
};

struct ScanResult {
    std::vector<SieveCandidate> records;   // ordered by outer index, then emission order
    bool complete = false;
    std::uint64_t begin = 0, end = 0;      // block processed by this worker
    std::uint64_t resumed_from = 0;        // first index processed in this call
    std::uint64_t next_cursor = 0;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint file: one line "stage,cursor,config-hash"; records live in <path>.survivors.
struct Checkpoint {
    std::string stage;
    std::uint64_t cursor = 0;
    std::string config_hash;
};
std::optional<Checkpoint> read_checkpoint(const std::string& path);
void write_checkpoint(const std::string& path, const Checkpoint& cp);

std::string encode_candidate(std::uint64_t index, const SieveCandidate& c);
std::pair<std::uint64_t, SieveCandidate> decode_candidate(const std::string& line);

using ScanBody = std::function<std::vector<SieveCandidate>(std::uint64_t index)>;

// Runs body over this worker's block of [begin, end). body must be pure.
ScanResult run_scan(const std::string& stage, std::uint64_t begin, std::uint64_t end, const ScanBody& body,
                    const ScanOptions& opt = {});

}  // namespace expsieve
