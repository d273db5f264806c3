#include "expsieve/scan.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace expsieve {

Partition parse_partition(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("partition must look like w/n");
    Partition p;
    try {
        p.index = static_cast<unsigned>(std::stoul(s.substr(0, slash)));
        p.count = static_cast<unsigned>(std::stoul(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("partition must look like w/n");
    }
    if (p.count == 0 || p.index >= p.count) throw std::invalid_argument("partition index out of range");
    return p;
}

std::pair<std::uint64_t, std::uint64_t> partition_block(std::uint64_t begin, std::uint64_t end, const Partition& p) {
    if (end <= begin) return {begin, begin};
    std::uint64_t n = end - begin;
    std::uint64_t q = n / p.count, r = n % p.count;
    std::uint64_t lo = begin + p.index * q + std::min<std::uint64_t>(p.index, r);
    std::uint64_t hi = lo + q + (p.index < r ? 1 : 0);
    return {lo, hi};
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) throw CheckpointError("empty checkpoint file: " + path);
    std::stringstream ss(line);
    Checkpoint cp;
    std::string cursor;
    if (!std::getline(ss, cp.stage, ',') || !std::getline(ss, cursor, ',') || !std::getline(ss, cp.config_hash))
        throw CheckpointError("malformed checkpoint line: " + line);
    try {
        cp.cursor = std::stoull(cursor);
    } catch (const std::exception&) {
        throw CheckpointError("malformed checkpoint cursor: " + cursor);
    }
    return cp;
}

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    // Write then rename so an interrupted run never leaves a torn file.
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << cp.stage << ',' << cp.cursor << ',' << cp.config_hash << '\n';
        if (!out) throw CheckpointError("cannot write checkpoint: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::string encode_candidate(std::uint64_t index, const SieveCandidate& c) {
    std::string s = std::to_string(index) + '|' + c.stage + '|';
    for (std::size_t i = 0; i < c.tuple.size(); ++i) s += (i ? " " : "") + c.tuple[i].get_str();
    s += '|';
    for (std::size_t i = 0; i < c.predicates.size(); ++i) s += (i ? ";" : "") + c.predicates[i];
    return s;
}

std::pair<std::uint64_t, SieveCandidate> decode_candidate(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '|')) f.push_back(part);
    while (f.size() < 4) f.emplace_back();
    SieveCandidate c;
    c.stage = f[1];
    std::stringstream ts(f[2]);
    std::string tok;
    while (ts >> tok) c.tuple.emplace_back(tok);
    std::stringstream ps(f[3]);
    while (std::getline(ps, tok, ';'))
        if (!tok.empty()) c.predicates.push_back(tok);
    return {std::stoull(f[0]), std::move(c)};
}

namespace {

std::vector<std::vector<SieveCandidate>> run_chunk(std::uint64_t lo, std::uint64_t hi, const ScanBody& body,
                                                   unsigned threads) {
    std::vector<std::vector<SieveCandidate>> out(hi - lo);
    if (threads <= 1 || hi - lo <= 1) {
        for (std::uint64_t i = lo; i < hi; ++i) out[i - lo] = body(i);
        return out;
    }
    std::atomic<std::uint64_t> next{lo};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= hi || failed) return;
            try {
                out[i - lo] = body(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace

ScanResult run_scan(const std::string& stage, std::uint64_t begin, std::uint64_t end, const ScanBody& body,
                    const ScanOptions& opt) {
    ScanResult res;
    std::tie(res.begin, res.end) = partition_block(begin, end, opt.partition);
    std::uint64_t cursor = res.begin;
    const bool ckpt = !opt.checkpoint_path.empty();
    const std::string side = opt.checkpoint_path + ".survivors";

    if (ckpt) {
        if (auto cp = read_checkpoint(opt.checkpoint_path)) {
            if (cp->stage != stage || cp->config_hash != opt.config_hash)
                throw CheckpointError("checkpoint belongs to a different stage or configuration");
            if (cp->cursor < res.begin || cp->cursor > res.end)
                throw CheckpointError("checkpoint cursor outside this worker's block");
            cursor = cp->cursor;
            std::ifstream in(side);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto [idx, c] = decode_candidate(line);
                if (idx < cursor) res.records.push_back(std::move(c));
            }
        } else {
            std::ofstream(side, std::ios::trunc);
        }
    }
    res.resumed_from = cursor;

    const std::uint64_t step = std::max<std::uint64_t>(1, opt.checkpoint_every);
    std::uint64_t stop = res.end;
    if (opt.max_indices) stop = std::min(res.end, cursor + *opt.max_indices);
    while (cursor < stop) {
        std::uint64_t hi = std::min(stop, cursor + step);
        auto chunk = run_chunk(cursor, hi, body, opt.threads);
        if (ckpt) {
            std::ofstream out(side, std::ios::app);
            for (std::uint64_t i = cursor; i < hi; ++i)
                for (const auto& c : chunk[i - cursor]) out << encode_candidate(i, c) << '\n';
            if (!out) throw CheckpointError("cannot append survivors: " + side);
        }
        for (auto& v : chunk)
            for (auto& c : v) res.records.push_back(std::move(c));
        cursor = hi;
        if (ckpt) write_checkpoint(opt.checkpoint_path, {stage, cursor, opt.config_hash});
    }
    res.next_cursor = cursor;
    res.complete = cursor >= res.end;
    if (opt.progress) {
        *opt.progress = res;
        opt.progress->records.clear();
    }
    return res;
}

}  // namespace expsieve
