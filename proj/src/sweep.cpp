#include "qeig/sweep.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "qeig/bigint.hpp"

namespace qeig {

using nlohmann::json;

std::string witness_hash(const TupleResult& r) {
    std::string blob = std::string(status_name(r.status)) + "|" + (r.flagged ? "1" : "0") + "|" +
                       r.note + "|" + r.witness.dump();
    return hex64(fnv1a(blob));
}

namespace {

struct CheckpointEntry {
    std::string status;
    bool flagged = false;
    std::string hash;
};

std::unordered_map<std::string, CheckpointEntry> load_checkpoint(const std::string& path) {
    std::unordered_map<std::string, CheckpointEntry> map;
    std::ifstream in(path);
    if (!in) return map;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.contains("tuple")) continue;  // tolerate a torn final line
        CheckpointEntry e;
        std::string st = rec.value("status", "");
        e.flagged = !st.empty() && st.back() == '!';
        e.status = e.flagged ? st.substr(0, st.size() - 1) : st;
        e.hash = rec.value("witness_hash", "");
        map[rec["tuple"].get<std::string>()] = e;
    }
    return map;
}

}  // namespace

VerdictReport run_sweep(const std::string& check, json grid, const std::vector<std::string>& keys,
                        const std::function<TupleResult(std::size_t)>& eval, const SweepOptions& opt) {
    auto start = std::chrono::steady_clock::now();

    std::unordered_map<std::string, CheckpointEntry> seen;
    if (!opt.checkpoint_path.empty()) seen = load_checkpoint(opt.checkpoint_path);

    VerdictReport report;
    report.check = check;
    report.grid = std::move(grid);
    report.tuples.resize(keys.size());

    std::ofstream ckpt;
    std::mutex ckpt_mutex;  // single checkpoint writer
    if (!opt.checkpoint_path.empty())
        ckpt.open(opt.checkpoint_path, std::ios::app);

    auto work = [&](std::size_t t) {
        const std::string& key = keys[t];
        auto hit = seen.find(key);
        bool reusable = false;
        if (hit != seen.end()) {
            Status st = status_from_name(hit->second.status);
            // Rows whose report entry carries a payload are recomputed and
            // hash-checked; plain rows are reused as recorded.
            if (!hit->second.flagged && st != Status::Fail && st != Status::Observed) {
                TupleResult r;
                r.key = key;
                r.status = st;
                if (st == Status::Excluded) {
                    r = eval(t);  // cheap: exclusion is decided before any eigenvalue work
                    if (r.status != st)
                        throw std::runtime_error("checkpoint disagrees with evaluation for " + key);
                }
                report.tuples[t] = r;
                reusable = true;
            }
        }
        if (!reusable) {
            TupleResult r = eval(t);
            r.key = key;
            if (hit != seen.end() && witness_hash(r) != hit->second.hash)
                throw std::runtime_error("checkpoint witness hash mismatch for " + key +
                                         " (nondeterministic evaluation or corrupt checkpoint)");
            report.tuples[t] = r;
        }
        if (ckpt.is_open() && hit == seen.end()) {
            const TupleResult& r = report.tuples[t];
            json rec = {{"tuple", key},
                        {"status", std::string(status_name(r.status)) + (r.flagged ? "!" : "")},
                        {"witness_hash", witness_hash(r)}};
            std::lock_guard<std::mutex> lock(ckpt_mutex);
            ckpt << rec.dump() << '\n';
            ckpt.flush();
        }
    };

    if (opt.jobs <= 1) {
        for (std::size_t t = 0; t < keys.size(); ++t) work(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::mutex err_mutex;
        std::exception_ptr first_error;
        for (int w = 0; w < opt.jobs; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t t = next.fetch_add(1);
                    if (t >= keys.size()) return;
                    try {
                        work(t);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    for (const auto& r : report.tuples) {
        ++report.counts.total;
        switch (r.status) {
            case Status::Pass: ++report.counts.pass; break;
            case Status::Fail: ++report.counts.fail; break;
            case Status::Excluded: ++report.counts.excluded; break;
            case Status::Observed: ++report.counts.observed; break;
        }
        if (r.flagged) ++report.counts.flagged;
    }
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return report;
}

json report_to_json(const VerdictReport& report) {
    json tuples = json::array();
    for (const auto& r : report.tuples) {
        json row = {{"tuple", r.key}, {"status", status_name(r.status)}};
        if (r.flagged) row["flagged"] = true;
        if (!r.note.empty()) row["note"] = r.note;
        if (!r.witness.is_null() && !r.witness.empty()) row["witness"] = r.witness;
        tuples.push_back(std::move(row));
    }
    return {{"schema", "qeig-report/1"},
            {"check", report.check},
            {"grid", report.grid},
            {"counts",
             {{"pass", report.counts.pass},
              {"fail", report.counts.fail},
              {"excluded", report.counts.excluded},
              {"observed", report.counts.observed},
              {"flagged", report.counts.flagged},
              {"total", report.counts.total}}},
            {"tuples", tuples},
            {"duration_ms", report.duration_ms}};
}

std::string report_to_csv(const VerdictReport& report) {
    std::string out = "tuple,status,flagged,note\n";
    for (const auto& r : report.tuples) {
        std::string note = r.note;
        for (char& c : note)
            if (c == ',') c = ';';
        out += "\"" + r.key + "\"," + status_name(r.status) + "," + (r.flagged ? "1" : "0") + "," +
               note + "\n";
    }
    return out;
}

}  // namespace qeig
