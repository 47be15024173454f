// Grid-sweep driver shared by the verification checks and lemma suites:
// canonical tuple enumeration, optional parallel evaluation, line-delimited
// JSON checkpointing, and deterministic report assembly.
//
// A checkpoint record stores {tuple, status, witness_hash}. On resume,
// tuples whose report entry is fully determined by tuple and status (PASS
// and the cheap EXCLUDED rows) are not re-evaluated; rows that carry a
// payload (FAIL witnesses, OBSERVED scan data) are recomputed and their
// witness hash must match the record, so an interrupted-and-resumed sweep
// produces the same report as an uninterrupted one.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qeig/verdict.hpp"

namespace qeig {

struct TupleResult {
    std::string key;  // canonical tuple description, e.g. "q=2,d=3,n=7,j=1"
    Status status = Status::Pass;
    bool flagged = false;  // a finding worth attention (never by itself a FAIL)
    std::string note;
    nlohmann::json witness;  // populated for FAIL / flagged / payload rows
};

struct ReportCounts {
    long pass = 0, fail = 0, excluded = 0, observed = 0, flagged = 0, total = 0;
};

struct VerdictReport {
    std::string check;
    nlohmann::json grid;
    std::vector<TupleResult> tuples;
    ReportCounts counts;
    long long duration_ms = 0;

    bool has_fail() const { return counts.fail > 0; }
    bool has_flagged() const { return counts.flagged > 0; }
};

struct SweepOptions {
    std::string checkpoint_path;  // empty = no checkpointing
    int jobs = 1;
};

std::string witness_hash(const TupleResult& r);

// `keys` fixes the canonical order; `eval(t)` produces the result for
// tuple index t. EXCLUDED rows must be decidable cheaply by eval (they are
// recomputed on resume).
VerdictReport run_sweep(const std::string& check, nlohmann::json grid,
                        const std::vector<std::string>& keys,
                        const std::function<TupleResult(std::size_t)>& eval,
                        const SweepOptions& opt = {});

nlohmann::json report_to_json(const VerdictReport& report);
std::string report_to_csv(const VerdictReport& report);

}  // namespace qeig
