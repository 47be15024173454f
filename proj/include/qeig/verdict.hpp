// Four-valued check outcome. PASS/FAIL apply to proved claims (a FAIL is a
// bug), EXCLUDED marks tuples outside a lemma or theorem hypothesis, and
// OBSERVED reports on open conjectures where a violation is a finding, not
// a test failure.
#pragma once

#include <string>

#include <json.hpp>

namespace qeig {

enum class Status { Pass, Fail, Excluded, Observed };

const char* status_name(Status s);
Status status_from_name(const std::string& name);

// A verdict carries the exact witness values, so a failure is reproducible
// from the report alone.
struct Verdict {
    Status status = Status::Pass;
    std::string clause;      // which hypothesis clause applied, if any
    std::string note;        // exclusion reason / short explanation
    nlohmann::json witness;  // exact values (big integers as decimal strings)

    bool passed() const { return status == Status::Pass; }
};

}  // namespace qeig
