#pragma once

// Result types shared by every checker in the library.
//
// A *failure* is a hard mismatch: the two sides of an identity disagree at
// some input, i.e. the computation contradicts itself.  A *finding* is a
// discrepancy between a value stated in the source material being audited
// and the value this library computes; findings are reported, never thrown.
// Report status is derived, never stored independently:
//   any failure -> "fail", else any finding -> "finding", else "pass".

#include <string>
#include <vector>

namespace octaudit {

struct Failure {
    std::string inputs;  // human-readable description of the offending input
    std::string lhs;     // exact left-hand value
    std::string rhs;     // exact right-hand value
};

struct Finding {
    std::string inputs;    // where the discrepancy occurs
    std::string stated;    // the value as stated in the audited material
    std::string computed;  // the value this library computes
    std::string note;      // short explanation
};

enum class AuditStatus { Pass, Finding, Fail };

inline const char* to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "pass";
        case AuditStatus::Finding: return "finding";
        case AuditStatus::Fail: return "fail";
    }
    return "fail";
}

struct AuditReport {
    std::string claim_id;            // stable identifier, e.g. "P2.1.i"
    std::string domain_description;  // what range/sample was checked
    long long checked = 0;           // number of instances evaluated
    std::vector<Failure> failures;
    std::vector<Finding> findings;

    AuditStatus status() const {
        if (!failures.empty()) return AuditStatus::Fail;
        if (!findings.empty()) return AuditStatus::Finding;
        return AuditStatus::Pass;
    }
};

}  // namespace octaudit
