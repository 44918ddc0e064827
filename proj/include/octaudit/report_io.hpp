#pragma once

// Serialization of audit reports: machine-diffable JSON (stable key order),
// a Markdown summary, and the CSV norm table.  All output is deterministic
// for fixed inputs; the only time-dependent field is the optional
// "generated_at" stamp in the document meta block, which callers suppress
// for byte-identical reruns.

#include <octaudit/audit.hpp>
#include <octaudit/rational.hpp>

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace octaudit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const AuditReport& report) {
    ordered_json j;
    j["claim_id"] = report.claim_id;
    j["domain_description"] = report.domain_description;
    j["checked"] = report.checked;
    j["failures"] = ordered_json::array();
    for (const Failure& f : report.failures) {
        ordered_json e;
        e["inputs"] = f.inputs;
        e["lhs"] = f.lhs;
        e["rhs"] = f.rhs;
        j["failures"].push_back(e);
    }
    j["findings"] = ordered_json::array();
    for (const Finding& f : report.findings) {
        ordered_json e;
        e["inputs"] = f.inputs;
        e["stated"] = f.stated;
        e["computed"] = f.computed;
        e["note"] = f.note;
        j["findings"].push_back(e);
    }
    j["status"] = to_string(report.status());
    return j;
}

inline std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

inline ordered_json reports_document(const std::vector<AuditReport>& reports,
                                     const std::string& command, std::uint64_t seed,
                                     bool with_timestamp) {
    ordered_json doc;
    doc["meta"]["command"] = command;
    doc["meta"]["seed"] = seed;
    if (with_timestamp) doc["meta"]["generated_at"] = utc_timestamp();
    doc["reports"] = ordered_json::array();
    for (const AuditReport& r : reports) doc["reports"].push_back(to_json(r));
    return doc;
}

inline std::string to_markdown(const std::vector<AuditReport>& reports,
                               const std::string& command, std::uint64_t seed,
                               bool with_timestamp) {
    std::ostringstream out;
    out << "# Audit report\n\n";
    out << "- command: `" << command << "`\n";
    out << "- seed: " << seed << "\n";
    if (with_timestamp) out << "- generated: " << utc_timestamp() << "\n";
    out << "\n| claim | status | checked | failures | findings |\n";
    out << "|---|---|---:|---:|---:|\n";
    for (const AuditReport& r : reports) {
        out << "| " << r.claim_id << " | " << to_string(r.status()) << " | " << r.checked
            << " | " << r.failures.size() << " | " << r.findings.size() << " |\n";
    }
    bool any_detail = false;
    for (const AuditReport& r : reports) {
        if (r.failures.empty() && r.findings.empty()) continue;
        if (!any_detail) {
            out << "\n## Details\n";
            any_detail = true;
        }
        out << "\n### " << r.claim_id << "\n\n";
        out << r.domain_description << "\n";
        for (const Failure& f : r.failures) {
            out << "\n- FAILURE at " << f.inputs << ": lhs = " << f.lhs << ", rhs = " << f.rhs
                << "\n";
        }
        for (const Finding& f : r.findings) {
            out << "\n- finding at " << f.inputs << ": stated " << f.stated << ", computed "
                << f.computed << " -- " << f.note << "\n";
        }
    }
    return out.str();
}

struct NormTableRow {
    long long n;
    Rational a;
    Rational norm_closed;
    Rational norm_direct;
    bool equal;
};

inline std::string to_csv(const std::vector<NormTableRow>& rows) {
    std::ostringstream out;
    out << "n,a,norm_closed,norm_direct,equal\n";
    for (const NormTableRow& r : rows) {
        out << r.n << "," << to_string(r.a) << "," << to_string(r.norm_closed) << ","
            << to_string(r.norm_direct) << "," << (r.equal ? "true" : "false") << "\n";
    }
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + path);
    out << content;
    if (!out) throw std::invalid_argument("cannot write output path: " + path);
}

}  // namespace octaudit
