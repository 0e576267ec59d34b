#ifndef GRAPHENT_REPORT_H
#define GRAPHENT_REPORT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/measures.h"
#include "json.hpp"

namespace graphent {

enum class Format { kJson, kCsv, kText };

Format parse_format(std::string_view name);

/// Bumped whenever a field of the JSON layout changes meaning.
constexpr int kReportSchemaVersion = 1;

/// Rounds to 12 significant digits, the precision of every reported float.
double round12(double v);
std::string format12(double v);

/// JSON layout:
///   {"version": 1, "n": N, "engine": "both",
///    "values": {"1": Q_1, ...},
///    "exact_values": {"1": "a/b", ...},
///    "purities": [{"subset": [1, 3], "size": 2, "value": 0.25,
///                  "exact": "1/2^2" | null, "engine": "stabilizer"}, ...],
///    "complement_notes": {"3": "..."},
///    "max_engine_discrepancy": 0.0 | null,
///    "claims": []}
/// Subsets use 1-based qubit labels.
nlohmann::ordered_json report_to_json(const QmReport &report);
/// Inverse of report_to_json (values come back at 12 significant digits).
QmReport report_from_json(const nlohmann::ordered_json &j);

/// CSV has one header line and one row per purity entry; `label` fills the
/// leading graph column.
std::string report_to_csv(const QmReport &report, const std::string &label);
std::string csv_header();
std::string report_to_text(const QmReport &report);

/// Serializes a single report in the requested format.
std::string emit_report(const QmReport &report, Format format, const std::string &label = "");

enum class ClaimStatus { kPass, kFail, kInconclusive };

const char *status_name(ClaimStatus s);

struct ClaimRecord {
    std::string id;
    std::string description;
    ClaimStatus status = ClaimStatus::kFail;
    nlohmann::ordered_json evidence;
};

struct VerifyOptions {
    uint64_t seed = 20160062;
    size_t random_states = 50;
};

/// Checks each statement of the comment (C1..C7) plus the reconstruction of
/// its six-qubit example graph (R1). Failures are reported, never thrown.
std::vector<ClaimRecord> verify_paper(const VerifyOptions &options);

bool any_failed(const std::vector<ClaimRecord> &claims);

std::string emit_claims(const std::vector<ClaimRecord> &claims, Format format);

}  // namespace graphent

#endif
