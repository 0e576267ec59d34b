#include "graphent/report.h"

#include <cstdio>
#include <sstream>

#include "graphent/error.h"

namespace graphent {

namespace {

std::vector<size_t> labels_of(SubsetMask s) {
    std::vector<size_t> out;
    for (size_t q : s.members()) {
        out.push_back(q + 1);
    }
    return out;
}

DyadicPurity parse_dyadic(const std::string &s) {
    if (!s.starts_with("1/2^")) {
        throw Error(ErrorCode::kSyntax, "bad dyadic '" + s + "'");
    }
    return DyadicPurity{static_cast<unsigned>(std::stoul(s.substr(4)))};
}

Rational parse_rational(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(std::stoll(s));
    }
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::kJson;
    }
    if (name == "csv") {
        return Format::kCsv;
    }
    if (name == "text") {
        return Format::kText;
    }
    throw Error(ErrorCode::kSyntax, "unknown format '" + std::string(name) + "'");
}

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round12(double v) {
    return std::stod(format12(v));
}

nlohmann::ordered_json report_to_json(const QmReport &report) {
    nlohmann::ordered_json j;
    j["version"] = kReportSchemaVersion;
    j["n"] = report.n;
    j["engine"] = engine_name(report.engine);
    j["values"] = nlohmann::ordered_json::object();
    for (const auto &[m, q] : report.values) {
        j["values"][std::to_string(m)] = round12(q);
    }
    j["exact_values"] = nlohmann::ordered_json::object();
    for (const auto &[m, q] : report.exact_values) {
        j["exact_values"][std::to_string(m)] = q.to_string();
    }
    j["purities"] = nlohmann::ordered_json::array();
    for (const PurityEntry &e : report.purities) {
        nlohmann::ordered_json row;
        row["subset"] = labels_of(e.subset);
        row["size"] = e.subset.size();
        row["value"] = round12(e.value);
        row["exact"] = e.exact ? nlohmann::ordered_json(e.exact->to_string()) : nlohmann::ordered_json(nullptr);
        row["engine"] = engine_name(e.engine);
        j["purities"].push_back(std::move(row));
    }
    j["complement_notes"] = nlohmann::ordered_json::object();
    for (const auto &[m, note] : report.complement_notes) {
        j["complement_notes"][std::to_string(m)] = note;
    }
    j["max_engine_discrepancy"] = report.max_engine_discrepancy
                                      ? nlohmann::ordered_json(round12(*report.max_engine_discrepancy))
                                      : nlohmann::ordered_json(nullptr);
    j["claims"] = nlohmann::ordered_json::array();
    return j;
}

QmReport report_from_json(const nlohmann::ordered_json &j) {
    if (j.at("version").get<int>() != kReportSchemaVersion) {
        throw Error(ErrorCode::kSyntax, "unsupported report schema version");
    }
    QmReport r;
    r.n = j.at("n").get<size_t>();
    r.engine = parse_engine(j.at("engine").get<std::string>());
    for (const auto &[k, v] : j.at("values").items()) {
        r.values[std::stoul(k)] = v.get<double>();
    }
    for (const auto &[k, v] : j.at("exact_values").items()) {
        r.exact_values.emplace(std::stoul(k), parse_rational(v.get<std::string>()));
    }
    for (const auto &row : j.at("purities")) {
        PurityEntry e;
        for (size_t label : row.at("subset").get<std::vector<size_t>>()) {
            e.subset.bits |= uint64_t{1} << (label - 1);
        }
        e.value = row.at("value").get<double>();
        if (!row.at("exact").is_null()) {
            e.exact = parse_dyadic(row.at("exact").get<std::string>());
        }
        e.engine = parse_engine(row.at("engine").get<std::string>());
        r.purities.push_back(e);
    }
    for (const auto &[k, v] : j.at("complement_notes").items()) {
        r.complement_notes[std::stoul(k)] = v.get<std::string>();
    }
    if (!j.at("max_engine_discrepancy").is_null()) {
        r.max_engine_discrepancy = j.at("max_engine_discrepancy").get<double>();
    }
    return r;
}

std::string csv_header() {
    return "graph,subset,size,value,exact,engine\n";
}

std::string report_to_csv(const QmReport &report, const std::string &label) {
    std::ostringstream out;
    for (const PurityEntry &e : report.purities) {
        std::string subset;
        for (size_t q : labels_of(e.subset)) {
            subset += (subset.empty() ? "" : " ") + std::to_string(q);
        }
        out << label << "," << subset << "," << e.subset.size() << "," << format12(e.value) << ","
            << (e.exact ? e.exact->to_string() : "") << "," << engine_name(e.engine) << "\n";
    }
    return out.str();
}

std::string report_to_text(const QmReport &report) {
    std::ostringstream out;
    out << "N = " << report.n << " (engine: " << engine_name(report.engine) << ")\n";
    for (const auto &[m, q] : report.values) {
        out << "Q_" << m << " = " << format12(q);
        auto exact = report.exact_values.find(m);
        if (exact != report.exact_values.end()) {
            out << "  (exact " << exact->second.to_string() << ")";
        }
        out << "\n";
        auto note = report.complement_notes.find(m);
        if (note != report.complement_notes.end()) {
            out << "  note: " << note->second << "\n";
        }
    }
    if (report.max_engine_discrepancy) {
        out << "max engine discrepancy: " << format12(*report.max_engine_discrepancy) << "\n";
    }
    out << "purities:\n";
    for (const PurityEntry &e : report.purities) {
        out << "  " << subset_label(e.subset) << "  " << format12(e.value);
        if (e.exact) {
            out << "  " << e.exact->to_string();
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_report(const QmReport &report, Format format, const std::string &label) {
    switch (format) {
        case Format::kJson:
            return report_to_json(report).dump(2) + "\n";
        case Format::kCsv:
            return csv_header() + report_to_csv(report, label);
        case Format::kText:
            return report_to_text(report);
    }
    return {};
}

const char *status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::kPass:
            return "pass";
        case ClaimStatus::kFail:
            return "fail";
        case ClaimStatus::kInconclusive:
            return "inconclusive";
    }
    return "unknown";
}

bool any_failed(const std::vector<ClaimRecord> &claims) {
    for (const ClaimRecord &c : claims) {
        if (c.status == ClaimStatus::kFail) {
            return true;
        }
    }
    return false;
}

std::string emit_claims(const std::vector<ClaimRecord> &claims, Format format) {
    size_t counts[3] = {0, 0, 0};
    for (const ClaimRecord &c : claims) {
        counts[static_cast<size_t>(c.status)]++;
    }
    if (format == Format::kJson) {
        nlohmann::ordered_json j;
        j["version"] = kReportSchemaVersion;
        j["claims"] = nlohmann::ordered_json::array();
        for (const ClaimRecord &c : claims) {
            j["claims"].push_back({{"id", c.id},
                                   {"description", c.description},
                                   {"status", status_name(c.status)},
                                   {"evidence", c.evidence}});
        }
        j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == Format::kCsv) {
        out << "id,status,description\n";
        for (const ClaimRecord &c : claims) {
            out << c.id << "," << status_name(c.status) << ",\"" << c.description << "\"\n";
        }
        return out.str();
    }
    for (const ClaimRecord &c : claims) {
        out << "[" << status_name(c.status) << "] " << c.id << ": " << c.description << "\n";
    }
    out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " inconclusive\n";
    return out.str();
}

}  // namespace graphent
