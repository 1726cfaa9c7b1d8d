#include "thetalab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace thetalab {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
    return out;
}

void emit_check(std::ostringstream& os, const CheckResult& c, const char* indent) {
    os << indent << "{\n";
    os << indent << "  \"id\": " << quoted(c.id) << ",\n";
    os << indent << "  \"description\": " << quoted(c.description) << ",\n";
    os << indent << "  \"measured\": " << fmt_double(c.measured) << ",\n";
    os << indent << "  \"expected\": "
       << (c.expected ? fmt_double(*c.expected) : std::string("null")) << ",\n";
    os << indent << "  \"tolerance\": " << fmt_double(c.tolerance) << ",\n";
    os << indent << "  \"status\": " << quoted(c.status) << "\n";
    os << indent << "}";
}

template <typename Map, typename KeyFmt>
void emit_map(std::ostringstream& os, const Map& m, KeyFmt key_fmt, const char* indent) {
    os << "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "\n" : ",\n") << indent << "  " << key_fmt(k) << ": " << fmt_double(v);
        first = false;
    }
    if (!first) os << "\n" << indent;
    os << "}";
}

}  // namespace

CheckResult make_check(std::string id, std::string description, double measured,
                       std::optional<double> expected, double tolerance) {
    CheckResult c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tolerance;
    if (!expected)
        c.status = "adjudicated";
    else
        c.status = std::abs(measured - *expected) <= tolerance ? "pass" : "fail";
    return c;
}

std::string emit_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"config_echo\": {";
    bool first = true;
    for (const auto& [k, v] : r.config_echo) {
        os << (first ? "\n" : ",\n") << "    " << quoted(k) << ": " << quoted(v);
        first = false;
    }
    if (!first) os << "\n  ";
    os << "},\n";

    os << "  \"check_results\": [";
    first = true;
    for (const CheckResult& c : r.check_results) {
        os << (first ? "\n" : ",\n");
        emit_check(os, c, "    ");
        first = false;
    }
    if (!first) os << "\n  ";
    os << "],\n";

    os << "  \"fitted_c\": " << fmt_double(r.fitted_c) << ",\n";
    os << "  \"norm_direct\": " << fmt_double(r.norm_direct_total) << ",\n";
    os << "  \"norm_from_residue\": ";
    emit_map(os, r.norm_from_residue,
             [](int p) { return quoted(std::to_string(p)); }, "  ");
    os << ",\n";
    os << "  \"final_ratio_to_pi\": " << fmt_double(r.final_ratio_to_pi) << ",\n";
    os << "  \"claimed_ratio\": " << fmt_double(r.claimed_ratio) << ",\n";
    os << "  \"agreement_with_claim\": " << (r.agreement_with_claim ? "true" : "false") << ",\n";
    os << "  \"residue_candidates\": ";
    emit_map(os, r.residue_candidates, [](const std::string& k) { return quoted(k); }, "  ");
    os << ",\n";
    os << "  \"candidate_norms\": ";
    emit_map(os, r.candidate_norms, [](const std::string& k) { return quoted(k); }, "  ");
    os << "\n}\n";
    return os.str();
}

void write_report(const VerificationReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << emit_report(report);
    if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

VerificationReport parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("parse_report: ") + e.what());
    }
    try {
        VerificationReport r;
        for (const auto& [k, v] : j.at("config_echo").items())
            r.config_echo[k] = v.template get<std::string>();
        for (const auto& jc : j.at("check_results")) {
            CheckResult c;
            c.id = jc.at("id").template get<std::string>();
            c.description = jc.at("description").template get<std::string>();
            c.measured = jc.at("measured").template get<double>();
            if (!jc.at("expected").is_null())
                c.expected = jc.at("expected").template get<double>();
            c.tolerance = jc.at("tolerance").template get<double>();
            c.status = jc.at("status").template get<std::string>();
            r.check_results.push_back(std::move(c));
        }
        r.fitted_c = j.at("fitted_c").template get<double>();
        r.norm_direct_total = j.at("norm_direct").template get<double>();
        for (const auto& [k, v] : j.at("norm_from_residue").items())
            r.norm_from_residue[std::stoi(k)] = v.template get<double>();
        r.final_ratio_to_pi = j.at("final_ratio_to_pi").template get<double>();
        r.claimed_ratio = j.at("claimed_ratio").template get<double>();
        r.agreement_with_claim = j.at("agreement_with_claim").template get<bool>();
        for (const auto& [k, v] : j.at("residue_candidates").items())
            r.residue_candidates[k] = v.template get<double>();
        for (const auto& [k, v] : j.at("candidate_norms").items())
            r.candidate_norms[k] = v.template get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("parse_report: missing or mistyped field: ") + e.what());
    }
}

}  // namespace thetalab
