#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "transverify/json_io.hpp"

namespace transverify {

struct CheckResult {
    std::string id;
    std::string ref;  // which identity, in words
    bool pass = false;
    std::string detail;  // residual, mismatch note or match annotation
    std::string orders;  // truncation orders the check ran at
    Json extra;          // optional structured payload (law samples, reports)
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const VerificationReport& o) {
        for (const auto& c : o.checks) checks.push_back(c);
    }
};

inline Json to_json(const CheckResult& c) {
    Json j;
    j["id"] = c.id;
    j["ref"] = c.ref;
    j["status"] = c.pass ? "pass" : "fail";
    j["detail"] = c.detail;
    j["orders"] = c.orders;
    if (!c.extra.is_null()) j["extra"] = c.extra;
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["suite"] = r.suite;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    j["pass"] = r.pass();
    return j;
}

inline std::string render_markdown(const VerificationReport& r) {
    std::ostringstream os;
    os << "# suite: " << r.suite << "\n\n";
    os << "| check | identity | status | detail | orders |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& c : r.checks)
        os << "| " << c.id << " | " << c.ref << " | " << (c.pass ? "pass" : "FAIL") << " | "
           << c.detail << " | " << c.orders << " |\n";
    os << "\noverall: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

inline std::string render_csv(const VerificationReport& r) {
    auto esc = [](const std::string& s) {
        std::string o = "\"";
        for (char ch : s) {
            if (ch == '"') o += "\"\"";
            else o += ch;
        }
        return o + "\"";
    };
    std::ostringstream os;
    os << "suite,check,identity,status,detail,orders\n";
    for (const auto& c : r.checks)
        os << esc(r.suite) << "," << esc(c.id) << "," << esc(c.ref) << ","
           << (c.pass ? "pass" : "fail") << "," << esc(c.detail) << "," << esc(c.orders)
           << "\n";
    return os.str();
}

}  // namespace transverify
