#pragma once

// Check records grouped into a suite report, rendered as JSON (versioned) or text.

#include <string>
#include <vector>

#include "json.hpp"

namespace axb {

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

struct Record {
    std::string name;
    Status status = Status::pass;
    std::string witness;
    std::string window;
    std::string detail;
};

struct Summary {
    std::size_t passed = 0, failed = 0, skipped = 0;
};

class Report {
public:
    static constexpr int schema_version = 1;

    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<Record>& records() const { return records_; }

    Record& add(Record r) {
        records_.push_back(std::move(r));
        return records_.back();
    }

    /// Adds a pass/fail record from a boolean outcome.
    Record& check(std::string name, bool ok, std::string window = {}, std::string witness = {},
                  std::string detail = {}) {
        return add({std::move(name), ok ? Status::pass : Status::fail, std::move(witness), std::move(window),
                    std::move(detail)});
    }

    void merge(const Report& other) {
        for (auto r : other.records_) {
            r.name = other.suite_ + "/" + r.name;
            records_.push_back(std::move(r));
        }
    }

    Summary summary() const {
        Summary s;
        for (auto& r : records_) {
            if (r.status == Status::pass) ++s.passed;
            else if (r.status == Status::fail) ++s.failed;
            else ++s.skipped;
        }
        return s;
    }

    bool ok() const { return summary().failed == 0; }
    int exit_code() const { return ok() ? 0 : 1; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema_version"] = schema_version;
        j["suite"] = suite_;
        auto& recs = j["records"] = nlohmann::ordered_json::array();
        for (auto& r : records_) {
            nlohmann::ordered_json o;
            o["name"] = r.name;
            o["status"] = to_string(r.status);
            o["witness"] = r.witness;
            o["window"] = r.window;
            o["detail"] = r.detail;
            recs.push_back(std::move(o));
        }
        auto s = summary();
        j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
        return j;
    }

    std::string to_text() const {
        std::string out = "suite " + suite_ + "\n";
        for (auto& r : records_) {
            out += "  [" + to_string(r.status) + "] " + r.name;
            if (!r.window.empty()) out += "  window: " + r.window;
            if (!r.witness.empty()) out += "  witness: " + r.witness;
            if (!r.detail.empty()) out += "  (" + r.detail + ")";
            out += "\n";
        }
        auto s = summary();
        out += "  " + std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
               std::to_string(s.skipped) + " skipped\n";
        return out;
    }

private:
    std::string suite_;
    std::vector<Record> records_;
};

}  // namespace axb
