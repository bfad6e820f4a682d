#pragma once

// Machine-readable run reports: one structured document per run, a flat
// list of named checks with observed/expected values, and an exit code
// derived only from hard failures (info-level records never affect it).

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace apcheck {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

enum class CheckStatus { pass, fail, info, skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::info: return "info";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

inline CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "info") return CheckStatus::info;
    if (s == "skip") return CheckStatus::skip;
    throw std::invalid_argument("unknown status: " + s);
}

struct CheckRecord {
    std::string name;
    Json inputs;
    Json observed;
    Json expected;
    CheckStatus status = CheckStatus::info;
    double wall_ms = 0;

    Json to_json() const {
        return Json{{"name", name},   {"inputs", inputs},           {"observed", observed},
                    {"expected", expected}, {"status", to_string(status)}, {"wall_ms", wall_ms}};
    }

    static CheckRecord from_json(const Json& j) {
        CheckRecord r;
        r.name = j.at("name").get<std::string>();
        r.inputs = j.at("inputs");
        r.observed = j.at("observed");
        r.expected = j.at("expected");
        r.status = status_from_string(j.at("status").get<std::string>());
        r.wall_ms = j.at("wall_ms").get<double>();
        return r;
    }
};

struct RunReport {
    std::string command;
    Json config;
    std::vector<CheckRecord> checks;
    double wall_ms = 0;
    std::string version = kVersion;

    void add(CheckRecord r) { checks.push_back(std::move(r)); }

    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) ++n;
        return n;
    }

    int exit_code() const { return failures() > 0 ? 1 : 0; }

    Json to_json() const {
        Json arr = Json::array();
        for (const auto& c : checks) arr.push_back(c.to_json());
        return Json{{"command", command}, {"config", config},   {"checks", arr},
                    {"wall_ms", wall_ms}, {"version", version}, {"failures", failures()}};
    }

    static RunReport from_json(const Json& j) {
        RunReport r;
        r.command = j.at("command").get<std::string>();
        r.config = j.at("config");
        for (const auto& c : j.at("checks")) r.checks.push_back(CheckRecord::from_json(c));
        r.wall_ms = j.at("wall_ms").get<double>();
        r.version = j.at("version").get<std::string>();
        return r;
    }
};

class WallTimer {
public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace apcheck
