#include "ckx/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace ckx {

void VerificationReport::merge(VerificationReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
    for (auto& [k, v] : other.params) params.emplace(k, v);
}

void VerificationReport::finalize() {
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.suite, a.check, a.m, a.k) < std::tie(b.suite, b.check, b.m, b.k);
    });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.status == "fail"; }));
}

std::size_t VerificationReport::passes() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.status == "pass"; }));
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["seed"] = seed;
    j["params"] = params;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["suite"] = e.suite;
        je["check"] = e.check;
        je["m"] = e.m;
        if (e.k) je["k"] = *e.k;
        je["status"] = e.status;
        if (!e.detail.empty()) je["detail"] = e.detail;
        arr.push_back(std::move(je));
    }
    j["entries"] = std::move(arr);
    j["summary"] = {{"pass", passes()},
                    {"fail", failures()},
                    {"info", entries.size() - passes() - failures()}};
    return j.dump(2);
}

ReportEntry make_pass(std::string suite, std::string check, unsigned m, std::optional<long long> k,
                      std::string detail) {
    return ReportEntry{std::move(suite), std::move(check), m, k, "pass", std::move(detail)};
}

ReportEntry make_fail(std::string suite, std::string check, unsigned m, std::optional<long long> k,
                      std::string detail) {
    return ReportEntry{std::move(suite), std::move(check), m, k, "fail", std::move(detail)};
}

ReportEntry make_info(std::string suite, std::string check, unsigned m, std::optional<long long> k,
                      std::string detail) {
    return ReportEntry{std::move(suite), std::move(check), m, k, "info", std::move(detail)};
}

}  // namespace ckx
