#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckx {

inline constexpr const char* kToolName = "ckx";
inline constexpr const char* kToolVersion = "0.1.0";

/// One verification outcome. k and ell are optional sweep coordinates.
struct ReportEntry {
    std::string suite;
    std::string check;
    unsigned m = 0;
    std::optional<long long> k;
    std::string status;  // "pass", "fail" or "info"
    std::string detail;

    bool passed() const { return status != "fail"; }
};

/// Machine-readable run record: deterministic entry order, failure
/// witnesses in detail, flag echo in params.
struct VerificationReport {
    std::vector<ReportEntry> entries;
    std::map<std::string, std::string> params;
    unsigned long long seed = 0;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void merge(VerificationReport other);
    /// Sorts by (suite, check, m, k) for reproducible output.
    void finalize();

    std::size_t failures() const;
    std::size_t passes() const;

    std::string to_json() const;
};

ReportEntry make_pass(std::string suite, std::string check, unsigned m,
                      std::optional<long long> k = std::nullopt, std::string detail = "");
ReportEntry make_fail(std::string suite, std::string check, unsigned m,
                      std::optional<long long> k, std::string detail);
ReportEntry make_info(std::string suite, std::string check, unsigned m,
                      std::optional<long long> k, std::string detail);

}  // namespace ckx
