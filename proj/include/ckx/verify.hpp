#pragma once

#include "ckx/report.hpp"

#include <cstdint>
#include <vector>

namespace ckx {

/// Sweep ranges and tolerances for the verification suites. Empty m_list /
/// zero kmax mean "suite default". Tolerances are fixed defaults chosen
/// from series tail bounds at the test box, overridable from the CLI.
struct VerifyOptions {
    std::vector<unsigned> m_list;
    unsigned kmax = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = CK_THREADS env or hardware concurrency

    double tol_bessel = 1e-10;
    double tol_ex31 = 1e-10;
    double tol_ex32 = 1e-8;
    double tol_ex33 = 1e-8;
    double tol_riesz = 1e-8;
    unsigned numeric_n = 25;
    std::uint64_t mc_samples = 100000;
};

std::vector<std::string> suite_names();

/// Runs one named suite ("algebra", ..., "numeric", "parser") or "all".
/// Entries come back finalized (deterministically ordered).
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt);

VerificationReport run_algebra_suite(const VerifyOptions& opt);
VerificationReport run_polynomial_suite(const VerifyOptions& opt);
VerificationReport run_axial_suite(const VerifyOptions& opt);
VerificationReport run_ck_suite(const VerifyOptions& opt);
VerificationReport run_families_suite(const VerifyOptions& opt);
VerificationReport run_fueter_suite(const VerifyOptions& opt);
VerificationReport run_planewave_suite(const VerifyOptions& opt);
VerificationReport run_numeric_suite(const VerifyOptions& opt);
VerificationReport run_parser_suite(const VerifyOptions& opt);

}  // namespace ckx
