#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bient/entanglement.hpp"

namespace bient::cli {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

enum class ReportFormat { text, json };

/// Every field, 12 significant digits.
std::string render_report(const EntanglementReport& report, ReportFormat format);

int cmd_compute(const std::string& path, ReportFormat format, bool renormalize, std::ostream& out,
                std::ostream& err);

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    /// max | |u| - |v| | over the Haar ensemble; reported, not checked.
    double max_u_v_gap = 0.0;

    bool overall() const noexcept;
};

/// Runs every cross-formula check over n Haar-random states (state i drawn
/// from RandomStream(seed).derive(i)) plus the canonical families.
/// A check passes iff its max observed error is <= tol.
VerifyOutcome run_verification(std::size_t n, std::uint64_t seed, double tol);

std::string render_verify_table(const VerifyOutcome& outcome);

int cmd_verify(std::size_t n, std::uint64_t seed, double tol, std::ostream& out, std::ostream& err);

inline constexpr const char* kSampleHeader = "index,c,eof,u_norm,v_norm,k1,k2";

/// Header plus one row per Haar-random 2x3 state.
void write_sample_csv(std::size_t n, std::uint64_t seed, std::ostream& out);

/// `path` of "-" writes to `out`.
int cmd_sample(std::size_t n, std::uint64_t seed, const std::string& path, std::ostream& out, std::ostream& err);

} // namespace bient::cli
