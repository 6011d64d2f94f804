#pragma once

namespace fintop {

inline constexpr const char* kToolName = "fintop";
inline constexpr const char* kToolVersion = "0.1.0";

/// Version of the machine-readable report schema (see docs/report-format.md).
inline constexpr int kReportFormatVersion = 1;

}  // namespace fintop
