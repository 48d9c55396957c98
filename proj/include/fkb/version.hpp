#pragma once

namespace fkb {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "fkb-report-1";

}  // namespace fkb
