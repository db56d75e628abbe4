#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/config_model.hpp"
#include "ergo/cut_spectral.hpp"
#include "ergo/oracle.hpp"
#include "ergo/report_json.hpp"
#include "ergo/resilience.hpp"

namespace ergo {

// Header block embedded in every JSON report: schema version, the command,
// the fully resolved config, the seed, and the even-total rounding in use
// (target_total < 0 renders as null for commands without one).
struct ReportMeta {
    int schema_version = 1;
    std::string command;
    std::uint64_t seed = 0;
    JsonValue config = JsonValue::object();
    long long target_total = -1;
};

JsonValue meta_json(const ReportMeta& meta);

JsonValue spectral_json(const ReportMeta& meta, const SpectralReport& r);

JsonValue cuts_json(const ReportMeta& meta, const CutProfile& p);
std::string cut_profile_csv(const CutProfile& p);

// delta_raw is cut_profile's empirical value; delta_used is the clamped
// value the thresholds were computed with.
JsonValue resilience_json(const ReportMeta& meta, const ResilienceReport& r, const Thresholds& t,
                          double delta_raw, double delta_used);
std::string resilience_csv(const ResilienceReport& r);

JsonValue configmodel_json(const ReportMeta& meta, const ConfigStats& s);

JsonValue validate_json(const ReportMeta& meta, const std::vector<ValidationResult>& results);

}  // namespace ergo
