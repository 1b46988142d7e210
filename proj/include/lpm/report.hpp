#ifndef LPM_REPORT_HPP
#define LPM_REPORT_HPP

#include <json.hpp>

#include "lpm/toric.hpp"

namespace lpm {

/// JSON forms of the audit reports. nlohmann objects keep sorted keys, so
/// serialized reports are byte-stable across runs.
nlohmann::json to_json(const BuchbergerReport& report);
nlohmann::json to_json(const FiberDump& dump);
nlohmann::json to_json(const SweepReport& report);

/// Full audit schema: {instance, convention, fibers, buchberger, anomalies}.
nlohmann::json audit_json(const SweepReport& sweep, const BuchbergerReport& buchberger);

} // namespace lpm

#endif
