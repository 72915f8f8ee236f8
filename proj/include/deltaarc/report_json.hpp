// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "deltaarc/faot.hpp"

namespace deltaarc {

inline nlohmann::json violations_to_json(const std::vector<PathedViolation>& violations) {
    nlohmann::json out = nlohmann::json::array();
    for (const PathedViolation& v : violations) {
        out.push_back({{"path", v.path},
                       {"delta", v.violation.delta},
                       {"component", v.violation.component},
                       {"op", to_string(v.violation.op)},
                       {"kind", to_string(v.violation.kind)},
                       {"detail", v.violation.detail}});
    }
    return out;
}

inline nlohmann::json report_to_json(const AnalysisReport& report) {
    nlohmann::json findings = nlohmann::json::array();
    for (const PathedContextFinding& f : report.context_findings) {
        findings.push_back({{"path", f.path},
                            {"component", f.finding.component},
                            {"kind", to_string(f.finding.kind)},
                            {"detail", f.finding.detail}});
    }
    return {{"passed", report.passed},
            {"violations", violations_to_json(report.violations)},
            {"contextFindings", findings},
            {"stats",
             {{"nodesVisited", report.stats.nodes_visited},
              {"edges", report.stats.edges},
              {"deltaApplications", report.stats.delta_applications},
              {"inverseApplications", report.stats.inverse_applications},
              {"snapshotsStored", report.stats.snapshots_stored},
              {"peakSnapshotsHeld", report.stats.peak_snapshots_held}}}};
}

}  // namespace deltaarc
