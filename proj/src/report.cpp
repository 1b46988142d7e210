#include "lpm/report.hpp"

namespace lpm {

using nlohmann::json;

json to_json(const BuchbergerReport& report) {
    json failures = json::array();
    for (const BuchbergerFailure& f : report.failures) {
        failures.push_back(json{{"f", f.f_index},
                                {"g", f.g_index},
                                {"s_binomial", f.s_binomial},
                                {"cap_exceeded", f.cap_exceeded},
                                {"normal_form", f.normal_form}});
    }
    return json{{"convention", convention_name(report.convention)},
                {"generators", report.generators},
                {"pairs", report.pairs},
                {"zeros", report.zeros},
                {"failures", std::move(failures)},
                {"failures_truncated", report.failures_truncated}};
}

json to_json(const FiberDump& dump) {
    json edges = json::array();
    for (auto [u, v] : dump.edges) edges.push_back(json::array({u, v}));
    return json{{"reason", dump.reason},
                {"mu", dump.mu},
                {"t", dump.t},
                {"vertices", dump.vertices},
                {"thin_flags", dump.thin_flags},
                {"edges", std::move(edges)},
                {"directions", dump.directions},
                {"sinks", dump.sinks}};
}

json to_json(const SweepReport& report) {
    json rows = json::array();
    for (const FiberRow& row : report.rows) {
        rows.push_back(json{{"mu", row.mu},
                            {"t", row.t},
                            {"vertices", row.vertices},
                            {"edges", row.edges},
                            {"connected", row.connected},
                            {"thin_count", row.thin_count},
                            {"thin", row.thin},
                            {"greedy_matches", row.greedy_matches},
                            {"sinks", row.sinks},
                            {"sink_unique", row.sink_unique},
                            {"sink_is_thin", row.sink_is_thin},
                            {"descent_proposal_ascents", row.descent_proposal_ascents},
                            {"descent_gap", row.descent_gap}});
    }
    json anomalies = json::array();
    for (const FiberDump& dump : report.anomalies) anomalies.push_back(to_json(dump));
    return json{{"instance",
                 json{{"alpha", report.alpha},
                      {"omega", report.omega},
                      {"matroid", report.matroid},
                      {"n", report.n},
                      {"r", report.r},
                      {"t_max", report.t_max}}},
                {"convention", convention_name(report.convention)},
                {"totals",
                 json{{"fibers", report.fibers},
                      {"connected", report.connected_fibers},
                      {"disconnected", report.disconnected_fibers},
                      {"thin_anomalies", report.thin_anomalies},
                      {"greedy_mismatches", report.greedy_mismatches},
                      {"nonunique_sink_fibers", report.nonunique_sink_fibers},
                      {"nonthin_sink_fibers", report.nonthin_sink_fibers},
                      {"descent_gap_fibers", report.descent_gap_fibers}}},
                {"fibers", std::move(rows)},
                {"anomalies", std::move(anomalies)},
                {"anomalies_truncated", report.anomalies_truncated}};
}

json audit_json(const SweepReport& sweep, const BuchbergerReport& buchberger) {
    json out = to_json(sweep);
    out["buchberger"] = to_json(buchberger);
    return out;
}

} // namespace lpm
