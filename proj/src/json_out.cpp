#include "idlat/json_out.hpp"

namespace idlat {

nlohmann::ordered_json exponent_vector_json(const ExponentVector& v) {
    return nlohmann::ordered_json(v.coords());
}

nlohmann::ordered_json dagger_report_json(const DaggerReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["holds"] = r.holds;
    j["status"] = r.status;
    j["phase_reached"] = r.phase_reached;
    j["mode"] = r.mode;
    j["p_materialized"] = r.p_materialized;
    j["q_materialized"] = r.q_materialized;
    j["p_size"] = r.p_size;
    j["p_penultimate_size"] = r.p_penultimate_size;
    j["p_checked"] = r.p_checked;
    j["q0_size"] = r.q0_size;
    j["q_size"] = r.q_size;
    j["p_degree"] = r.p_degree;
    j["q0_degree"] = r.q0_degree;
    j["missing_count"] = r.missing_count;
    j["counterexample_count"] = r.counterexamples.size();
    nlohmann::ordered_json cx = nlohmann::ordered_json::array();
    for (const ExponentVector& v : r.counterexamples) cx.push_back(exponent_vector_json(v));
    j["counterexamples"] = std::move(cx);
    j["peak_elements"] = r.peak_elements;
    j["peak_bytes_estimate"] = r.peak_bytes_estimate;
    j["memory_cap_bytes"] = r.memory_cap_bytes;
    j["abort_reason"] = r.abort_reason;
    nlohmann::ordered_json t;
    t["expand_even_s"] = r.timing.expand_even_s;
    t["expand_odd_s"] = r.timing.expand_odd_s;
    t["shift_s"] = r.timing.shift_s;
    t["membership_s"] = r.timing.membership_s;
    t["total_s"] = r.timing.total_s;
    j["timing"] = std::move(t);
    return j;
}

} // namespace idlat
