#include "ergo/reports.hpp"

namespace ergo {

namespace {

JsonValue int_array(const std::vector<int>& xs) {
    JsonValue a = JsonValue::array();
    for (int x : xs) a.push(JsonValue::integer(x));
    return a;
}

JsonValue real_array(const std::vector<double>& xs) {
    JsonValue a = JsonValue::array();
    for (double x : xs) a.push(JsonValue::real(x));
    return a;
}

}  // namespace

JsonValue meta_json(const ReportMeta& meta) {
    JsonValue m = JsonValue::object();
    m.set("schema_version", JsonValue::integer(meta.schema_version));
    m.set("command", JsonValue::string(meta.command));
    m.set("seed", JsonValue::unsigned_integer(meta.seed));
    m.set("log_convention", JsonValue::string("natural"));
    m.set("target_total",
          meta.target_total < 0 ? JsonValue() : JsonValue::integer(meta.target_total));
    JsonValue config = meta.config;
    m.set("config", std::move(config));
    return m;
}

JsonValue spectral_json(const ReportMeta& meta, const SpectralReport& r) {
    JsonValue j = JsonValue::object();
    j.set("meta", meta_json(meta));
    j.set("phi", JsonValue::real(r.phi));
    j.set("phi_witness", int_array(r.phi_witness));
    j.set("conductance", JsonValue::real(r.conductance));
    j.set("conductance_witness", int_array(r.conductance_witness));
    j.set("lambda2_L", JsonValue::real(r.lambda2_L));
    j.set("lambda2_P", JsonValue::real(r.lambda2_P));
    j.set("d_max", JsonValue::integer(r.d_max));
    j.set("laplacian_lower_holds", JsonValue::boolean(r.laplacian_lower_holds));
    j.set("laplacian_upper_holds", JsonValue::boolean(r.laplacian_upper_holds));
    j.set("walk_lower_holds", JsonValue::boolean(r.walk_lower_holds));
    j.set("walk_upper_holds", JsonValue::boolean(r.walk_upper_holds));
    j.set("walk_upper_tight_holds", JsonValue::boolean(r.walk_upper_tight_holds));
    j.set("dense_tolerance", JsonValue::real(r.dense_tolerance));
    j.set("iterative_tolerance", JsonValue::real(r.iterative_tolerance));
    return j;
}

JsonValue cuts_json(const ReportMeta& meta, const CutProfile& p) {
    JsonValue j = JsonValue::object();
    j.set("meta", meta_json(meta));
    j.set("c", JsonValue::real(p.c));
    JsonValue buckets = JsonValue::array();
    for (const auto& b : p.buckets) {
        JsonValue bucket = JsonValue::object();
        bucket.set("u", JsonValue::integer(b.u));
        bucket.set("min_ratio", JsonValue::real(b.min_ratio));
        bucket.set("samples", JsonValue::unsigned_integer(b.samples));
        bucket.set("exhaustive", JsonValue::boolean(b.exhaustive));
        buckets.push(std::move(bucket));
    }
    j.set("buckets", std::move(buckets));
    j.set("empirical_delta", JsonValue::real(p.empirical_delta));
    return j;
}

std::string cut_profile_csv(const CutProfile& p) {
    std::string out = "u,min_ratio,samples\n";
    for (const auto& b : p.buckets) {
        out += std::to_string(b.u);
        out += ',';
        out += format_double(b.min_ratio);
        out += ',';
        out += std::to_string(b.samples);
        out += '\n';
    }
    return out;
}

JsonValue resilience_json(const ReportMeta& meta, const ResilienceReport& r, const Thresholds& t,
                          double delta_raw, double delta_used) {
    JsonValue j = JsonValue::object();
    j.set("meta", meta_json(meta));
    j.set("trials", JsonValue::unsigned_integer(r.trials));
    j.set("coupled", JsonValue::boolean(r.coupled));
    j.set("p_grid", real_array(r.p_grid));
    j.set("disconnect_prob", real_array(r.disconnect_prob));
    j.set("ci_low", real_array(r.ci_low));
    j.set("ci_high", real_array(r.ci_high));
    j.set("isolation_bound", real_array(r.isolation_bound));
    j.set("isolation_bound_raw", real_array(r.isolation_bound_raw));
    j.set("isolated_freq", real_array(r.isolated_freq));
    j.set("delta_tilde_raw", JsonValue::real(delta_raw));
    j.set("delta_tilde_used", JsonValue::real(delta_used));
    JsonValue th = JsonValue::object();
    th.set("proved", JsonValue::real(t.proved));
    th.set("isolated_node", JsonValue::real(t.isolated_node));
    th.set("er", JsonValue::real(t.er));
    j.set("thresholds", std::move(th));
    return j;
}

std::string resilience_csv(const ResilienceReport& r) {
    std::string out = "p,estimate,ci_low,ci_high,isolation_bound\n";
    for (std::size_t i = 0; i < r.p_grid.size(); ++i) {
        out += format_double(r.p_grid[i]);
        out += ',';
        out += format_double(r.disconnect_prob[i]);
        out += ',';
        out += format_double(r.ci_low[i]);
        out += ',';
        out += format_double(r.ci_high[i]);
        out += ',';
        out += format_double(r.isolation_bound[i]);
        out += '\n';
    }
    return out;
}

JsonValue configmodel_json(const ReportMeta& meta, const ConfigStats& s) {
    JsonValue j = JsonValue::object();
    j.set("meta", meta_json(meta));
    j.set("trials", JsonValue::unsigned_integer(s.trials));
    j.set("simple_count", JsonValue::unsigned_integer(s.simple_count));
    j.set("lambda", JsonValue::real(s.lambda));
    j.set("predicted_simple", JsonValue::real(s.predicted_simple));
    j.set("empirical_simple", JsonValue::real(s.empirical_simple));
    j.set("ci_low", JsonValue::real(s.ci.low));
    j.set("ci_high", JsonValue::real(s.ci.high));
    return j;
}

JsonValue validate_json(const ReportMeta& meta, const std::vector<ValidationResult>& results) {
    JsonValue j = JsonValue::object();
    j.set("meta", meta_json(meta));
    std::uint64_t failed = 0;
    JsonValue checks = JsonValue::array();
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        JsonValue c = JsonValue::object();
        c.set("name", JsonValue::string(r.name));
        c.set("passed", JsonValue::boolean(r.passed));
        c.set("detail", JsonValue::string(r.detail));
        checks.push(std::move(c));
    }
    j.set("checks", std::move(checks));
    j.set("failed", JsonValue::unsigned_integer(failed));
    return j;
}

}  // namespace ergo
