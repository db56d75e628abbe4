#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ergo/config_model.hpp"
#include "ergo/cut_spectral.hpp"
#include "ergo/degree_law.hpp"
#include "ergo/edge_list_io.hpp"
#include "ergo/ergm.hpp"
#include "ergo/errors.hpp"
#include "ergo/oracle.hpp"
#include "ergo/report_json.hpp"
#include "ergo/reports.hpp"
#include "ergo/resilience.hpp"
#include "ergo/rng.hpp"
#include "ergo/stats.hpp"

namespace {

using nlohmann::json;

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ergo::io_error("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ergo::input_error("config parse error in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ergo::input_error("config root must be a JSON object");
    return j;
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed) {
    for (const auto& [key, ignored] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ergo::input_error("unknown config key: " + key);
    }
}

double get_double(const json& j, const std::string& key, double fallback, bool* present = nullptr) {
    if (!j.contains(key)) {
        if (present) *present = false;
        return fallback;
    }
    if (present) *present = true;
    if (!j[key].is_number()) throw ergo::input_error("config key " + key + " must be a number");
    return j[key].get<double>();
}

long long get_int(const json& j, const std::string& key, long long fallback,
                  bool* present = nullptr) {
    if (!j.contains(key)) {
        if (present) *present = false;
        return fallback;
    }
    if (present) *present = true;
    if (!j[key].is_number_integer())
        throw ergo::input_error("config key " + key + " must be an integer");
    return j[key].get<long long>();
}

bool get_bool(const json& j, const std::string& key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) throw ergo::input_error("config key " + key + " must be a boolean");
    return j[key].get<bool>();
}

std::string get_string(const json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) throw ergo::input_error("config key " + key + " must be a string");
    return j[key].get<std::string>();
}

std::vector<double> get_double_array(const json& j, const std::string& key) {
    std::vector<double> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ergo::input_error("config key " + key + " must be an array");
    for (const auto& x : j[key]) {
        if (!x.is_number()) throw ergo::input_error("config array " + key + " must hold numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<int> get_int_array(const json& j, const std::string& key) {
    std::vector<int> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ergo::input_error("config key " + key + " must be an array");
    for (const auto& x : j[key]) {
        if (!x.is_number_integer())
            throw ergo::input_error("config array " + key + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        const std::string token = csv.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ergo::input_error("cannot parse number list entry \"" + token + "\"");
        }
        pos = next + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    for (double x : parse_double_list(csv)) {
        if (x != std::floor(x)) throw ergo::input_error("expected integers in list");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::string out_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ergo::io_error("cannot create output directory " + dir);
}

// Shared context: seed/out handling plus the loaded config object.
struct Cli {
    std::string config_path;
    std::uint64_t seed = 1;
    bool seed_set = false;
    std::string out_dir = ".";
    json cfg = json::object();

    void finish_load() {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (!seed_set && cfg.contains("seed")) {
            if (!cfg["seed"].is_number_unsigned() && !cfg["seed"].is_number_integer())
                throw ergo::input_error("config key seed must be an integer");
            seed = cfg["seed"].get<std::uint64_t>();
        }
    }
};

// One Metropolis sample: fresh chain run for its default burn-in (or an
// explicit step count) and the final state taken as the draw.
ergo::Graph erg_graph(int n, double beta, std::size_t target_edges, long long steps,
                      std::uint64_t seed) {
    ergo::ChainConfig cfg;
    cfg.n = n;
    cfg.beta = beta;
    cfg.target_edges = target_edges;
    cfg.seed = seed;
    cfg.steps = steps >= 0 ? steps : cfg.resolved_burn_in();
    ergo::Rng rng = ergo::make_rng(seed);
    ergo::EdgeSwapChain chain(n, target_edges, beta, rng);
    for (long long s = 0; s < cfg.steps; ++s) chain.step(rng);
    return chain.graph();
}

int cmd_sample(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "n", "beta", "c", "target_edges", "steps", "burn_in",
                                  "thinning", "snapshot_limit", "trace"});
    const int n = static_cast<int>(get_int(cli.cfg, "n", -1));
    const double beta = get_double(cli.cfg, "beta", -1.0);
    if (n < 0) throw ergo::input_error("sample requires n");
    if (beta < 0.0) throw ergo::input_error("sample requires beta >= 0");

    bool has_c = false;
    const double c = get_double(cli.cfg, "c", 0.0, &has_c);
    bool has_edges = false;
    long long edges = get_int(cli.cfg, "target_edges", -1, &has_edges);
    if (has_c == has_edges)
        throw ergo::input_error("sample requires exactly one of c or target_edges");
    long long total = -1;
    if (has_c) {
        total = ergo::target_total(c, n);
        edges = total / 2;
    } else {
        if (edges < 0) throw ergo::input_error("target_edges must be nonnegative");
        total = 2 * edges;
    }

    ergo::ChainConfig chain;
    chain.n = n;
    chain.beta = beta;
    chain.target_edges = static_cast<std::size_t>(edges);
    chain.seed = cli.seed;
    chain.burn_in = get_int(cli.cfg, "burn_in", -1);
    chain.thinning = get_int(cli.cfg, "thinning", -1);
    const long long default_steps = chain.resolved_burn_in() + 10 * chain.resolved_thinning();
    chain.steps = get_int(cli.cfg, "steps", default_steps);
    const long long snapshot_limit = get_int(cli.cfg, "snapshot_limit", 8);
    if (snapshot_limit < 0) throw ergo::input_error("snapshot_limit must be nonnegative");
    const bool trace = get_bool(cli.cfg, "trace", true);

    ensure_out_dir(cli.out_dir);
    std::string trace_csv = "step,energy\n";
    std::vector<std::string> snapshot_files;
    std::vector<std::string> snapshot_bodies;
    std::vector<long long> snapshot_steps;
    const ergo::ChainStats stats = ergo::run_chain(
        chain,
        [&](long long step, const ergo::Graph& g) {
            if (static_cast<long long>(snapshot_files.size()) >= snapshot_limit) return;
            snapshot_steps.push_back(step);
            char name[64];
            std::snprintf(name, sizeof name, "snapshot_%03zu.txt", snapshot_files.size());
            std::ostringstream edge_text;
            ergo::write_edge_list(edge_text, g);
            snapshot_files.emplace_back(name);
            snapshot_bodies.push_back(edge_text.str());
        },
        [&](long long step, long long energy) {
            if (!trace) return;
            trace_csv += std::to_string(step);
            trace_csv += ',';
            trace_csv += std::to_string(energy);
            trace_csv += '\n';
        });

    ergo::ReportMeta meta;
    meta.command = "sample";
    meta.seed = cli.seed;
    meta.target_total = total;
    meta.config = ergo::JsonValue::object();
    meta.config.set("n", ergo::JsonValue::integer(n));
    meta.config.set("beta", ergo::JsonValue::real(beta));
    if (has_c) meta.config.set("c", ergo::JsonValue::real(c));
    meta.config.set("target_edges", ergo::JsonValue::integer(edges));
    meta.config.set("steps", ergo::JsonValue::integer(chain.steps));
    meta.config.set("burn_in", ergo::JsonValue::integer(chain.resolved_burn_in()));
    meta.config.set("thinning", ergo::JsonValue::integer(chain.resolved_thinning()));
    meta.config.set("snapshot_limit", ergo::JsonValue::integer(snapshot_limit));
    meta.config.set("trace", ergo::JsonValue::boolean(trace));

    ergo::JsonValue report = ergo::JsonValue::object();
    report.set("meta", ergo::meta_json(meta));
    report.set("proposals", ergo::JsonValue::unsigned_integer(stats.proposals));
    report.set("accepted", ergo::JsonValue::unsigned_integer(stats.accepted));
    report.set("acceptance_rate",
               ergo::JsonValue::real(stats.proposals == 0
                                         ? 0.0
                                         : static_cast<double>(stats.accepted) /
                                               static_cast<double>(stats.proposals)));
    report.set("initial_energy", ergo::JsonValue::integer(stats.initial_energy));
    report.set("final_energy", ergo::JsonValue::integer(stats.final_energy));
    report.set("snapshots_taken", ergo::JsonValue::unsigned_integer(stats.snapshots));
    report.set("snapshots_written",
               ergo::JsonValue::unsigned_integer(snapshot_files.size()));
    {
        ergo::JsonValue steps_at = ergo::JsonValue::array();
        for (long long s : snapshot_steps) steps_at.push(ergo::JsonValue::integer(s));
        report.set("snapshot_steps", std::move(steps_at));
    }

    ergo::write_text_file(out_path(cli.out_dir, "sample_report.json"), report.render());
    if (trace) ergo::write_text_file(out_path(cli.out_dir, "energy_trace.csv"), trace_csv);
    for (std::size_t i = 0; i < snapshot_files.size(); ++i)
        ergo::write_text_file(out_path(cli.out_dir, snapshot_files[i]), snapshot_bodies[i]);
    return 0;
}

int cmd_degrees(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "n", "beta", "c", "samples", "alpha1", "alpha2"});
    const int n = static_cast<int>(get_int(cli.cfg, "n", -1));
    const double beta = get_double(cli.cfg, "beta", 0.0);
    const double c = get_double(cli.cfg, "c", 0.0);
    if (n < 2 || !(beta > 0.0) || !(c > 0.0))
        throw ergo::input_error("degrees requires n >= 2, beta > 0, c > 0");
    const long long samples = get_int(cli.cfg, "samples", 100);
    if (samples < 1) throw ergo::input_error("samples must be positive");
    const double alpha1 = get_double(cli.cfg, "alpha1", 4.0 / beta);
    const double alpha2 = get_double(cli.cfg, "alpha2", 4.0 / beta);

    const ergo::DegreeLawParams params = ergo::calibrate_gamma(beta, c, n);
    const long long total = ergo::target_total(c, n);
    const ergo::DegreeSampler sampler(params);
    ergo::Rng rng = ergo::make_rng(cli.seed);

    std::uint64_t attempts = 0;
    std::uint64_t fallbacks = 0;
    std::uint64_t in_a = 0;
    std::uint64_t in_a1 = 0;
    std::uint64_t in_a2 = 0;
    double max_pos = 0.0;
    double max_neg = 0.0;
    double mean_sum = 0.0;
    double var_sum = 0.0;
    for (long long s = 0; s < samples; ++s) {
        const ergo::ConditionedSample cs = sampler.sample_conditioned(n, total, rng);
        attempts += cs.attempts;
        if (cs.used_fallback) ++fallbacks;
        const ergo::DegreeSequence seq = ergo::degree_stats(cs.degrees);
        const ergo::ConcentrationReport cr =
            ergo::concentration_report(seq, c, n, alpha1, alpha2);
        if (cr.in_A) ++in_a;
        if (cr.in_A1) ++in_a1;
        if (cr.in_A2) ++in_a2;
        max_pos = std::max(max_pos, cr.max_pos_dev);
        max_neg = std::max(max_neg, cr.max_neg_dev);
        mean_sum += seq.mean;
        var_sum += seq.variance;
    }

    ergo::ReportMeta meta;
    meta.command = "degrees";
    meta.seed = cli.seed;
    meta.target_total = total;
    meta.config.set("n", ergo::JsonValue::integer(n));
    meta.config.set("beta", ergo::JsonValue::real(beta));
    meta.config.set("c", ergo::JsonValue::real(c));
    meta.config.set("samples", ergo::JsonValue::integer(samples));
    meta.config.set("alpha1", ergo::JsonValue::real(alpha1));
    meta.config.set("alpha2", ergo::JsonValue::real(alpha2));

    ergo::JsonValue report = ergo::JsonValue::object();
    report.set("meta", ergo::meta_json(meta));
    ergo::JsonValue law = ergo::JsonValue::object();
    law.set("gamma", ergo::JsonValue::real(params.gamma));
    law.set("x_gamma", ergo::JsonValue::real(params.x_gamma));
    law.set("k_gamma", ergo::JsonValue::integer(params.k_gamma));
    law.set("alpha", ergo::JsonValue::real(params.alpha));
    law.set("log_F", ergo::JsonValue::real(params.log_F));
    law.set("mean", ergo::JsonValue::real(params.mean));
    law.set("variance", ergo::JsonValue::real(params.variance));
    report.set("law", std::move(law));
    ergo::JsonValue sampling = ergo::JsonValue::object();
    sampling.set("samples", ergo::JsonValue::integer(samples));
    sampling.set("rejection_attempts", ergo::JsonValue::unsigned_integer(attempts));
    sampling.set("acceptance_rate",
                 ergo::JsonValue::real(static_cast<double>(samples) /
                                       static_cast<double>(attempts)));
    sampling.set("fallbacks", ergo::JsonValue::unsigned_integer(fallbacks));
    report.set("sampling", std::move(sampling));
    ergo::JsonValue conc = ergo::JsonValue::object();
    conc.set("in_A_count", ergo::JsonValue::unsigned_integer(in_a));
    conc.set("in_A1_count", ergo::JsonValue::unsigned_integer(in_a1));
    conc.set("in_A2_count", ergo::JsonValue::unsigned_integer(in_a2));
    conc.set("max_pos_dev", ergo::JsonValue::real(max_pos));
    conc.set("max_neg_dev", ergo::JsonValue::real(max_neg));
    report.set("concentration", std::move(conc));
    report.set("sample_mean_of_means", ergo::JsonValue::real(mean_sum / samples));
    report.set("sample_mean_of_variances", ergo::JsonValue::real(var_sum / samples));

    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "degrees_report.json"), report.render());
    return 0;
}

int cmd_configmodel(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "n", "regular_k", "degrees", "trials"});
    const long long trials = get_int(cli.cfg, "trials", 100000);
    if (trials < 1) throw ergo::input_error("trials must be positive");
    std::vector<int> degrees = get_int_array(cli.cfg, "degrees");
    bool has_k = false;
    const long long k = get_int(cli.cfg, "regular_k", -1, &has_k);
    if (degrees.empty() == !has_k)
        throw ergo::input_error("configmodel requires exactly one of degrees or regular_k");
    if (has_k) {
        const int n = static_cast<int>(get_int(cli.cfg, "n", -1));
        if (n < 1 || k < 0) throw ergo::input_error("regular_k needs n >= 1 and k >= 0");
        degrees.assign(static_cast<std::size_t>(n), static_cast<int>(k));
    }

    ergo::Rng rng = ergo::make_rng(cli.seed);
    const ergo::ConfigStats stats = ergo::simple_fraction(degrees, static_cast<std::uint64_t>(trials), rng);

    ergo::ReportMeta meta;
    meta.command = "configmodel";
    meta.seed = cli.seed;
    long long total = 0;
    for (int d : degrees) total += d;
    meta.target_total = total;
    if (has_k) {
        meta.config.set("n", ergo::JsonValue::integer(static_cast<long long>(degrees.size())));
        meta.config.set("regular_k", ergo::JsonValue::integer(k));
    } else {
        ergo::JsonValue arr = ergo::JsonValue::array();
        for (int d : degrees) arr.push(ergo::JsonValue::integer(d));
        meta.config.set("degrees", std::move(arr));
    }
    meta.config.set("trials", ergo::JsonValue::integer(trials));

    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "configmodel_report.json"),
                          ergo::configmodel_json(meta, stats).render());
    return 0;
}

// Graph acquisition shared by cuts/spectral/resilience: a file wins,
// otherwise an ERG draw at (n, beta, c).
struct GraphSource {
    ergo::Graph graph{0};
    bool from_file = false;
    std::string path;
    int n = 0;
    double beta = 0.0;
    double c = 0.0;
    long long total = -1;

    void echo_config(ergo::JsonValue& cfg) const {
        if (from_file) {
            cfg.set("graph", ergo::JsonValue::string(path));
        } else {
            cfg.set("n", ergo::JsonValue::integer(n));
            cfg.set("beta", ergo::JsonValue::real(beta));
            cfg.set("c", ergo::JsonValue::real(c));
        }
    }
};

GraphSource acquire_graph(const Cli& cli, bool need_c, std::uint64_t stream) {
    GraphSource src;
    src.path = get_string(cli.cfg, "graph", "");
    src.c = get_double(cli.cfg, "c", 0.0);
    if (!src.path.empty()) {
        src.graph = ergo::read_edge_list_file(src.path);
        src.from_file = true;
        src.n = src.graph.order();
        if (need_c && !(src.c > 0.0))
            throw ergo::input_error("c > 0 is required with a graph file here");
        return src;
    }
    src.n = static_cast<int>(get_int(cli.cfg, "n", -1));
    src.beta = get_double(cli.cfg, "beta", -1.0);
    if (src.n < 2 || src.beta < 0.0 || !(src.c > 0.0))
        throw ergo::input_error("need either graph (file) or n, beta >= 0, c > 0");
    src.total = ergo::target_total(src.c, src.n);
    const long long mix_steps = get_int(cli.cfg, "mix_steps", -1);
    src.graph = erg_graph(src.n, src.beta, static_cast<std::size_t>(src.total / 2), mix_steps,
                          ergo::mix64(cli.seed, stream));
    return src;
}

int cmd_cuts(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "graph", "n", "beta", "c", "trials", "mix_steps"});
    const GraphSource src = acquire_graph(cli, true, 0);
    const long long trials = get_int(cli.cfg, "trials", 200);
    if (trials < 1) throw ergo::input_error("trials must be positive");

    ergo::Rng rng = ergo::make_rng(cli.seed, 1);
    const ergo::CutProfile profile =
        ergo::cut_profile(src.graph, src.c, static_cast<std::uint64_t>(trials), rng);

    ergo::ReportMeta meta;
    meta.command = "cuts";
    meta.seed = cli.seed;
    meta.target_total = src.from_file ? -1 : src.total;
    src.echo_config(meta.config);
    meta.config.set("trials", ergo::JsonValue::integer(trials));

    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "cuts_report.json"),
                          ergo::cuts_json(meta, profile).render());
    ergo::write_text_file(out_path(cli.out_dir, "cut_profile.csv"),
                          ergo::cut_profile_csv(profile));
    return 0;
}

int cmd_spectral(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "graph"});
    const std::string path = get_string(cli.cfg, "graph", "");
    if (path.empty()) throw ergo::input_error("spectral requires a graph file");
    const ergo::Graph g = ergo::read_edge_list_file(path);
    const ergo::SpectralReport report = ergo::cheeger_report(g);

    ergo::ReportMeta meta;
    meta.command = "spectral";
    meta.seed = cli.seed;
    meta.config.set("graph", ergo::JsonValue::string(path));

    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "spectral_report.json"),
                          ergo::spectral_json(meta, report).render());
    return 0;
}

int cmd_resilience(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed", "graph", "n", "beta", "c", "model", "p_grid", "trials",
                                  "coupled", "delta_tilde", "cut_trials", "mix_steps"});
    const std::string model = get_string(cli.cfg, "model", "erg");
    if (model != "erg" && model != "er")
        throw ergo::input_error("model must be \"erg\" or \"er\"");

    GraphSource src;
    if (model == "er") {
        src.n = static_cast<int>(get_int(cli.cfg, "n", -1));
        src.c = get_double(cli.cfg, "c", 0.0);
        if (src.n < 2 || !(src.c > 0.0)) throw ergo::input_error("er model needs n >= 2, c > 0");
        src.total = ergo::target_total(src.c, src.n);
        ergo::Rng rng = ergo::make_rng(cli.seed, 0);
        src.graph = ergo::er_sample(src.n, static_cast<std::size_t>(src.total / 2), rng);
    } else {
        src = acquire_graph(cli, true, 0);
    }

    const std::vector<double> p_grid = get_double_array(cli.cfg, "p_grid");
    const long long trials = get_int(cli.cfg, "trials", 200);
    if (trials < 1) throw ergo::input_error("trials must be positive");
    const bool coupled = get_bool(cli.cfg, "coupled", true);

    bool delta_given = false;
    double delta_raw = get_double(cli.cfg, "delta_tilde", 0.0, &delta_given);
    const long long cut_trials = get_int(cli.cfg, "cut_trials", 200);
    if (!delta_given) {
        if (cut_trials < 1) throw ergo::input_error("cut_trials must be positive");
        ergo::Rng rng = ergo::make_rng(cli.seed, 1);
        delta_raw = ergo::cut_profile(src.graph, src.c, static_cast<std::uint64_t>(cut_trials), rng)
                        .empirical_delta;
    }
    // Thresholds need delta in [0,1); the raw empirical value is reported
    // unclamped alongside.
    const double delta_used = std::min(std::max(delta_raw, 0.0), 1.0 - 1e-9);
    const ergo::Thresholds th = ergo::thresholds(src.c, delta_used);

    ergo::Rng rng = ergo::make_rng(cli.seed, 2);
    const ergo::ResilienceReport report = ergo::disconnect_probability(
        src.graph, p_grid, static_cast<std::uint64_t>(trials), rng, coupled);

    ergo::ReportMeta meta;
    meta.command = "resilience";
    meta.seed = cli.seed;
    meta.target_total = src.total;
    meta.config.set("model", ergo::JsonValue::string(model));
    src.echo_config(meta.config);
    {
        ergo::JsonValue grid = ergo::JsonValue::array();
        for (double p : p_grid) grid.push(ergo::JsonValue::real(p));
        meta.config.set("p_grid", std::move(grid));
    }
    meta.config.set("trials", ergo::JsonValue::integer(trials));
    meta.config.set("coupled", ergo::JsonValue::boolean(coupled));
    meta.config.set("delta_source",
                    ergo::JsonValue::string(delta_given ? "config" : "cut_profile"));
    meta.config.set("baseline_note",
                    ergo::JsonValue::string("er baseline is G(n,m) at matched edge count"));

    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "resilience_report.json"),
                          ergo::resilience_json(meta, report, th, delta_raw, delta_used).render());
    ergo::write_text_file(out_path(cli.out_dir, "resilience.csv"), ergo::resilience_csv(report));
    return 0;
}

int cmd_validate(const Cli& cli) {
    reject_unknown_keys(cli.cfg, {"seed"});
    const auto results = ergo::run_validation();
    std::uint64_t failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    }
    ergo::ReportMeta meta;
    meta.command = "validate";
    meta.seed = cli.seed;
    ensure_out_dir(cli.out_dir);
    ergo::write_text_file(out_path(cli.out_dir, "validate_report.json"),
                          ergo::validate_json(meta, results).render());
    if (failed > 0) {
        std::cerr << "{\"error\": \"oracle\", \"message\": \"" << failed
                  << " validation checks failed\"}\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential random graph workbench"};
    app.require_subcommand(1);

    Cli cli;
    // Flags that override config-file values when explicitly passed.
    struct Overrides {
        long long n = 0, trials = 0, steps = 0, burn_in = 0, thinning = 0, samples = 0,
                  target_edges = 0, regular_k = 0, mix_steps = 0, cut_trials = 0,
                  snapshot_limit = 0;
        double beta = 0.0, c = 0.0, alpha1 = 0.0, alpha2 = 0.0, delta_tilde = 0.0;
        std::string graph, model, p_grid, degrees;
        int coupled = -1;
    } ov;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", cli.config_path, "JSON config file");
        sub->add_option("--seed", cli.seed, "RNG seed")->each([&](const std::string&) {
            cli.seed_set = true;
        });
        sub->add_option("--out", cli.out_dir, "output directory");
        return sub;
    };

    CLI::App* sample = add_common(app.add_subcommand("sample", "Metropolis chain sampling"));
    sample->add_option("--n", ov.n);
    sample->add_option("--beta", ov.beta);
    sample->add_option("--c", ov.c);
    sample->add_option("--target-edges", ov.target_edges);
    sample->add_option("--steps", ov.steps);
    sample->add_option("--burn-in", ov.burn_in);
    sample->add_option("--thinning", ov.thinning);
    sample->add_option("--snapshot-limit", ov.snapshot_limit);

    CLI::App* degrees = add_common(app.add_subcommand("degrees", "degree-law calibration"));
    degrees->add_option("--n", ov.n);
    degrees->add_option("--beta", ov.beta);
    degrees->add_option("--c", ov.c);
    degrees->add_option("--samples", ov.samples);
    degrees->add_option("--alpha1", ov.alpha1);
    degrees->add_option("--alpha2", ov.alpha2);

    CLI::App* configmodel = add_common(app.add_subcommand("configmodel", "stub pairing"));
    configmodel->add_option("--n", ov.n);
    configmodel->add_option("--regular-k", ov.regular_k);
    configmodel->add_option("--degrees", ov.degrees, "comma-separated degree list");
    configmodel->add_option("--trials", ov.trials);

    CLI::App* cuts = add_common(app.add_subcommand("cuts", "cut profile"));
    cuts->add_option("--graph", ov.graph);
    cuts->add_option("--n", ov.n);
    cuts->add_option("--beta", ov.beta);
    cuts->add_option("--c", ov.c);
    cuts->add_option("--trials", ov.trials);
    cuts->add_option("--mix-steps", ov.mix_steps);

    CLI::App* spectral = add_common(app.add_subcommand("spectral", "exact cuts and eigenvalues"));
    spectral->add_option("--graph", ov.graph);

    CLI::App* resilience = add_common(app.add_subcommand("resilience", "failure sweep"));
    resilience->add_option("--graph", ov.graph);
    resilience->add_option("--n", ov.n);
    resilience->add_option("--beta", ov.beta);
    resilience->add_option("--c", ov.c);
    resilience->add_option("--model", ov.model);
    resilience->add_option("--p-grid", ov.p_grid, "comma-separated failure probabilities");
    resilience->add_option("--trials", ov.trials);
    resilience->add_option("--coupled", ov.coupled);
    resilience->add_option("--delta-tilde", ov.delta_tilde);
    resilience->add_option("--cut-trials", ov.cut_trials);
    resilience->add_option("--mix-steps", ov.mix_steps);

    CLI::App* validate = add_common(app.add_subcommand("validate", "oracle self-checks"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "{\"error\": \"config\", \"message\": \"" << e.what() << "\"}\n";
        return 2;
    }

    try {
        cli.finish_load();

        // Merge explicitly-passed flags over the file config.
        // Not every subcommand defines every flag; absent ones count as not passed.
        auto passed = [&](CLI::App* sub, const std::string& flag) {
            const CLI::Option* opt = sub->get_option_no_throw(flag);
            return opt != nullptr && opt->count() > 0;
        };
        CLI::App* active = app.get_subcommands().front();
        auto merge_int = [&](const std::string& flag, const std::string& key, long long v) {
            if (passed(active, flag)) cli.cfg[key] = v;
        };
        auto merge_double = [&](const std::string& flag, const std::string& key, double v) {
            if (passed(active, flag)) cli.cfg[key] = v;
        };
        merge_int("--n", "n", ov.n);
        merge_int("--trials", "trials", ov.trials);
        merge_int("--steps", "steps", ov.steps);
        merge_int("--burn-in", "burn_in", ov.burn_in);
        merge_int("--thinning", "thinning", ov.thinning);
        merge_int("--samples", "samples", ov.samples);
        merge_int("--target-edges", "target_edges", ov.target_edges);
        merge_int("--regular-k", "regular_k", ov.regular_k);
        merge_int("--mix-steps", "mix_steps", ov.mix_steps);
        merge_int("--cut-trials", "cut_trials", ov.cut_trials);
        merge_int("--snapshot-limit", "snapshot_limit", ov.snapshot_limit);
        merge_double("--beta", "beta", ov.beta);
        merge_double("--c", "c", ov.c);
        merge_double("--alpha1", "alpha1", ov.alpha1);
        merge_double("--alpha2", "alpha2", ov.alpha2);
        merge_double("--delta-tilde", "delta_tilde", ov.delta_tilde);
        if (passed(active, "--graph")) cli.cfg["graph"] = ov.graph;
        if (passed(active, "--model")) cli.cfg["model"] = ov.model;
        if (passed(active, "--p-grid")) cli.cfg["p_grid"] = parse_double_list(ov.p_grid);
        if (passed(active, "--degrees")) cli.cfg["degrees"] = parse_int_list(ov.degrees);
        if (passed(active, "--coupled")) cli.cfg["coupled"] = ov.coupled != 0;

        if (app.got_subcommand(sample)) return cmd_sample(cli);
        if (app.got_subcommand(degrees)) return cmd_degrees(cli);
        if (app.got_subcommand(configmodel)) return cmd_configmodel(cli);
        if (app.got_subcommand(cuts)) return cmd_cuts(cli);
        if (app.got_subcommand(spectral)) return cmd_spectral(cli);
        if (app.got_subcommand(resilience)) return cmd_resilience(cli);
        if (app.got_subcommand(validate)) return cmd_validate(cli);
        throw ergo::input_error("no subcommand selected");
    } catch (const ergo::capacity_error& e) {
        std::cerr << "{\"error\": \"capacity\", \"message\": \"" << e.what() << "\"}\n";
        return 3;
    } catch (const ergo::oracle_error& e) {
        std::cerr << "{\"error\": \"oracle\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    } catch (const ergo::io_error& e) {
        std::cerr << "{\"error\": \"io\", \"message\": \"" << e.what() << "\"}\n";
        return 5;
    } catch (const ergo::rejection_error& e) {
        std::cerr << "{\"error\": \"capacity\", \"message\": \"" << e.what() << "\"}\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"config\", \"message\": \"" << e.what() << "\"}\n";
        return 2;
    }
}
