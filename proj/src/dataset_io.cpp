#include "eclipse/dataset_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace eclipse {

namespace {

std::string format_snr(double snr) {
    if (std::isinf(snr)) return "inf";
    std::ostringstream os;
    os << snr;
    return os.str();
}

double parse_snr(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::string format_indices(const std::vector<std::size_t>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    if (s == "-") return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(std::stoull(tok));
    }
    return out;
}

// Parses "key=value" tokens from one header line into a map-like lookup.
std::string header_value(const std::string& line, const std::string& key) {
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos && tok.substr(0, eq) == key) {
            return tok.substr(eq + 1);
        }
    }
    throw DataFormatError("dataset header: missing field '" + key + "'");
}

const char* mode_name(MeanMode mode) {
    return mode == MeanMode::euclidean ? "euclidean" : "sample-restricted";
}

}  // namespace

void write_dataset(std::ostream& os, const GraphSequence& seq) {
    os << "BCNSEQ 1\n";
    os << "p=" << seq.p << " q=" << seq.q << " n=" << seq.size()
       << " rows=" << seq.rows_used << " snr=" << format_snr(seq.snr)
       << " seed=" << seq.seed << "\n";
    const GroundTruth truth = seq.truth.value_or(GroundTruth{});
    os << "attack=" << (truth.attack ? 1 : 0) << " tau=" << truth.tau
       << " victims=" << format_indices(truth.victims)
       << " attackers=" << format_indices(truth.attackers) << "\n";
    std::string line(seq.rows_used * seq.p, '0');
    for (const auto& snap : seq.snapshots) {
        const auto& e = snap.entries();
        if (e.size() != line.size()) {
            throw DataFormatError("write_dataset: snapshot shape mismatch");
        }
        for (std::size_t k = 0; k < e.size(); ++k) line[k] = e[k] ? '1' : '0';
        os << line << "\n";
    }
}

void write_dataset_file(const std::filesystem::path& path, const GraphSequence& seq) {
    std::ofstream os(path);
    if (!os) throw DataFormatError("cannot open for writing: " + path.string());
    write_dataset(os, seq);
}

GraphSequence read_dataset(std::istream& is) {
    std::string magic;
    int version = 0;
    if (!(is >> magic >> version) || magic != "BCNSEQ" || version != 1) {
        throw DataFormatError("dataset: bad magic line (expected 'BCNSEQ 1')");
    }
    is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');

    std::string params_line;
    std::string truth_line;
    if (!std::getline(is, params_line) || !std::getline(is, truth_line)) {
        throw DataFormatError("dataset: truncated header");
    }

    GraphSequence seq;
    seq.p = std::stoull(header_value(params_line, "p"));
    seq.q = std::stoull(header_value(params_line, "q"));
    const std::size_t n = std::stoull(header_value(params_line, "n"));
    seq.rows_used = std::stoull(header_value(params_line, "rows"));
    seq.snr = parse_snr(header_value(params_line, "snr"));
    seq.seed = std::stoull(header_value(params_line, "seed"));

    GroundTruth truth;
    truth.attack = header_value(truth_line, "attack") == "1";
    truth.tau = std::stoull(header_value(truth_line, "tau"));
    truth.victims = parse_indices(header_value(truth_line, "victims"));
    truth.attackers = parse_indices(header_value(truth_line, "attackers"));
    seq.truth = truth;

    const std::size_t expected_len = seq.rows_used * seq.p;
    seq.snapshots.reserve(n);
    std::string line;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(is, line)) {
            throw DataFormatError("dataset: fewer body lines than header n");
        }
        if (line.size() != expected_len) {
            throw DataFormatError("dataset: body line length != rows*p");
        }
        AdjacencyMatrix snap(seq.rows_used, seq.p);
        for (std::size_t k = 0; k < expected_len; ++k) {
            if (line[k] == '1') {
                snap.entries()[k] = 1;
            } else if (line[k] != '0') {
                throw DataFormatError("dataset: body characters must be '0' or '1'");
            }
        }
        seq.snapshots.push_back(std::move(snap));
    }
    return seq;
}

GraphSequence read_dataset_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw DataFormatError("cannot open dataset: " + path.string());
    return read_dataset(is);
}

nlohmann::json report_to_json(const DetectionReport& report) {
    nlohmann::json j;
    j["detected"] = report.detected;
    if (report.tau_hat) {
        j["tau_hat"] = *report.tau_hat;
    } else {
        j["tau_hat"] = nullptr;
    }
    j["max_scaled_stat"] = report.max_scaled_stat;
    j["threshold"] = report.threshold;
    j["sequence_length"] = report.sequence_length;
    j["sequence_seed"] = report.sequence_seed;

    nlohmann::json cfg;
    cfg["alpha"] = report.config.alpha;
    cfg["delta"] = report.config.delta;
    cfg["mean_mode"] = mode_name(report.config.mean_mode);
    cfg["use_projection"] = report.config.use_projection;
    cfg["quantile_paths"] = report.config.quantile_paths;
    cfg["quantile_grid"] = report.config.quantile_grid;
    cfg["quantile_seed"] = report.config.quantile_seed;
    if (report.config.use_projection) {
        cfg["jl_dim"] = report.config.jl_dim;
        cfg["epsilon"] = report.config.epsilon;
        cfg["jl_seed"] = report.config.jl_seed;
    }
    j["config"] = cfg;

    if (report.jl_map) {
        nlohmann::json m;
        m["k"] = report.jl_map->k;
        m["m"] = report.jl_map->m;
        m["epsilon"] = report.jl_map->epsilon;
        m["seed"] = report.jl_map->seed;
        m["verified"] = report.jl_map->verified;
        m["max_distortion"] = report.jl_map->max_distortion;
        j["jl_map"] = m;
    }

    nlohmann::json curve;
    curve["n_total"] = report.curve.n_total;
    curve["delta"] = report.curve.delta;
    curve["sigma_sq"] = report.curve.sigma_sq;
    curve["pooled_variance"] = report.curve.pooled_variance;
    curve["window_first_n"] = report.curve.ns.front();
    curve["window_last_n"] = report.curve.ns.back();
    j["curve"] = curve;
    return j;
}

nlohmann::json summary_to_json(const ExperimentSummary& summary) {
    nlohmann::json j;
    j["detection_accuracy"] = summary.detection_accuracy;
    j["onset_rmse"] = summary.onset_rmse;
    j["onset_median_abs_err"] = summary.onset_median_abs_err;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : summary.records) {
        recs.push_back({{"seed", r.seed},
                        {"truth_attack", r.truth_attack},
                        {"detected", r.detected},
                        {"max_scaled_stat", r.max_scaled_stat},
                        {"tau_hat", r.tau_hat}});
    }
    j["trials"] = recs;
    return j;
}

nlohmann::json roc_to_json(const RocCurve& curve) {
    nlohmann::json j;
    j["snr"] = std::isinf(curve.snr) ? nlohmann::json("inf")
                                     : nlohmann::json(curve.snr);
    j["auc"] = curve.auc;
    j["trials_per_class"] = curve.trials_per_class;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : curve.points) {
        pts.push_back({{"fpr", p.fpr}, {"tpr", p.tpr}, {"threshold", p.threshold}});
    }
    j["points"] = pts;
    return j;
}

void write_curve_csv(std::ostream& os, const StatisticCurve& curve) {
    os << "n,t,S,T\n";
    for (std::size_t i = 0; i < curve.ns.size(); ++i) {
        os << curve.ns[i] << ','
           << static_cast<double>(curve.ns[i]) / static_cast<double>(curve.n_total)
           << ',' << curve.values[i] << ',' << curve.scaled[i] << "\n";
    }
}

void write_roc_csv(std::ostream& os, const RocCurve& curve) {
    os << "threshold,fpr,tpr\n";
    for (const auto& p : curve.points) {
        os << p.threshold << ',' << p.fpr << ',' << p.tpr << "\n";
    }
}

void write_comparison_csv(std::ostream& os, const CurveComparison& cmp) {
    os << "n,t,T_original_avg,T_projected_avg\n";
    for (std::size_t i = 0; i < cmp.ns.size(); ++i) {
        os << cmp.ns[i] << ',' << cmp.t[i] << ',' << cmp.original_avg[i] << ','
           << cmp.projected_avg[i] << "\n";
    }
}

BridgeQuantileTable cached_bridge_quantile(const std::filesystem::path& cache_path,
                                           double alpha, double delta,
                                           std::size_t grid_points,
                                           std::size_t n_paths,
                                           std::uint64_t seed) {
    std::ostringstream key;
    key << "a" << alpha << "_d" << delta << "_g" << grid_points << "_p"
        << n_paths << "_s" << seed;

    nlohmann::json cache = nlohmann::json::object();
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        std::ifstream is(cache_path);
        try {
            is >> cache;
        } catch (const nlohmann::json::exception&) {
            cache = nlohmann::json::object();
        }
    }

    BridgeQuantileTable table;
    table.alpha = alpha;
    table.delta = delta;
    table.grid_points = grid_points;
    table.n_paths = n_paths;
    table.seed = seed;
    if (cache.contains(key.str())) {
        table.quantile = cache[key.str()].get<double>();
        return table;
    }

    table = simulate_bridge_quantile(alpha, delta, grid_points, n_paths, seed);
    if (!cache_path.empty()) {
        cache[key.str()] = table.quantile;
        std::ofstream os(cache_path);
        if (os) os << cache.dump(2) << "\n";
    }
    return table;
}

}  // namespace eclipse
