#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "eclipse/detector.hpp"
#include "eclipse/evaluation.hpp"

#include "json.hpp"

namespace eclipse {

// Dataset text format, one file per GraphSequence:
//
//   BCNSEQ 1
//   p=<int> q=<int> n=<int> rows=<int> snr=<float|inf> seed=<int>
//   attack=<0|1> tau=<int> victims=<csv ints> attackers=<csv ints>
//   <n body lines of rows*p '0'/'1' characters, snapshots in time order>
//
// victims/attackers use 0-based vertex indices; tau is the 1-based index
// of the first attacked snapshot. Empty index lists are written as "-".
void write_dataset(std::ostream& os, const GraphSequence& seq);
void write_dataset_file(const std::filesystem::path& path, const GraphSequence& seq);

GraphSequence read_dataset(std::istream& is);
GraphSequence read_dataset_file(const std::filesystem::path& path);

nlohmann::json report_to_json(const DetectionReport& report);
nlohmann::json summary_to_json(const ExperimentSummary& summary);
nlohmann::json roc_to_json(const RocCurve& curve);

void write_curve_csv(std::ostream& os, const StatisticCurve& curve);
void write_roc_csv(std::ostream& os, const RocCurve& curve);
void write_comparison_csv(std::ostream& os, const CurveComparison& cmp);

// Small JSON file caching bridge quantiles across CLI runs, keyed by
// (alpha, delta, grid, paths, seed). Returns the cached or freshly
// simulated table; a missing or unreadable cache file is treated as empty.
BridgeQuantileTable cached_bridge_quantile(const std::filesystem::path& cache_path,
                                           double alpha, double delta,
                                           std::size_t grid_points,
                                           std::size_t n_paths,
                                           std::uint64_t seed);

}  // namespace eclipse
