#ifndef WGRAPH_BENCH_HPP
#define WGRAPH_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wgraph/all_pairs.hpp"
#include "wgraph/edge_list.hpp"
#include "wgraph/generate.hpp"
#include "wgraph/mst.hpp"
#include "wgraph/shortest_paths.hpp"

namespace wgraph {

/// One timed run of one algorithm on one generated instance.
struct BenchRecord {
    std::string algorithm;
    std::size_t v = 0;
    std::size_t e = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// A runnable entry of the benchmark registry. `run` folds the result into
/// a double so the work cannot be optimized away.
struct BenchAlgorithm {
    bool needs_directed = false;
    bool needs_nonnegative = false;
    std::function<double(const Graph<int>&)> run;
};

namespace detail {

inline double sum_finite(const DistanceMap<int>& m) {
    double s = 0.0;
    for (const auto& [node, d] : m)
        if (d != INF) s += d;
    return s;
}

inline double sum_finite(const DistanceMatrix<int>& m) {
    double s = 0.0;
    for (const auto& [node, row] : m) s += sum_finite(row);
    return s;
}

} // namespace detail

/// Name -> algorithm registry used by the bench and run front-ends.
inline const std::map<std::string, BenchAlgorithm>& bench_algorithms() {
    static const std::map<std::string, BenchAlgorithm> registry = {
        {"boruvka", {false, false, [](const Graph<int>& g) { return boruvka_mst(g).total_weight; }}},
        {"prim", {false, false, [](const Graph<int>& g) { return prim_mst(g).total_weight; }}},
        {"prim_matrix",
         {false, false, [](const Graph<int>& g) { return prim_matrix_mst(g).total_weight; }}},
        {"kruskal", {false, false, [](const Graph<int>& g) { return kruskal_mst(g).total_weight; }}},
        {"bellman_ford",
         {true, false,
          [](const Graph<int>& g) { return detail::sum_finite(bellman_ford(g, g.nodes().front()).distance); }}},
        {"dijkstra",
         {true, true,
          [](const Graph<int>& g) { return detail::sum_finite(dijkstra(g, g.nodes().front()).distance); }}},
        {"dijkstra_matrix",
         {true, true,
          [](const Graph<int>& g) {
              return detail::sum_finite(dijkstra_matrix(g, g.nodes().front()).distance);
          }}},
        {"dag_shortest_path",
         {true, false,
          [](const Graph<int>& g) {
              return detail::sum_finite(dag_shortest_path(g, g.nodes().front()).distance);
          }}},
        {"floyd_warshall",
         {true, false, [](const Graph<int>& g) { return detail::sum_finite(floyd_warshall(g).distance); }}},
        {"johnson", {true, false, [](const Graph<int>& g) { return detail::sum_finite(johnson(g)); }}},
        {"slow_all_pairs",
         {true, false, [](const Graph<int>& g) { return detail::sum_finite(slow_all_pairs(g)); }}},
        {"faster_all_pairs",
         {true, false, [](const Graph<int>& g) { return detail::sum_finite(faster_all_pairs(g)); }}},
    };
    return registry;
}

/// Times `algo` on freshly generated instances: one record per (size,
/// trial). Instance generation is excluded from the timing; each size gets
/// one untimed warmup. Runs strictly sequentially.
inline std::vector<BenchRecord> run_bench(const std::string& algo,
                                          const std::vector<std::size_t>& sizes, int trials,
                                          const GeneratorSpec& base) {
    const auto it = bench_algorithms().find(algo);
    if (it == bench_algorithms().end())
        throw UnknownAlgorithmError("run_bench: unknown algorithm '" + algo + "'");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw InvalidSpecError("run_bench: sizes must be ascending");
    if (sizes.empty() || trials < 1) throw InvalidSpecError("run_bench: nothing to measure");
    const BenchAlgorithm& entry = it->second;
    if (entry.needs_nonnegative && base.weight_lo < 0)
        throw InvalidSpecError("run_bench: " + algo + " needs non-negative weights");

    volatile double sink = 0.0;
    std::vector<BenchRecord> records;
    records.reserve(sizes.size() * static_cast<std::size_t>(trials));
    for (const std::size_t size : sizes) {
        GeneratorSpec spec = base;
        spec.n = size;
        spec.directed = entry.needs_directed;
        for (int trial = -1; trial < trials; ++trial) {
            spec.seed = base.seed + 1000003ULL * size + static_cast<std::uint64_t>(trial + 1);
            const Graph<int> g = generate(spec);
            const auto start = std::chrono::steady_clock::now();
            sink = sink + entry.run(g);
            const auto stop = std::chrono::steady_clock::now();
            if (trial < 0) continue; // warmup
            const double seconds = std::chrono::duration<double>(stop - start).count();
            records.push_back(BenchRecord{algo, g.v(), g.e(), trial, spec.seed,
                                          std::max(seconds, 1e-9)});
        }
    }
    return records;
}

inline constexpr const char* kBenchCsvHeader = "algorithm,v,e,trial,seed,wall_time_s";

/// CSV emitter; wall times keep full precision so the file parses back to
/// the exact records.
inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << kBenchCsvHeader << '\n';
    for (const auto& r : records)
        os << r.algorithm << ',' << r.v << ',' << r.e << ',' << r.trial << ',' << r.seed << ','
           << format_weight(r.wall_time_s) << '\n';
}

inline std::vector<BenchRecord> parse_bench_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kBenchCsvHeader)
        throw FormatError("line 1: expected CSV header '" + std::string(kBenchCsvHeader) + "'");
    std::vector<BenchRecord> records;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 6)
            throw FormatError("line " + std::to_string(line_no) + ": expected 6 CSV fields");
        BenchRecord r;
        r.algorithm = fields[0];
        try {
            r.v = std::stoull(fields[1]);
            r.e = std::stoull(fields[2]);
            r.trial = std::stoi(fields[3]);
            r.seed = std::stoull(fields[4]);
            r.wall_time_s = std::stod(fields[5]);
        } catch (const std::exception&) {
            throw FormatError("line " + std::to_string(line_no) + ": bad CSV field");
        }
        records.push_back(std::move(r));
    }
    return records;
}

/// Least-squares slope of log(median wall time per size) against log(V).
/// The medians tame trial noise; the slope estimates the growth exponent.
inline double fitted_loglog_slope(const std::vector<BenchRecord>& records) {
    std::map<std::size_t, std::vector<double>> by_size;
    for (const auto& r : records) by_size[r.v].push_back(r.wall_time_s);
    if (by_size.size() < 2) throw InvalidSpecError("fitted_loglog_slope: need at least two sizes");

    std::vector<double> xs, ys;
    for (auto& [v, times] : by_size) {
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median =
            times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
        xs.push_back(std::log(static_cast<double>(v)));
        ys.push_back(std::log(median));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace wgraph

#endif // WGRAPH_BENCH_HPP
