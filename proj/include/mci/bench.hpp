#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mci/cut_generation.hpp"
#include "mci/hypergraph.hpp"
#include "mci/instance_gen.hpp"

namespace mci {

enum class Algorithm { Cga1, Cga2, Cga3, Cga4, Cga5, Cga6, Flow, EnumNaive, EnumChunked, Oracle };

std::string toString(Algorithm a);
/// Accepts cga-s1..cga-s6, flow, enum-naive, enum-chunked, oracle.
Algorithm parseAlgorithm(std::string_view name);
std::vector<Algorithm> parseAlgorithmList(std::string_view commaSeparated);

/// One (instance, algorithm) run. CSV columns follow field order.
struct BenchRecord {
    int n = 0;
    int density = 0;
    int type = 0;
    std::uint64_t seed = 0;
    int index = 0;
    Algorithm algorithm = Algorithm::Cga4;
    bool solved = false;
    double wallTime = 0.0;
    std::optional<std::int64_t> cost;
    std::int64_t constraints = 0;
    std::int64_t iterations = 0;
    std::optional<std::int64_t> solutionCount;

    bool operator==(const BenchRecord&) const = default;
};

std::string csvHeader();
/// Floats with 3 decimals, absent values empty.
std::string toCsvRow(const BenchRecord& r);
/// Throws std::invalid_argument on a malformed row.
BenchRecord parseCsvRow(std::string_view row);

/**
 * Runs one algorithm on one instance. The returned cost of a solved run has
 * been re-checked with isFeasible; exceptions are turned into unsolved rows
 * with wallTime = timeLimit.
 */
BenchRecord runOne(const Hypergraph& h, const Scenario& scenario, int index, Algorithm algorithm,
                   double timeLimit);

/// Per (scenario, algorithm): means over solved instances only.
struct ScenarioSummary {
    int n = 0;
    int density = 0;
    int type = 0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::Cga4;
    int instances = 0;
    int solved = 0;
    std::optional<double> meanTime;
    std::optional<double> meanConstraints;
};

std::vector<ScenarioSummary> summarize(const std::vector<BenchRecord>& records);
std::string summaryCsv(const std::vector<ScenarioSummary>& summaries);

/// Lines "n density type count seed"; '#' comments and blank lines ignored.
std::vector<Scenario> parseScenarioFile(std::string_view text);

/// Generates every instance of every scenario and runs each algorithm on it
/// with `workers` threads. Rows come back in (scenario, index, algorithm) order.
std::vector<BenchRecord> runBenchmark(const std::vector<Scenario>& scenarios,
                                      const std::vector<Algorithm>& algorithms, double timeLimit,
                                      int workers = 1);

enum class ModelKind { CutInitial, Flow };

/// LP text of the initial cut model for `strategy`, or of the flow model.
std::string exportModel(const Hypergraph& h, ModelKind kind, Strategy strategy = Strategy::fromNumber(4));

}  // namespace mci
