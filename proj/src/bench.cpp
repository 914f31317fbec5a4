#include "mci/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mci/enumeration.hpp"
#include "mci/flow_milp.hpp"

namespace mci {

namespace {

constexpr const char* kAlgorithmNames[] = {"cga-s1", "cga-s2", "cga-s3", "cga-s4",       "cga-s5",
                                           "cga-s6", "flow",   "enum-naive", "enum-chunked", "oracle"};

std::vector<std::string_view> splitFields(std::string_view row, char sep) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = row.find(sep, pos);
        if (end == std::string_view::npos) {
            fields.push_back(row.substr(pos));
            break;
        }
        fields.push_back(row.substr(pos, end - pos));
        pos = end + 1;
    }
    return fields;
}

template <typename T>
T parseNumber(std::string_view s, const char* field) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("bad ") + field + ": '" + std::string(s) + "'");
    return value;
}

double parseDouble(std::string_view s, const char* field) {
    std::string copy(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(copy, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + field + ": '" + copy + "'");
    }
    if (used != copy.size())
        throw std::invalid_argument(std::string("bad ") + field + ": '" + copy + "'");
    return v;
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string optionalInt(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string toString(Algorithm a) {
    return kAlgorithmNames[static_cast<int>(a)];
}

Algorithm parseAlgorithm(std::string_view name) {
    for (int i = 0; i < 10; ++i)
        if (name == kAlgorithmNames[i])
            return static_cast<Algorithm>(i);
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> parseAlgorithmList(std::string_view commaSeparated) {
    std::vector<Algorithm> out;
    for (auto field : splitFields(commaSeparated, ',')) {
        const auto first = field.find_first_not_of(" \t");
        if (first == std::string_view::npos)
            continue;
        field = field.substr(first, field.find_last_not_of(" \t") - first + 1);
        out.push_back(parseAlgorithm(field));
    }
    if (out.empty())
        throw std::invalid_argument("empty algorithm list");
    return out;
}

std::string csvHeader() {
    return "n,density,type,seed,index,algorithm,solved,wall_time,cost,constraints,iterations,solution_count";
}

std::string toCsvRow(const BenchRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.density << ',' << r.type << ',' << r.seed << ',' << r.index << ','
        << toString(r.algorithm) << ',' << (r.solved ? 1 : 0) << ',' << fixed3(r.wallTime) << ','
        << optionalInt(r.cost) << ',' << r.constraints << ',' << r.iterations << ','
        << optionalInt(r.solutionCount);
    return out.str();
}

BenchRecord parseCsvRow(std::string_view row) {
    while (!row.empty() && (row.back() == '\r' || row.back() == '\n'))
        row.remove_suffix(1);
    auto f = splitFields(row, ',');
    if (f.size() != 12)
        throw std::invalid_argument("expected 12 CSV fields, got " + std::to_string(f.size()));
    BenchRecord r;
    r.n = parseNumber<int>(f[0], "n");
    r.density = parseNumber<int>(f[1], "density");
    r.type = parseNumber<int>(f[2], "type");
    r.seed = parseNumber<std::uint64_t>(f[3], "seed");
    r.index = parseNumber<int>(f[4], "index");
    r.algorithm = parseAlgorithm(f[5]);
    int solved = parseNumber<int>(f[6], "solved");
    if (solved != 0 && solved != 1)
        throw std::invalid_argument("solved must be 0 or 1");
    r.solved = solved == 1;
    r.wallTime = parseDouble(f[7], "wall_time");
    if (!f[8].empty())
        r.cost = parseNumber<std::int64_t>(f[8], "cost");
    r.constraints = parseNumber<std::int64_t>(f[9], "constraints");
    r.iterations = parseNumber<std::int64_t>(f[10], "iterations");
    if (!f[11].empty())
        r.solutionCount = parseNumber<std::int64_t>(f[11], "solution_count");
    return r;
}

BenchRecord runOne(const Hypergraph& h, const Scenario& scenario, int index, Algorithm algorithm,
                   double timeLimit) {
    BenchRecord r;
    r.n = scenario.n;
    r.density = scenario.density;
    r.type = scenario.type;
    r.seed = scenario.seed;
    r.index = index;
    r.algorithm = algorithm;

    auto checkedCost = [&](const SolutionGraph& g) {
        if (!isFeasible(g, h).feasible)
            throw std::logic_error("reported solution is not feasible");
        return static_cast<std::int64_t>(g.numEdges());
    };

    try {
        switch (algorithm) {
        case Algorithm::Flow:
        case Algorithm::Oracle: {
            MciResult res = algorithm == Algorithm::Flow ? solveFlowBaseline(h, timeLimit)
                                                         : fullBipartitionOracle(h, timeLimit);
            r.solved = res.feasible;
            r.wallTime = res.stats.wallTime;
            r.constraints = static_cast<std::int64_t>(res.stats.finalConstraintCount);
            r.iterations = static_cast<std::int64_t>(res.stats.iterations);
            if (r.solved)
                r.cost = checkedCost(res.graph);
            break;
        }
        case Algorithm::EnumNaive:
        case Algorithm::EnumChunked: {
            EnumerationResult res =
                algorithm == Algorithm::EnumNaive ? enumerateNaive(h, timeLimit) : enumerateChunked(h, timeLimit);
            r.solved = res.set.complete;
            r.wallTime = res.stats.wallTime;
            r.constraints = static_cast<std::int64_t>(res.stats.finalConstraintCount);
            r.iterations = static_cast<std::int64_t>(res.stats.outerIterations);
            if (r.solved) {
                for (const auto& g : res.set.solutions)
                    if (checkedCost(g) != res.set.optimalCost)
                        throw std::logic_error("enumerated solution has the wrong cost");
                r.cost = res.set.optimalCost;
                r.solutionCount = static_cast<std::int64_t>(res.set.size());
            }
            break;
        }
        default: {
            Strategy strategy = Strategy::fromNumber(static_cast<int>(algorithm) + 1);
            MciResult res = solveMCI(h, strategy, timeLimit);
            r.solved = res.feasible;
            r.wallTime = res.stats.wallTime;
            r.constraints = static_cast<std::int64_t>(res.stats.finalConstraintCount);
            r.iterations = static_cast<std::int64_t>(res.stats.iterations);
            if (r.solved)
                r.cost = checkedCost(res.graph);
            break;
        }
        }
    } catch (const std::exception&) {
        r.solved = false;
        r.cost.reset();
        r.solutionCount.reset();
    }
    if (!r.solved) {
        r.cost.reset();
        r.solutionCount.reset();
        r.wallTime = std::max(r.wallTime, timeLimit);
    }
    return r;
}

std::vector<ScenarioSummary> summarize(const std::vector<BenchRecord>& records) {
    using Key = std::tuple<int, int, int, std::uint64_t, int>;
    std::map<Key, ScenarioSummary> groups;
    std::map<Key, std::pair<double, double>> sums;
    std::vector<Key> order;
    for (const auto& r : records) {
        Key key{r.n, r.density, r.type, r.seed, static_cast<int>(r.algorithm)};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            it->second = ScenarioSummary{r.n, r.density, r.type, r.seed, r.algorithm, 0, 0, {}, {}};
        }
        auto& s = it->second;
        ++s.instances;
        if (r.solved) {
            ++s.solved;
            sums[key].first += r.wallTime;
            sums[key].second += static_cast<double>(r.constraints);
        }
    }
    std::vector<ScenarioSummary> out;
    for (const auto& key : order) {
        auto s = groups[key];
        if (s.solved > 0) {
            s.meanTime = sums[key].first / s.solved;
            s.meanConstraints = sums[key].second / s.solved;
        }
        out.push_back(s);
    }
    return out;
}

std::string summaryCsv(const std::vector<ScenarioSummary>& summaries) {
    std::ostringstream out;
    out << "n,density,type,seed,algorithm,instances,solved,mean_time,mean_constraints\n";
    for (const auto& s : summaries) {
        out << s.n << ',' << s.density << ',' << s.type << ',' << s.seed << ',' << toString(s.algorithm) << ','
            << s.instances << ',' << s.solved << ',' << (s.meanTime ? fixed3(*s.meanTime) : "") << ','
            << (s.meanConstraints ? fixed3(*s.meanConstraints) : "") << '\n';
    }
    return out.str();
}

std::vector<Scenario> parseScenarioFile(std::string_view text) {
    std::vector<Scenario> scenarios;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        Scenario s;
        if (!(fields >> s.n)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            throw std::invalid_argument("scenario line " + std::to_string(lineNo) + ": expected 'n d type count seed'");
        }
        std::string extra;
        if (!(fields >> s.density >> s.type >> s.count >> s.seed) || (fields >> extra))
            throw std::invalid_argument("scenario line " + std::to_string(lineNo) + ": expected 'n d type count seed'");
        s.validate();
        scenarios.push_back(s);
    }
    return scenarios;
}

std::vector<BenchRecord> runBenchmark(const std::vector<Scenario>& scenarios,
                                      const std::vector<Algorithm>& algorithms, double timeLimit, int workers) {
    struct Job {
        std::size_t scenario;
        int index;
        Algorithm algorithm;
    };
    std::vector<Job> jobs;
    for (std::size_t s = 0; s < scenarios.size(); ++s)
        for (int i = 0; i < scenarios[s].count; ++i)
            for (Algorithm a : algorithms)
                jobs.push_back({s, i, a});

    std::vector<BenchRecord> results(jobs.size());
    std::atomic<std::size_t> nextJob{0};
    auto worker = [&] {
        for (;;) {
            std::size_t j = nextJob.fetch_add(1);
            if (j >= jobs.size())
                return;
            const auto& job = jobs[j];
            const Scenario& sc = scenarios[job.scenario];
            try {
                Hypergraph h = generateInstance(sc, job.index);
                results[j] = runOne(h, sc, job.index, job.algorithm, timeLimit);
            } catch (const std::exception&) {
                BenchRecord r;
                r.n = sc.n;
                r.density = sc.density;
                r.type = sc.type;
                r.seed = sc.seed;
                r.index = job.index;
                r.algorithm = job.algorithm;
                r.wallTime = timeLimit;
                results[j] = r;
            }
        }
    };

    const int threads = std::max(1, workers);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

std::string exportModel(const Hypergraph& h, ModelKind kind, Strategy strategy) {
    if (kind == ModelKind::Flow)
        return exportLP(buildFlowModel(h).model);
    std::vector<Cut> cuts;
    if (strategy.useSingletonInit)
        cuts = singletonCuts(h);
    return exportLP(buildModel(h, cuts));
}

}  // namespace mci
