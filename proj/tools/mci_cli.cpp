#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mci/bench.hpp"
#include "mci/cut_generation.hpp"
#include "mci/enumeration.hpp"
#include "mci/flow_milp.hpp"
#include "mci/instance_gen.hpp"
#include "mci/instance_io.hpp"

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInstance = 2;
constexpr int kTimeout = 3;

void printResult(const mci::MciResult& res, const char* label) {
    std::cout << "algorithm " << label << '\n';
    std::cout << "status " << (res.feasible ? "optimal" : "timed-out") << '\n';
    std::cout << "cost " << res.graph.numEdges() << '\n';
    std::cout << "iterations " << res.stats.iterations << '\n';
    std::cout << "constraints " << res.stats.finalConstraintCount << '\n';
    std::cout << "wall_time " << res.stats.wallTime << '\n';
    std::cout << "edges " << res.graph.toString() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum Connectivity Inference: exact solvers, enumeration and benchmarks"};
    app.require_subcommand(1);

    // gen
    mci::Scenario scenario;
    std::string genOut = ".";
    auto* gen = app.add_subcommand("gen", "generate random instances");
    gen->add_option("--n", scenario.n, "vertex count")->required();
    gen->add_option("--density", scenario.density, "hyperedges per vertex (m = d n)")->required();
    gen->add_option("--type", scenario.type, "hyperedge type 1..5")->required();
    gen->add_option("--count", scenario.count, "number of instances")->capture_default_str();
    gen->add_option("--seed", scenario.seed, "64-bit seed")->capture_default_str();
    gen->add_option("--out", genOut, "output directory")->capture_default_str();

    // solve
    int strategyNumber = 4;
    double timeLimit = 900.0;
    std::string input;
    auto* solveCmd = app.add_subcommand("solve", "constraint generation solver");
    solveCmd->add_option("--strategy", strategyNumber, "strategy 1..6")->check(CLI::Range(1, 6))->capture_default_str();
    solveCmd->add_option("--time-limit", timeLimit, "seconds")->capture_default_str();
    solveCmd->add_option("--input", input, "instance file")->required();

    auto* flowCmd = app.add_subcommand("flow", "flow-based baseline");
    flowCmd->add_option("--time-limit", timeLimit, "seconds")->capture_default_str();
    flowCmd->add_option("--input", input, "instance file")->required();

    std::string method = "chunked";
    auto* enumCmd = app.add_subcommand("enum", "enumerate all optimal solutions");
    enumCmd->add_option("--method", method, "naive or chunked")
        ->check(CLI::IsMember({"naive", "chunked"}))
        ->capture_default_str();
    enumCmd->add_option("--time-limit", timeLimit, "seconds")->capture_default_str();
    enumCmd->add_option("--input", input, "instance file")->required();

    std::string scenarioFile, algos = "cga-s4,flow", benchOut = "results.csv", summaryOut;
    int workers = 1;
    auto* bench = app.add_subcommand("bench", "benchmark harness");
    bench->add_option("--scenarios", scenarioFile, "file with lines 'n d type count seed'")->required();
    bench->add_option("--algos", algos, "comma separated algorithm list")->capture_default_str();
    bench->add_option("--time-limit", timeLimit, "seconds per run")->capture_default_str();
    bench->add_option("--workers", workers, "parallel jobs")->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--out", benchOut, "per-run CSV")->capture_default_str();
    bench->add_option("--summary", summaryOut, "per-scenario CSV (default: <out>.summary.csv)");

    std::string kind = "cut-initial", exportOut;
    auto* exportCmd = app.add_subcommand("export", "write an LP model");
    exportCmd->add_option("--kind", kind, "cut-initial or flow")
        ->check(CLI::IsMember({"cut-initial", "flow"}))
        ->capture_default_str();
    exportCmd->add_option("--strategy", strategyNumber, "strategy for cut-initial")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    exportCmd->add_option("--input", input, "instance file")->required();
    exportCmd->add_option("--out", exportOut, "LP file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    auto loadInput = [&]() { return mci::readInstanceFile(input); };

    try {
        if (*gen) {
            scenario.validate();
            std::filesystem::create_directories(genOut);
            for (int i = 0; i < scenario.count; ++i) {
                auto h = mci::generateInstance(scenario, i);
                auto path = std::filesystem::path(genOut) / mci::instanceFileName(scenario, i);
                mci::writeTextFile(path.string(), mci::writeInstance(h));
                std::cout << path.string() << '\n';
            }
            return kOk;
        }
        if (*bench) {
            std::ifstream in(scenarioFile);
            if (!in) {
                std::cerr << "cannot open " << scenarioFile << '\n';
                return kUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            auto scenarios = mci::parseScenarioFile(buf.str());
            auto algorithms = mci::parseAlgorithmList(algos);
            auto records = mci::runBenchmark(scenarios, algorithms, timeLimit, workers);
            std::string csv = mci::csvHeader() + "\n";
            for (const auto& r : records)
                csv += mci::toCsvRow(r) + "\n";
            mci::writeTextFile(benchOut, csv);
            if (summaryOut.empty())
                summaryOut = benchOut + ".summary.csv";
            mci::writeTextFile(summaryOut, mci::summaryCsv(mci::summarize(records)));
            std::cout << records.size() << " runs written to " << benchOut << '\n';
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInstance;
    }

    mci::Hypergraph h;
    try {
        h = loadInput();
    } catch (const std::exception& e) {
        std::cerr << "error: " << input << ": " << e.what() << '\n';
        return kInstance;
    }

    if (*solveCmd) {
        auto res = mci::solveMCI(h, mci::Strategy::fromNumber(strategyNumber), timeLimit);
        printResult(res, ("cga-s" + std::to_string(strategyNumber)).c_str());
        return res.feasible ? kOk : kTimeout;
    }
    if (*flowCmd) {
        auto res = mci::solveFlowBaseline(h, timeLimit);
        printResult(res, "flow");
        return res.feasible ? kOk : kTimeout;
    }
    if (*enumCmd) {
        auto res = method == "naive" ? mci::enumerateNaive(h, timeLimit) : mci::enumerateChunked(h, timeLimit);
        std::cout << mci::writeSolutionSet(res.set);
        if (!res.set.complete) {
            std::cerr << "time limit reached; solution set incomplete\n";
            return kTimeout;
        }
        return kOk;
    }
    if (*exportCmd) {
        auto text = mci::exportModel(h, kind == "flow" ? mci::ModelKind::Flow : mci::ModelKind::CutInitial,
                                     mci::Strategy::fromNumber(strategyNumber));
        if (exportOut.empty())
            std::cout << text;
        else
            mci::writeTextFile(exportOut, text);
        return kOk;
    }
    return kUsage;
}
