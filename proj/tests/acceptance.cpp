// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every instance comes from the seeded generator, so runs
// are reproducible.

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mci/cut_generation.hpp"
#include "mci/enumeration.hpp"
#include "mci/flow_milp.hpp"
#include "mci/instance_gen.hpp"
#include "mci/instance_io.hpp"
#include "oracles.hpp"

using namespace mci;

namespace {

constexpr std::uint64_t kSeed = 7919;

using Seconds = std::chrono::duration<double>;

double since(Clock::time_point t) {
    return Seconds(Clock::now() - t).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f s", since(t0));
    std::cout << "criterion " << id << " [" << title << "]: " << (v.pass ? "PASS" : "FAIL") << " (" << v.detail
              << "; " << timing << ")" << std::endl;
    if (!v.pass)
        ++failures;
}

std::int64_t cost(const MciResult& r) {
    return r.feasible ? static_cast<std::int64_t>(r.graph.numEdges()) : -1;
}

// Feasibility through the independent bitmask check, not isFeasible.
bool verified(const MciResult& r, const Hypergraph& h) {
    if (!r.feasible)
        return false;
    // every edge must come from K(H)
    auto pairs = oracle::supportPairs(h);
    std::vector<std::pair<int, int>> used;
    for (const auto& e : r.graph.edges()) {
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(e.u, e.v)) == pairs.end())
            return false;
        used.emplace_back(e.u, e.v);
    }
    return oracle::feasibleEdges(h, used);
}

int maxHyperedgeSize(const Hypergraph& h) {
    std::size_t best = 0;
    for (const auto& s : h.hyperedges())
        best = std::max(best, s.size());
    return static_cast<int>(best);
}

// 100 instances with n <= 12, d = 1: n cycles through 8..12 and every type.
std::vector<Hypergraph> agreementInstances() {
    std::vector<Hypergraph> out;
    for (int n = 8; n <= 12; ++n)
        for (int type = 1; type <= 5; ++type)
            for (int i = 0; i < 4; ++i)
                out.push_back(generateInstance(Scenario{n, 1, type, 4, kSeed + 2}, i));
    return out;
}

Verdict oracleOptimality() {
    int matched = 0, total = 0;
    std::string firstMiss;
    for (int n = 4; n <= 8; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int type = 1; type <= 5; ++type)
                for (int i = 0; i < 4; ++i) {
                    Hypergraph h = generateInstance(Scenario{n, d, type, 4, kSeed + 1}, i);
                    auto res = solveMCI(h, Strategy::fromNumber(4));
                    const auto expected = oracle::bruteForceMinCost(h);
                    ++total;
                    if (verified(res, h) && cost(res) == expected)
                        ++matched;
                    else if (firstMiss.empty())
                        firstMiss = "; first mismatch n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                    " type=" + std::to_string(type) + " index=" + std::to_string(i);
                }
    return {matched == total && total == 200, std::to_string(matched) + "/" + std::to_string(total) + " match" + firstMiss};
}

Verdict strategyAgreement(const std::vector<Hypergraph>& instances, std::vector<std::int64_t>& s4Costs) {
    int agree = 0;
    s4Costs.clear();
    for (const auto& h : instances) {
        std::int64_t reference = -2;
        bool same = true;
        for (int k = 1; k <= 6; ++k) {
            auto res = solveMCI(h, Strategy::fromNumber(k));
            const auto c = verified(res, h) ? cost(res) : -1;
            if (k == 4)
                s4Costs.push_back(c);
            if (reference == -2)
                reference = c;
            same = same && c == reference && c >= 0;
        }
        agree += same ? 1 : 0;
    }
    return {agree == 100, std::to_string(agree) + "/100 instances with identical costs across strategies 1-6"};
}

Verdict baselineAgreement(const std::vector<Hypergraph>& instances, const std::vector<std::int64_t>& s4Costs) {
    int agree = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        auto res = solveFlowBaseline(instances[i]);
        agree += verified(res, instances[i]) && cost(res) == s4Costs[i] ? 1 : 0;
    }
    return {agree == 100, std::to_string(agree) + "/100 flow costs equal cut generation costs"};
}

Verdict fullBipartitionModel() {
    int costAgree = 0, considered = 0;
    for (int n = 4; n <= 6 && considered < 50; ++n)
        for (int index = 0; considered < 50 && index < 400; ++index) {
            const int type = 1 + index % 5;
            Hypergraph h = generateInstance(Scenario{n, 1 + index % 2, type, 400, kSeed + 4}, index);
            if (maxHyperedgeSize(h) > 5)
                continue;
            // at most 17 instances per n so every n is represented
            if (considered >= 17 * (n - 3))
                break;
            ++considered;
            auto full = fullBipartitionOracle(h);
            auto cga = solveMCI(h);
            costAgree += verified(full, h) && verified(cga, h) && cost(full) == cost(cga) ? 1 : 0;
        }

    int exhaustive = 0;
    std::uint64_t assignments = 0;
    for (int index = 0; index < 10; ++index) {
        const int n = 4 + index % 2;
        Hypergraph h = generateInstance(Scenario{n, 1 + index % 2, 1 + index % 5, 10, kSeed + 5}, index);
        LinearModel model = buildModel(h, allBipartitionCuts(h));
        EdgeIndex idx(h);
        auto pairs = oracle::supportPairs(h);
        bool coincide = pairs.size() == model.numVariables();
        const std::size_t k = model.numVariables();
        for (std::uint64_t mask = 0; coincide && mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<int> x(k);
            std::uint64_t pairMask = 0;
            for (std::size_t j = 0; j < k; ++j) {
                x[j] = static_cast<int>((mask >> j) & 1);
                if (x[j]) {
                    const Edge& e = idx.edge(j);
                    auto at = std::find(pairs.begin(), pairs.end(), std::make_pair(e.u, e.v)) - pairs.begin();
                    pairMask |= std::uint64_t{1} << at;
                }
            }
            coincide = oracle::holds(model, x) == oracle::feasibleMask(h, pairs, pairMask);
            ++assignments;
        }
        exhaustive += coincide ? 1 : 0;
    }
    return {costAgree == 50 && considered == 50 && exhaustive == 10,
            std::to_string(costAgree) + "/" + std::to_string(considered) + " oracle costs match; " +
                std::to_string(exhaustive) + "/10 exhaustive equivalences over " + std::to_string(assignments) +
                " assignments"};
}

Verdict enumerationCorrectness() {
    int agree = 0;
    for (int index = 0; index < 50; ++index) {
        const int n = 4 + index % 4;
        Hypergraph h = generateInstance(Scenario{n, 1 + index % 2, 1 + index % 5, 50, kSeed + 6}, index);
        auto brute = oracle::bruteForceOptimalSet(h);
        auto naive = enumerateNaive(h);
        auto chunked = enumerateChunked(h);
        agree += naive.set.complete && chunked.set.complete && naive.set.solutions == brute &&
                         chunked.set.solutions == brute
                     ? 1
                     : 0;
    }
    std::string cayley;
    bool cayleyOk = true;
    for (int k = 3; k <= 5; ++k) {
        VertexSet s;
        for (int v = 1; v <= k; ++v)
            s.push_back(v);
        Hypergraph h(k, {s});
        const auto expected = static_cast<std::size_t>(std::llround(std::pow(k, k - 2)));
        const auto naive = enumerateNaive(h).set.size();
        const auto chunked = enumerateChunked(h).set.size();
        const auto brute = oracle::bruteForceOptimalSet(h).size();
        cayleyOk = cayleyOk && naive == expected && chunked == expected && brute == expected;
        cayley += (k > 3 ? "/" : "") + std::to_string(chunked);
    }
    return {agree == 50 && cayleyOk,
            std::to_string(agree) + "/50 solution sets identical; Cayley counts " + cayley + " (expected 3/16/125)"};
}

Verdict flowWitnessProperty() {
    std::mt19937_64 rng(kSeed + 7);
    int ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        VertexSet all;
        for (int v = 1; v <= n; ++v)
            all.push_back(v);
        std::shuffle(all.begin(), all.end(), rng);
        const auto size = 1 + rng() % std::min<std::uint64_t>(7, all.size());
        VertexSet s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(s.begin(), s.end());
        std::vector<Edge> edges;
        const auto density = 1 + rng() % 4;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 5 < density)
                    edges.emplace_back(u, v);
        SolutionGraph g(n, edges);
        const Vertex root = s[rng() % s.size()];

        // connectivity of g[S] by the bitmask oracle on a one-hyperedge instance
        Hypergraph single(n, {s});
        auto pairs = oracle::supportPairs(single);
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (g.contains(Edge(pairs[i].first, pairs[i].second)))
                mask |= std::uint64_t{1} << i;
        const bool connected = oracle::feasibleMask(single, pairs, mask);

        auto w = flowWitness(g, s, root);
        const bool satisfied = w && satisfiesFlowConstraints(g, s, root, *w);
        ok += satisfied == connected ? 1 : 0;
    }
    return {ok == 500, std::to_string(ok) + "/500 triples: witness satisfies the flow rows iff G[S] is connected"};
}

Verdict constraintTrend() {
    bool pass = true;
    std::ostringstream detail;
    for (int type = 1; type <= 5; ++type) {
        double cga = 0, flow = 0;
        int solved = 0;
        for (int i = 0; i < 20; ++i) {
            Hypergraph h = generateInstance(Scenario{14, 1, type, 20, kSeed + 8}, i);
            auto res = solveMCI(h, Strategy::fromNumber(4), 600);
            solved += res.feasible ? 1 : 0;
            cga += static_cast<double>(res.stats.finalConstraintCount);
            flow += static_cast<double>(flowConstraintCount(h));
        }
        cga /= 20;
        flow /= 20;
        const double ratio = flow / cga;
        pass = pass && solved == 20 && cga < flow && ratio >= 2.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%stype %d: %.1f vs %.1f (x%.2f)", type > 1 ? ", " : "", type, cga, flow, ratio);
        detail << buf;
    }
    return {pass, detail.str()};
}

Verdict greedyBound() {
    std::vector<int> sizes;
    long checked = 0, violations = 0;
    std::function<void(int)> rec = [&](int minSize) {
        if (sizes.size() >= 2) {
            std::vector<VertexSet> comps;
            int next = 1;
            for (int s : sizes) {
                VertexSet c;
                for (int k = 0; k < s; ++k)
                    c.push_back(next++);
                comps.push_back(std::move(c));
            }
            auto [a, b] = greedyBalancedBipartition(comps);
            const auto larger = static_cast<long>(std::max(a.size(), b.size()));
            // larger <= 7/6 opt, compared in integers
            if (6 * larger > 7L * oracle::optimalLargerSide(sizes))
                ++violations;
            ++checked;
        }
        if (sizes.size() == 8)
            return;
        for (int s = minSize; s <= 6; ++s) {
            sizes.push_back(s);
            rec(s);
            sizes.pop_back();
        }
    };
    rec(1);
    return {violations == 0 && checked == 2996,
            std::to_string(checked) + " multisets, " + std::to_string(violations) + " above 7/6 of optimum"};
}

Verdict generatorStatistics() {
    bool pass = true;
    std::ostringstream detail;
    for (int type = 1; type <= 5; ++type) {
        const int n = 14;
        const auto [lo, hi] = type == 5 ? std::make_pair(2, n) : sizeBounds(type, n);
        std::vector<int> draws;
        Scenario sc{n, 1, type, 1000, kSeed + 9};
        for (int i = 0; static_cast<int>(draws.size()) < 1000; ++i) {
            const Hypergraph h = generateInstance(sc, i);
            for (const auto& s : h.hyperedges())
                if (draws.size() < 1000)
                    draws.push_back(static_cast<int>(s.size()));
        }
        bool inRange = true;
        for (int d : draws)
            inRange = inRange && d >= lo && d <= hi;
        pass = pass && inRange;

        char buf[160];
        if (type <= 4) {
            const int k = hi - lo + 1;
            std::vector<double> counts(static_cast<std::size_t>(k), 0.0);
            for (int d : draws)
                counts[static_cast<std::size_t>(d - lo)] += 1;
            const double expected = 1000.0 / k;
            double stat = 0;
            for (double c : counts)
                stat += (c - expected) * (c - expected) / expected;
            boost::math::chi_squared dist(k - 1);
            const double critical = boost::math::quantile(dist, 1 - 0.001);
            pass = pass && stat < critical;
            std::snprintf(buf, sizeof buf, "type %d chi2=%.1f<%.1f%s; ", type, stat, critical, inRange ? "" : " OUT OF RANGE");
        } else {
            // Binomial(n, 1/2) conditioned on size >= 2
            double mass = 0, first = 0, second = 0;
            for (int s = 2; s <= n; ++s) {
                const double p = std::exp(std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0)) *
                                 std::pow(0.5, n);
                mass += p;
                first += p * s;
                second += p * s * s;
            }
            const double mean = first / mass;
            const double sd = std::sqrt(second / mass - mean * mean);
            const double se = sd / std::sqrt(1000.0);
            double observed = 0;
            for (int d : draws)
                observed += d;
            observed /= 1000.0;
            const double z = std::abs(observed - mean) / se;
            pass = pass && z <= 3.0;
            std::snprintf(buf, sizeof buf, "type 5 mean %.3f vs %.3f (%.2f SE)%s; ", observed, mean, z,
                          inRange ? "" : " OUT OF RANGE");
        }
        detail << buf;
    }

    // two generation runs into separate directories must match byte for byte
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "mci_acceptance_gen";
    fs::remove_all(base);
    auto writeRun = [&](const std::string& name) {
        std::vector<std::string> contents;
        for (int type = 1; type <= 5; ++type) {
            Scenario sc{14, 1, type, 10, kSeed + 10};
            fs::create_directories(base / name);
            for (int i = 0; i < sc.count; ++i) {
                auto path = base / name / instanceFileName(sc, i);
                writeTextFile(path.string(), writeInstance(generateInstance(sc, i)));
                std::ifstream in(path, std::ios::binary);
                std::stringstream buf;
                buf << in.rdbuf();
                contents.push_back(buf.str());
            }
        }
        return contents;
    };
    const bool identical = writeRun("a") == writeRun("b");
    fs::remove_all(base);
    pass = pass && identical;
    detail << (identical ? "files byte-identical" : "files differ");
    return {pass, detail.str()};
}

Verdict performanceGate() {
    int within = 0;
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        Hypergraph h = generateInstance(Scenario{14, 1, 2, 50, kSeed + 11}, i);
        const auto t0 = Clock::now();
        auto res = solveMCI(h, Strategy::fromNumber(4), 60);
        const double elapsed = since(t0);
        worst = std::max(worst, elapsed);
        within += verified(res, h) && elapsed <= 60.0 ? 1 : 0;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/50 solved within 60 s, slowest %.3f s", within, worst);
    return {within == 50, buf};
}

}  // namespace

int main() {
    report(1, "oracle optimality", oracleOptimality);
    const auto instances = agreementInstances();
    std::vector<std::int64_t> s4Costs;
    report(2, "strategy agreement", [&] { return strategyAgreement(instances, s4Costs); });
    report(3, "baseline agreement", [&] { return baselineAgreement(instances, s4Costs); });
    report(4, "full bipartition model", fullBipartitionModel);
    report(5, "enumeration correctness", enumerationCorrectness);
    report(6, "flow witness", flowWitnessProperty);
    report(7, "constraint count trend", constraintTrend);
    report(8, "greedy bipartition bound", greedyBound);
    report(9, "generator statistics", generatorStatistics);
    report(10, "performance gate", performanceGate);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
