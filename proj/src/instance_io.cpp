#include "mci/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mci {

namespace {

std::vector<long long> parseIntegers(std::string_view line, std::size_t lineNo) {
    std::vector<long long> values;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        long long v = 0;
        auto token = line.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw InstanceError(lineNo, "not an integer: '" + std::string(token) + "'");
        values.push_back(v);
        i = j;
    }
    return values;
}

bool skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (c != ' ' && c != '\t' && c != '\r')
            return false;
    }
    return true;
}

}  // namespace

Hypergraph parseInstance(std::string_view text) {
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    long long n = -1, m = -1;
    std::vector<VertexSet> hyperedges;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineNo;
        if (skippable(line)) {
            if (end == text.size())
                break;
            continue;
        }

        auto values = parseIntegers(line, lineNo);
        if (n < 0) {
            if (values.size() != 2)
                throw InstanceError(lineNo, "header must be 'n m'");
            n = values[0];
            m = values[1];
            if (n < 1)
                throw InstanceError(lineNo, "vertex count must be positive");
            if (m < 0)
                throw InstanceError(lineNo, "hyperedge count must be nonnegative");
        } else {
            if (static_cast<long long>(hyperedges.size()) == m)
                throw InstanceError(lineNo, "more than " + std::to_string(m) + " hyperedges");
            const long long k = values.front();
            const auto listed = static_cast<long long>(values.size()) - 1;
            if (k != listed)
                throw InstanceError(lineNo, "size " + std::to_string(k) + " but " + std::to_string(listed) +
                                                " vertices listed");
            VertexSet s;
            for (std::size_t i = 1; i < values.size(); ++i) {
                if (values[i] < 1 || values[i] > n)
                    throw InstanceError(lineNo, "vertex " + std::to_string(values[i]) + " out of range 1.." +
                                                    std::to_string(n));
                s.push_back(static_cast<Vertex>(values[i]));
            }
            std::vector<VertexSet> one{s};
            try {
                Hypergraph(static_cast<int>(n), one);
            } catch (const std::invalid_argument& e) {
                throw InstanceError(lineNo, e.what());
            }
            hyperedges.push_back(std::move(s));
        }
        if (end == text.size())
            break;
    }
    if (n < 0)
        throw InstanceError(lineNo, "missing header");
    if (static_cast<long long>(hyperedges.size()) != m)
        throw InstanceError(lineNo, "expected " + std::to_string(m) + " hyperedges, found " +
                                        std::to_string(hyperedges.size()));
    return Hypergraph(static_cast<int>(n), std::move(hyperedges));
}

std::string writeInstance(const Hypergraph& h) {
    std::ostringstream out;
    out << h.numVertices() << ' ' << h.numHyperedges() << '\n';
    for (const auto& s : h.hyperedges()) {
        out << s.size();
        for (Vertex v : s)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Hypergraph readInstanceFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseInstance(buf.str());
}

void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

}  // namespace mci
