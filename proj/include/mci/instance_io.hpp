#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mci/hypergraph.hpp"

namespace mci {

/// Malformed instance text; line() is 1-based.
class InstanceError : public std::runtime_error {
public:
    InstanceError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Instance text format:
 *
 *     n m
 *     k v1 ... vk        (m lines, 1-based vertices)
 *
 * Lines starting with '#' and blank lines are ignored anywhere.
 */
Hypergraph parseInstance(std::string_view text);
std::string writeInstance(const Hypergraph& h);

Hypergraph readInstanceFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace mci
