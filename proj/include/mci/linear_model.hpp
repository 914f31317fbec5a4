#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mci {

enum class Sense { GreaterEqual, LessEqual, Equal };
enum class VarType { Binary, Continuous };

const char* toString(Sense s);

struct Term {
    std::size_t var = 0;
    std::int64_t coef = 0;
};

struct Constraint {
    std::vector<Term> terms;
    Sense sense = Sense::GreaterEqual;
    std::int64_t rhs = 0;
    std::string group;
};

struct NamedTerm {
    std::string var;
    std::int64_t coef = 0;
};

struct NamedConstraint {
    std::vector<NamedTerm> terms;
    Sense sense = Sense::GreaterEqual;
    std::int64_t rhs = 0;
};

struct Variable {
    std::string name;
    std::int64_t objective = 0;
    VarType type = VarType::Binary;
};

class UnknownVariable : public std::invalid_argument {
public:
    explicit UnknownVariable(const std::string& name)
        : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// |coefficient| and |rhs| must stay below this.
inline constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 31;

/**
 * 0-1 minimization model with integer data. Constraints carry a group tag so
 * that a whole family can be retracted at once (scoped enumeration
 * constraints, solution-forbidding batches).
 *
 * The model also remembers the last optimal assignment found for it; the
 * solver re-checks it against the current constraints and uses it as the
 * starting incumbent when it is still feasible.
 */
class LinearModel {
public:
    /// Throws std::invalid_argument on a duplicate name.
    std::size_t addVariable(std::string name, std::int64_t objective, VarType type = VarType::Binary);

    std::optional<std::size_t> findVariable(const std::string& name) const;
    /// Throws UnknownVariable.
    std::size_t variableIndex(const std::string& name) const;

    void addConstraint(Constraint c);
    void addConstraint(std::vector<Term> terms, Sense sense, std::int64_t rhs, std::string group = {});
    void addConstraints(std::vector<Constraint> cs, const std::string& group);
    /// Name-based form; throws UnknownVariable naming the first bad reference,
    /// in which case the model is left unchanged.
    void addConstraints(const std::vector<NamedConstraint>& cs, const std::string& group);

    /// Removes every constraint tagged with group; returns how many.
    std::size_t retractGroup(const std::string& group);
    std::size_t countGroup(const std::string& group) const;

    std::size_t numVariables() const { return variables_.size(); }
    std::size_t numConstraints() const { return constraints_.size(); }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool hasContinuous() const;

    /// Exact integer evaluation; assignment holds one value per variable.
    bool satisfies(std::span<const int> assignment) const;
    std::int64_t objectiveValue(std::span<const int> assignment) const;

    const std::vector<int>& hint() const { return hint_; }
    void setHint(std::vector<int> assignment) { hint_ = std::move(assignment); }

private:
    void validate(const Constraint& c) const;

    std::vector<Variable> variables_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Constraint> constraints_;
    std::vector<int> hint_;
};

/// Writes the model in CPLEX LP text format. Output depends only on the
/// model contents.
std::string exportLP(const LinearModel& model);

}  // namespace mci
