#include "mci/linear_model.hpp"

#include <algorithm>
#include <sstream>

namespace mci {

const char* toString(Sense s) {
    switch (s) {
    case Sense::GreaterEqual:
        return ">=";
    case Sense::LessEqual:
        return "<=";
    case Sense::Equal:
        return "=";
    }
    return "?";
}

std::size_t LinearModel::addVariable(std::string name, std::int64_t objective, VarType type) {
    if (index_.contains(name))
        throw std::invalid_argument("duplicate variable '" + name + "'");
    if (objective <= -kCoefficientLimit || objective >= kCoefficientLimit)
        throw std::out_of_range("objective coefficient of '" + name + "' exceeds 2^31");
    std::size_t idx = variables_.size();
    index_.emplace(name, idx);
    variables_.push_back({std::move(name), objective, type});
    return idx;
}

std::optional<std::size_t> LinearModel::findVariable(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t LinearModel::variableIndex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownVariable(name);
    return it->second;
}

void LinearModel::validate(const Constraint& c) const {
    if (c.rhs <= -kCoefficientLimit || c.rhs >= kCoefficientLimit)
        throw std::out_of_range("right-hand side exceeds 2^31");
    for (const auto& t : c.terms) {
        if (t.var >= variables_.size())
            throw std::out_of_range("constraint references variable index " + std::to_string(t.var));
        if (t.coef <= -kCoefficientLimit || t.coef >= kCoefficientLimit)
            throw std::out_of_range("coefficient of '" + variables_[t.var].name + "' exceeds 2^31");
    }
}

void LinearModel::addConstraint(Constraint c) {
    validate(c);
    constraints_.push_back(std::move(c));
}

void LinearModel::addConstraint(std::vector<Term> terms, Sense sense, std::int64_t rhs, std::string group) {
    addConstraint(Constraint{std::move(terms), sense, rhs, std::move(group)});
}

void LinearModel::addConstraints(std::vector<Constraint> cs, const std::string& group) {
    for (auto& c : cs) {
        c.group = group;
        validate(c);
    }
    for (auto& c : cs)
        constraints_.push_back(std::move(c));
}

void LinearModel::addConstraints(const std::vector<NamedConstraint>& cs, const std::string& group) {
    std::vector<Constraint> resolved;
    resolved.reserve(cs.size());
    for (const auto& nc : cs) {
        Constraint c{{}, nc.sense, nc.rhs, group};
        for (const auto& t : nc.terms)
            c.terms.push_back({variableIndex(t.var), t.coef});
        resolved.push_back(std::move(c));
    }
    addConstraints(std::move(resolved), group);
}

std::size_t LinearModel::retractGroup(const std::string& group) {
    return std::erase_if(constraints_, [&](const Constraint& c) { return c.group == group; });
}

std::size_t LinearModel::countGroup(const std::string& group) const {
    return static_cast<std::size_t>(
        std::count_if(constraints_.begin(), constraints_.end(),
                      [&](const Constraint& c) { return c.group == group; }));
}

bool LinearModel::hasContinuous() const {
    return std::any_of(variables_.begin(), variables_.end(),
                       [](const Variable& v) { return v.type == VarType::Continuous; });
}

bool LinearModel::satisfies(std::span<const int> assignment) const {
    if (assignment.size() != variables_.size())
        return false;
    for (const auto& c : constraints_) {
        std::int64_t lhs = 0;
        for (const auto& t : c.terms)
            lhs += t.coef * assignment[t.var];
        bool ok = c.sense == Sense::GreaterEqual ? lhs >= c.rhs
                  : c.sense == Sense::LessEqual  ? lhs <= c.rhs
                                                 : lhs == c.rhs;
        if (!ok)
            return false;
    }
    return true;
}

std::int64_t LinearModel::objectiveValue(std::span<const int> assignment) const {
    std::int64_t value = 0;
    for (std::size_t j = 0; j < variables_.size(); ++j)
        value += variables_[j].objective * assignment[j];
    return value;
}

namespace {

void writeTerm(std::ostringstream& out, std::int64_t coef, const std::string& name, bool first) {
    if (coef < 0)
        out << (first ? "- " : " - ");
    else if (!first)
        out << " + ";
    std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1)
        out << mag << ' ';
    out << name;
}

}  // namespace

std::string exportLP(const LinearModel& model) {
    const auto& vars = model.variables();
    std::ostringstream out;
    out << "\\ generated by mci\n";
    out << "Minimize\n obj: ";
    bool first = true;
    for (const auto& v : vars) {
        if (v.objective == 0)
            continue;
        writeTerm(out, v.objective, v.name, first);
        first = false;
    }
    if (first && !vars.empty())
        out << "0 " << vars.front().name;
    out << "\nSubject To\n";
    std::size_t row = 0;
    for (const auto& c : model.constraints()) {
        ++row;
        out << " c" << row << ": ";
        bool firstTerm = true;
        for (const auto& t : c.terms) {
            if (t.coef == 0)
                continue;
            writeTerm(out, t.coef, vars[t.var].name, firstTerm);
            firstTerm = false;
        }
        // LP format needs at least one variable on the left
        if (firstTerm && !vars.empty())
            out << "0 " << vars.front().name;
        out << ' ' << toString(c.sense) << ' ' << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (const auto& v : vars)
        if (v.type == VarType::Continuous)
            out << ' ' << v.name << " >= 0\n";
    out << "Binary\n";
    for (const auto& v : vars)
        if (v.type == VarType::Binary)
            out << ' ' << v.name << '\n';
    out << "End\n";
    return out.str();
}

}  // namespace mci
