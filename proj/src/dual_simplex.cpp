#include "dual_simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mci::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPrimalTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr std::size_t kRefactorEvery = 64;
constexpr std::size_t kMaxPivotsPerSolve = 200000;

}  // namespace

DualSimplex::DualSimplex(std::span<const double> cost, std::span<const Constraint> rows)
    : rows_(rows.size()), structurals_(cost.size()), cols_(cost.size() + rows.size()) {
    original_.assign(rows_ * cols_, 0.0);
    rhs_.resize(rows_);
    cost_.assign(cols_, 0.0);
    lo_.assign(cols_, 0.0);
    hi_.assign(cols_, 1.0);
    for (std::size_t j = 0; j < structurals_; ++j)
        cost_[j] = cost[j];

    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& c = rows[i];
        for (const auto& t : c.terms)
            original_[i * cols_ + t.var] += static_cast<double>(t.coef);
        original_[i * cols_ + structurals_ + i] = 1.0;
        rhs_[i] = static_cast<double>(c.rhs);
        // A x + s = b:  A x >= b  <=>  s <= 0
        std::size_t s = structurals_ + i;
        switch (c.sense) {
        case Sense::GreaterEqual:
            lo_[s] = -kInf;
            hi_[s] = 0.0;
            break;
        case Sense::LessEqual:
            lo_[s] = 0.0;
            hi_[s] = kInf;
            break;
        case Sense::Equal:
            lo_[s] = 0.0;
            hi_[s] = 0.0;
            break;
        }
    }
    x_.assign(cols_, 0.0);
    atUpper_.assign(cols_, 0);
    resetToSlackBasis();
}

void DualSimplex::resetToSlackBasis() {
    tableau_ = original_;
    beta_ = rhs_;
    basis_.resize(rows_);
    rowOf_.assign(cols_, -1);
    for (std::size_t i = 0; i < rows_; ++i) {
        basis_[i] = structurals_ + i;
        rowOf_[structurals_ + i] = static_cast<long>(i);
    }
    reduced_ = cost_;
    for (std::size_t i = 0; i < rows_; ++i)
        reduced_[structurals_ + i] = 0.0;
    sinceRefactor_ = 0;
}

void DualSimplex::setBounds(std::size_t j, double lo, double hi) {
    lo_[j] = lo;
    hi_[j] = hi;
}

double DualSimplex::objective() const {
    double z = 0.0;
    for (std::size_t j = 0; j < structurals_; ++j)
        z += cost_[j] * x_[j];
    return z;
}

void DualSimplex::placeNonbasics() {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (rowOf_[j] >= 0)
            continue;
        bool upper;
        if (lo_[j] == hi_[j])
            upper = false;
        else if (reduced_[j] > kDualTol)
            upper = false;
        else if (reduced_[j] < -kDualTol)
            upper = true;
        else
            upper = atUpper_[j] != 0;
        if (upper && hi_[j] == kInf)
            upper = false;
        if (!upper && lo_[j] == -kInf)
            upper = true;
        atUpper_[j] = upper ? 1 : 0;
        x_[j] = upper ? hi_[j] : lo_[j];
    }
}

void DualSimplex::computeBasics() {
    for (std::size_t i = 0; i < rows_; ++i) {
        double v = beta_[i];
        const double* row = &tableau_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rowOf_[j] < 0 && x_[j] != 0.0)
                v -= row[j] * x_[j];
        }
        x_[basis_[i]] = v;
    }
}

void DualSimplex::pivot(std::size_t r, std::size_t q) {
    double* prow = &tableau_[r * cols_];
    const double piv = prow[q];
    const double theta = reduced_[q] / piv;
    for (std::size_t j = 0; j < cols_; ++j)
        reduced_[j] -= theta * prow[j];
    reduced_[q] = 0.0;

    const double inv = 1.0 / piv;
    for (std::size_t j = 0; j < cols_; ++j)
        prow[j] *= inv;
    beta_[r] *= inv;
    prow[q] = 1.0;

    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r)
            continue;
        double* row = &tableau_[i * cols_];
        const double f = row[q];
        if (f == 0.0)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            row[j] -= f * prow[j];
        row[q] = 0.0;
        beta_[i] -= f * beta_[r];
    }

    std::size_t leaving = basis_[r];
    rowOf_[leaving] = -1;
    basis_[r] = q;
    rowOf_[q] = static_cast<long>(r);
    ++sinceRefactor_;
    ++totalPivots_;
}

void DualSimplex::refactor() {
    std::vector<double> m = original_;
    std::vector<double> b = rhs_;
    std::vector<std::size_t> order = basis_;
    for (std::size_t k = 0; k < rows_; ++k) {
        const std::size_t c = order[k];
        std::size_t best = rows_;
        double bestAbs = 1e-11;
        for (std::size_t i = k; i < rows_; ++i) {
            double a = std::abs(m[i * cols_ + c]);
            if (a > bestAbs) {
                bestAbs = a;
                best = i;
            }
        }
        if (best == rows_) {
            resetToSlackBasis();
            return;
        }
        if (best != k) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m[k * cols_ + j], m[best * cols_ + j]);
            std::swap(b[k], b[best]);
        }
        const double inv = 1.0 / m[k * cols_ + c];
        for (std::size_t j = 0; j < cols_; ++j)
            m[k * cols_ + j] *= inv;
        b[k] *= inv;
        m[k * cols_ + c] = 1.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == k)
                continue;
            const double f = m[i * cols_ + c];
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                m[i * cols_ + j] -= f * m[k * cols_ + j];
            m[i * cols_ + c] = 0.0;
            b[i] -= f * b[k];
        }
    }
    tableau_ = std::move(m);
    beta_ = std::move(b);
    basis_ = std::move(order);
    for (std::size_t j = 0; j < cols_; ++j)
        rowOf_[j] = -1;
    for (std::size_t i = 0; i < rows_; ++i)
        rowOf_[basis_[i]] = static_cast<long>(i);
    for (std::size_t j = 0; j < cols_; ++j) {
        double d = cost_[j];
        for (std::size_t i = 0; i < rows_; ++i)
            d -= cost_[basis_[i]] * tableau_[i * cols_ + j];
        reduced_[j] = rowOf_[j] >= 0 ? 0.0 : d;
    }
    sinceRefactor_ = 0;
}

DualSimplex::Result DualSimplex::solve() {
    placeNonbasics();
    computeBasics();
    for (std::size_t iter = 0; iter < kMaxPivotsPerSolve; ++iter) {
        // leaving variable: smallest column index among infeasible basics
        std::size_t r = rows_;
        std::size_t leavingCol = cols_;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t c = basis_[i];
            if ((x_[c] < lo_[c] - kPrimalTol || x_[c] > hi_[c] + kPrimalTol) && c < leavingCol) {
                leavingCol = c;
                r = i;
            }
        }
        if (r == rows_)
            return Result::Optimal;

        const bool belowLower = x_[leavingCol] < lo_[leavingCol];
        const double* row = &tableau_[r * cols_];
        std::size_t q = cols_;
        double bestRatio = kInf;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rowOf_[j] >= 0 || lo_[j] == hi_[j])
                continue;
            const double a = row[j];
            if (std::abs(a) <= kPivotTol)
                continue;
            const bool canIncrease = !atUpper_[j];
            // x_B = beta - sum a_j x_j: raising x_B needs a_j x_j to shrink
            bool eligible = belowLower ? (canIncrease ? a < 0 : a > 0) : (canIncrease ? a > 0 : a < 0);
            if (!eligible)
                continue;
            double ratio = std::abs(reduced_[j]) / std::abs(a);
            if (ratio < bestRatio - 1e-12) {
                bestRatio = ratio;
                q = j;
            }
        }
        if (q == cols_)
            return Result::Infeasible;

        pivot(r, q);
        atUpper_[leavingCol] = belowLower ? 0 : 1;
        x_[leavingCol] = belowLower ? lo_[leavingCol] : hi_[leavingCol];
        if (sinceRefactor_ >= kRefactorEvery) {
            refactor();
            placeNonbasics();
        }
        computeBasics();
    }
    throw std::runtime_error("dual simplex exceeded its pivot limit");
}

}  // namespace mci::detail
