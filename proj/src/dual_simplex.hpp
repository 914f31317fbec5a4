#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mci/linear_model.hpp"

namespace mci::detail {

/**
 * Dense-tableau dual simplex for  min c.x  s.t.  A x (>=,<=,=) b,  lo <= x <= hi
 * with every structural variable boxed.
 *
 * Each row i is written A_i x + s_i = b_i with a logical variable s_i whose
 * bounds encode the sense. With boxed structurals any basis is dual feasible
 * once every nonbasic variable sits at the bound matching the sign of its
 * reduced cost, so the slack basis is a valid start and a basis left over
 * from a previous solve stays usable after bound changes (warm start inside
 * branch-and-bound).
 *
 * Pivoting follows Bland's rule: the leaving row is the infeasible basic
 * variable of smallest index, the entering column the smallest index among
 * ratio-test ties.
 */
class DualSimplex {
public:
    enum class Result { Optimal, Infeasible };

    DualSimplex(std::span<const double> cost, std::span<const Constraint> rows);

    void setBounds(std::size_t j, double lo, double hi);
    double lower(std::size_t j) const { return lo_[j]; }
    double upper(std::size_t j) const { return hi_[j]; }

    Result solve();

    double value(std::size_t j) const { return x_[j]; }
    double objective() const;
    std::size_t pivots() const { return totalPivots_; }

private:
    double& at(std::size_t i, std::size_t j) { return tableau_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return tableau_[i * cols_ + j]; }

    void placeNonbasics();
    void computeBasics();
    void pivot(std::size_t row, std::size_t col);
    void refactor();
    void resetToSlackBasis();

    std::size_t rows_ = 0;
    std::size_t structurals_ = 0;
    std::size_t cols_ = 0;

    std::vector<double> original_;  // [A | I], row-major
    std::vector<double> rhs_;
    std::vector<double> tableau_;   // B^-1 [A | I]
    std::vector<double> beta_;      // B^-1 b
    std::vector<double> cost_;
    std::vector<double> reduced_;
    std::vector<double> lo_, hi_;
    std::vector<double> x_;
    std::vector<std::size_t> basis_;  // column basic in each row
    std::vector<long> rowOf_;         // row of a basic column, -1 if nonbasic
    std::vector<char> atUpper_;

    std::size_t sinceRefactor_ = 0;
    std::size_t totalPivots_ = 0;
};

}  // namespace mci::detail
