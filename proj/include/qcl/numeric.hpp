#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcl/chain.hpp"
#include "qcl/limits.hpp"
#include "qcl/roots.hpp"

namespace qcl {

struct NumericPoint {
    std::vector<cplx> coords;
    long double epsilon = 0;
};

struct NumericOptions {
    std::vector<long double> epsilons{1e-2L, 1e-3L, 1e-4L, 1e-5L, 1e-6L};
    // Branches with a coordinate beyond this are taken to escape.
    long double divergence = 1e6L;
    // A final branch must lie this close to a branch at the previous epsilon.
    long double stability = 0.1L;
    long double cluster = 1e-3L;
};

struct NumericResult {
    std::vector<NumericPoint> points;
    // branches whose residual stayed above 1e-8 times the coefficient scale
    int unconverged = 0;
};

cplx eval_complex(const Poly& f, const std::vector<cplx>& x);

// Points of W(R) with X_1 = x1, solved level by level; escaping branches
// removed.
std::vector<std::vector<cplx>> numeric_branches(const RegularChain& R, cplx x1, const NumericOptions& opt = {},
                                                int* unconverged = nullptr);

// Limits of the branches as X_1 -> alpha along alpha + epsilon.
NumericResult numeric_branch_limits(const RegularChain& R, cplx alpha, const NumericOptions& opt = {});
// Same over every complex root of the square-free part of h_R.
NumericResult numeric_limits(const RegularChain& R, const NumericOptions& opt = {});

// All complex conjugates of a point over a tower.
std::vector<std::vector<cplx>> numeric_points(const LimitPoint& p);

struct CrossCheckReport {
    std::vector<std::vector<cplx>> symbolic;  // conjugates of the symbolic points
    std::vector<std::vector<cplx>> numeric;
    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::vector<std::size_t> unmatched_symbolic, unmatched_numeric;

    bool full() const { return unmatched_symbolic.empty() && unmatched_numeric.empty(); }
    std::string str() const;
};

// Maximum bipartite matching at max-norm distance <= tol.
CrossCheckReport cross_check(const std::vector<LimitPoint>& symbolic, const std::vector<NumericPoint>& numeric,
                             long double tol);

}  // namespace qcl
